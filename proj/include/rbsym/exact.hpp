#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);

/// C(n, k), with C(n, 0) = 1 for every n and zero for any other k outside
/// [0, n].
Integer binomial(long long n, long long k);

/// True when the rational has denominator 1.
bool is_integral(const Rational& q);

/// Exact quotient a / b; throws ConsistencyError when b does not divide a.
Integer exact_divide(const Integer& a, const Integer& b, const char* what);

std::string to_string(const Integer& x);

/// "num" for integers, "num/den" otherwise.
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& num, const std::string& den);

} // namespace rbsym
