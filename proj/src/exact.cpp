#include "rbsym/exact.hpp"

#include "rbsym/errors.hpp"

namespace rbsym {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

Integer binomial(long long n, long long k) {
  if (k < 0)
    return 0;
  if (k == 0)
    return 1;
  if (n < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

Integer exact_divide(const Integer& a, const Integer& b, const char* what) {
  if (b == 0)
    throw ConsistencyError(std::string(what) + ": division by zero");
  if (a % b != 0)
    throw ConsistencyError(std::string(what) + ": " + a.str() + " is not divisible by " + b.str());
  return a / b;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& num, const std::string& den) {
  try {
    Integer n(num);
    Integer d(den);
    if (d == 0)
      throw ValidationError("zero denominator");
    return Rational(n, d);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ValidationError*>(&e))
      throw;
    throw ValidationError("malformed rational '" + num + "/" + den + "'");
  }
}

} // namespace rbsym
