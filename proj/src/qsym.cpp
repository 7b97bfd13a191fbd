#include "rbsym/qsym.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

namespace rbsym {

std::string basis_name(QBasis b) { return b == QBasis::Monomial ? "M" : "F"; }
std::string basis_name(SymBasis b) { return b == SymBasis::PowerSum ? "p" : "m"; }

namespace {

void require_basis(const QSymElement& x, QBasis b, const char* op) {
  if (x.basis() != b)
    throw ValidationError(std::string(op) + " expects basis " + basis_name(b) + ", got " +
                          basis_name(x.basis()));
}

void require_basis(const SymElement& x, SymBasis b, const char* op) {
  if (x.basis() != b)
    throw ValidationError(std::string(op) + " expects basis " + basis_name(b) + ", got " +
                          basis_name(x.basis()));
}

// Iterates supersets J of `bits` inside [n-1].
template <class Fn>
void for_each_superset(int n, Mask bits, Fn&& fn) {
  const Mask universe = n <= 1 ? 0 : full_mask(n - 1);
  const Mask free = universe & ~bits;
  Mask sub = free;
  while (true) {
    fn(bits | sub);
    if (sub == 0)
      break;
    sub = (sub - 1) & free;
  }
}

void quasi_shuffle(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                   std::vector<int>& prefix, const Integer& coeff, QSymElement& out) {
  if (i == a.size() && j == b.size()) {
    out.add(Composition(prefix), coeff);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, prefix, coeff, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, prefix, coeff, out);
    prefix.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    prefix.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, prefix, coeff, out);
    prefix.pop_back();
  }
}

/// Number of distinct rearrangements of a partition's parts.
Integer rearrangements(const Partition& p) {
  Integer r = factorial(p.length());
  for (std::size_t i = 0; i < p.parts().size();) {
    std::size_t j = i;
    while (j < p.parts().size() && p[j] == p[i])
      ++j;
    r /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

/// Row mu of the p-to-m transition for one degree: coefficient of m_lambda in
/// p_mu, for all lambda. Partitions are indexed in increasing lexicographic
/// order, which refines dominance, so the matrix is lower triangular.
struct PowerSumTable {
  std::vector<Partition> parts; // increasing lexicographic
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<Integer>> coeff; // coeff[mu][lambda]
};

const PowerSumTable& power_sum_table(int n) {
  static std::mutex mu;
  static std::map<int, PowerSumTable> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  PowerSumTable t;
  t.parts = partitions(n);
  std::reverse(t.parts.begin(), t.parts.end());
  for (std::size_t i = 0; i < t.parts.size(); ++i)
    t.index.emplace(t.parts[i], i);
  t.coeff.assign(t.parts.size(), std::vector<Integer>(t.parts.size()));
  for (std::size_t r = 0; r < t.parts.size(); ++r) {
    const QSymElement row = p_to_m(SymElement(SymBasis::PowerSum, t.parts[r]));
    for (std::size_t c = 0; c < t.parts.size(); ++c)
      t.coeff[r][c] = row.coefficient(t.parts[c].as_composition());
  }
  return cache.emplace(n, std::move(t)).first->second;
}

} // namespace

QSymElement f_to_m(const QSymElement& x) {
  require_basis(x, QBasis::Fundamental, "f_to_m");
  QSymElement out(QBasis::Monomial);
  for (const auto& [alpha, c] : x.terms()) {
    const int n = alpha.degree();
    for_each_superset(n, descent_mask(alpha), [&](Mask j) { out.add(comp_of_mask(n, j), c); });
  }
  return out;
}

QSymElement m_to_f(const QSymElement& x) {
  require_basis(x, QBasis::Monomial, "m_to_f");
  QSymElement out(QBasis::Fundamental);
  for (const auto& [alpha, c] : x.terms()) {
    const int n = alpha.degree();
    const Mask base = descent_mask(alpha);
    for_each_superset(n, base, [&](Mask j) {
      const bool odd = popcount(j & ~base) % 2 == 1;
      out.add(comp_of_mask(n, j), odd ? Integer(-c) : c);
    });
  }
  return out;
}

QSymElement m_product(const QSymElement& a, const QSymElement& b) {
  require_basis(a, QBasis::Monomial, "m_product");
  require_basis(b, QBasis::Monomial, "m_product");
  QSymElement out(QBasis::Monomial);
  std::vector<int> prefix;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      quasi_shuffle(ka.parts(), 0, kb.parts(), 0, prefix, ca * cb, out);
  return out;
}

QSymElement p_to_m(const SymElement& x) {
  require_basis(x, SymBasis::PowerSum, "p_to_m");
  QSymElement out(QBasis::Monomial);
  for (const auto& [lambda, c] : x.terms()) {
    if (!is_integral(c))
      throw PrecisionError("p_to_m: coefficient " + to_string(c) + " of p" + to_string(lambda) +
                           " is not an integer");
    QSymElement term(QBasis::Monomial, Composition{}, Integer(boost::multiprecision::numerator(c)));
    for (int part : lambda.parts())
      term = m_product(term, QSymElement(QBasis::Monomial, Composition{part}));
    out += term;
  }
  return out;
}

bool is_symmetric(const QSymElement& x) {
  require_basis(x, QBasis::Monomial, "is_symmetric");
  struct ClassInfo {
    Integer coeff;
    Integer count = 0;
  };
  std::map<Partition, ClassInfo> classes;
  for (const auto& [alpha, c] : x.terms()) {
    auto [it, inserted] = classes.try_emplace(alpha.sorted(), ClassInfo{c, 0});
    if (!inserted && it->second.coeff != c)
      return false;
    it->second.count += 1;
  }
  for (const auto& [lambda, info] : classes)
    if (info.count != rearrangements(lambda))
      return false;
  return true;
}

SymElement m_to_p(const QSymElement& x) {
  require_basis(x, QBasis::Monomial, "m_to_p");
  if (!is_symmetric(x))
    throw DomainError("m_to_p: element is not symmetric");
  std::map<int, std::map<Partition, Integer>> by_degree;
  for (const auto& [alpha, c] : x.terms())
    if (alpha.sorted().as_composition() == alpha)
      by_degree[alpha.degree()].emplace(alpha.sorted(), c);

  SymElement out(SymBasis::PowerSum);
  for (const auto& [n, mcoeff] : by_degree) {
    const PowerSumTable& t = power_sum_table(n);
    std::vector<Rational> y(t.parts.size());
    for (std::size_t l = 0; l < t.parts.size(); ++l) {
      auto it = mcoeff.find(t.parts[l]);
      Rational rhs = it == mcoeff.end() ? Rational(0) : Rational(it->second);
      for (std::size_t m = 0; m < l; ++m)
        if (t.coeff[m][l] != 0)
          rhs -= y[m] * Rational(t.coeff[m][l]);
      if (t.coeff[l][l] == 0)
        throw ConsistencyError("m_to_p: singular power-sum transition at degree " + std::to_string(n));
      y[l] = rhs / Rational(t.coeff[l][l]);
    }
    for (std::size_t l = 0; l < t.parts.size(); ++l)
      out.add(t.parts[l], y[l]);
  }

  bool integral = true;
  for (const auto& [lambda, c] : out.terms())
    integral = integral && is_integral(c);
  if (integral && !(p_to_m(out) == x))
    throw ConsistencyError("m_to_p: round trip through p_to_m failed");
  return out;
}

SymElement p_product(const SymElement& a, const SymElement& b) {
  require_basis(a, SymBasis::PowerSum, "p_product");
  require_basis(b, SymBasis::PowerSum, "p_product");
  SymElement out(SymBasis::PowerSum);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add(ka.concat(kb), ca * cb);
  return out;
}

Rational principal_specialization(const QSymElement& x, int m) {
  if (m < 0)
    throw ValidationError("principal specialization needs m >= 0");
  Rational total = 0;
  for (const auto& [alpha, c] : x.terms()) {
    const int n = alpha.degree();
    Integer value;
    if (n == 0)
      value = 1;
    else if (x.basis() == QBasis::Fundamental)
      // |I| = length - 1
      value = binomial(n - (alpha.length() - 1) + m - 1, n);
    else
      value = binomial(m, alpha.length());
    total += Rational(c * value);
  }
  return total;
}

Rational principal_specialization(const SymElement& x, int m) {
  if (m < 0)
    throw ValidationError("principal specialization needs m >= 0");
  Rational total = 0;
  for (const auto& [lambda, c] : x.terms()) {
    Integer value;
    if (x.basis() == SymBasis::PowerSum)
      value = boost::multiprecision::pow(Integer(m), static_cast<unsigned>(lambda.length()));
    else
      value = rearrangements(lambda) * binomial(m, lambda.length());
    total += c * Rational(value);
  }
  return total;
}

namespace {

template <class Elem>
std::string render(const Elem& x, const std::string& prefix) {
  if (x.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first)
      os << ", ";
    os << prefix << to_string(k) << ": " << to_string(c);
    first = false;
  }
  return os.str();
}

} // namespace

std::string to_text(const QSymElement& x) { return render(x, basis_name(x.basis())); }
std::string to_text(const SymElement& x) { return render(x, basis_name(x.basis())); }

} // namespace rbsym
