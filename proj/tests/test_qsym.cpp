#include <doctest.h>

#include <map>
#include <random>

#include "rbsym/qsym.hpp"

using namespace rbsym;

namespace {

QSymElement M(std::initializer_list<int> parts, Integer c = 1) {
  return QSymElement(QBasis::Monomial, Composition(parts), c);
}
QSymElement F(std::initializer_list<int> comp, Integer c = 1) {
  return QSymElement(QBasis::Fundamental, Composition(comp), c);
}
SymElement P(std::initializer_list<int> parts, Rational c = 1) {
  return SymElement(SymBasis::PowerSum, Partition(parts), c);
}

// Polynomials in k variables, exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Integer>;

Poly monomial_qsym_poly(const Composition& a, int k) {
  Poly out;
  const int l = a.length();
  std::vector<int> idx(static_cast<std::size_t>(l));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == l) {
      std::vector<int> e(static_cast<std::size_t>(k), 0);
      for (int i = 0; i < l; ++i)
        e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = a[static_cast<std::size_t>(i)];
      out[e] += 1;
      return;
    }
    for (int v = from; v < k; ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Read the M-expansion of a quasisymmetric polynomial in k variables off the
// coefficients of x_1^{g_1} ... x_l^{g_l}.
QSymElement poly_to_m(const Poly& p, int degree, int k) {
  QSymElement out(QBasis::Monomial);
  for_each_composition(degree, [&](const Composition& g) {
    if (g.length() > k)
      return;
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < g.length(); ++i)
      e[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
    auto it = p.find(e);
    if (it != p.end())
      out.add(g, it->second);
  });
  return out;
}

// F_I(1^m) straight from the defining sum: weakly increasing index
// sequences in [m], strict at the positions of I.
Integer brute_fundamental(const Composition& alpha, int m) {
  const int n = alpha.degree();
  const Mask desc = descent_mask(alpha);
  Integer count = 0;
  std::vector<int> seq;
  std::function<void()> rec = [&] {
    const int pos = static_cast<int>(seq.size());
    if (pos == n) {
      ++count;
      return;
    }
    const int lo = pos == 0 ? 1 : seq.back() + ((desc >> (pos - 1) & 1U) ? 1 : 0);
    for (int v = lo; v <= m; ++v) {
      seq.push_back(v);
      rec();
      seq.pop_back();
    }
  };
  rec();
  return count;
}

std::vector<Composition> compositions_up_to(int d) {
  std::vector<Composition> out;
  for (int n = 0; n <= d; ++n)
    for (const auto& c : compositions(n))
      out.push_back(c);
  return out;
}

} // namespace

TEST_SUITE("qsym") {

TEST_CASE("f_to_m examples") {
  CHECK(f_to_m(F({1, 1})) == M({1, 1}));
  CHECK(f_to_m(F({2})) == M({2}) + M({1, 1}));
  CHECK(f_to_m(F({1})) == M({1}));
  CHECK_THROWS_AS(f_to_m(M({1})), ValidationError);
}

TEST_CASE("m_to_f inverts f_to_m") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& a : compositions(n)) {
      const QSymElement f(QBasis::Fundamental, a, 1);
      CHECK(m_to_f(f_to_m(f)) == f);
      const QSymElement m(QBasis::Monomial, a, 1);
      CHECK(f_to_m(m_to_f(m)) == m);
    }
}

TEST_CASE("m_product examples") {
  CHECK(m_product(M({1}), M({1})) == M({1, 1}, 2) + M({2}));
  CHECK(m_product(M({2}), M({1})) == M({2, 1}) + M({1, 2}) + M({3}));
  CHECK(m_product(M({}), M({1})) == M({1}));
}

TEST_CASE("m_product agrees with truncated polynomial multiplication") {
  const auto comps = compositions_up_to(5);
  for (const auto& a : comps)
    for (const auto& b : comps) {
      if (a.degree() + b.degree() > 5)
        continue;
      const int k = std::max(1, a.length() + b.length());
      const Poly prod = poly_mul(monomial_qsym_poly(a, k), monomial_qsym_poly(b, k));
      const QSymElement expected = poly_to_m(prod, a.degree() + b.degree(), k);
      CHECK(m_product(QSymElement(QBasis::Monomial, a), QSymElement(QBasis::Monomial, b)) == expected);
    }
}

TEST_CASE("m_product is commutative and associative up to degree 6") {
  const auto comps = compositions_up_to(6);
  for (const auto& a : comps)
    for (const auto& b : comps) {
      if (a.degree() + b.degree() > 6)
        continue;
      const QSymElement ea(QBasis::Monomial, a), eb(QBasis::Monomial, b);
      CHECK(m_product(ea, eb) == m_product(eb, ea));
      for (const auto& c : comps) {
        if (a.degree() + b.degree() + c.degree() > 6)
          continue;
        const QSymElement ec(QBasis::Monomial, c);
        CHECK(m_product(m_product(ea, eb), ec) == m_product(ea, m_product(eb, ec)));
      }
    }
}

TEST_CASE("p_to_m examples") {
  CHECK(p_to_m(P({2})) == M({2}));
  CHECK(p_to_m(P({1, 1})) == M({2}) + M({1, 1}, 2));
  CHECK(p_to_m(P({3})) == M({3}));
  CHECK_THROWS_AS(p_to_m(P({2}, Rational(1, 2))), PrecisionError);
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(M({2}) + M({1, 1}, 2)));
  CHECK(is_symmetric(M({2, 1}) + M({1, 2})));
  CHECK_FALSE(is_symmetric(M({2, 1})));
  CHECK_FALSE(is_symmetric(M({2, 1}) + M({1, 2}, 2)));
}

TEST_CASE("m_to_p examples") {
  CHECK(m_to_p(M({2}) + M({1, 1}, 2)) == P({1, 1}));
  CHECK(m_to_p(M({2})) == P({2}));
  CHECK(m_to_p(M({2}, 2) + M({1, 1}, 2)) == P({1, 1}) + P({2}));
  CHECK_THROWS_AS(m_to_p(M({2, 1})), DomainError);
  // m_(1,1) = (p_11 - p_2) / 2 needs rationals.
  CHECK(m_to_p(M({1, 1})) == P({1, 1}, Rational(1, 2)) + P({2}, Rational(-1, 2)));
}

TEST_CASE("p_to_m and m_to_p are mutually inverse up to degree 8") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions(n)) {
      const SymElement p(SymBasis::PowerSum, lambda, 1);
      CHECK(m_to_p(p_to_m(p)) == p);
      // The symmetric monomial m_lambda: every rearrangement with weight 1.
      QSymElement m(QBasis::Monomial);
      for_each_composition(n, [&](const Composition& a) {
        if (a.sorted() == lambda)
          m.add(a, 1);
      });
      REQUIRE(is_symmetric(m));
      // m_lambda has fractional p-coefficients; clear denominators first.
      const SymElement y = m_to_p(m);
      Integer d = 1;
      for (const auto& [mu, c] : y.terms())
        d = boost::multiprecision::lcm(d, Integer(denominator(c)));
      CHECK(p_to_m(y * Rational(d)) == m * d);
    }
}

TEST_CASE("principal specialization examples") {
  CHECK(principal_specialization(F({1, 1}), 3) == 3);
  CHECK(principal_specialization(P({1, 1}), 2) == 4);
  CHECK(principal_specialization(F({2}), 2) == 3);
  CHECK(principal_specialization(F({}), 0) == 1);
  CHECK(principal_specialization(P({2, 1}), 0) == 0);
}

TEST_CASE("fundamental specialization matches the defining sum") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : compositions(n))
      for (int m = 0; m <= 3; ++m)
        CHECK(principal_specialization(QSymElement(QBasis::Fundamental, a), m) == Rational(brute_fundamental(a, m)));
}

TEST_CASE("f_to_m preserves specialization and symmetry status") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    QSymElement f(QBasis::Fundamental);
    const int n = 1 + trial % 5;
    for (const auto& a : compositions(n))
      f.add(a, coeff(rng));
    const QSymElement m = f_to_m(f);
    for (int k = 0; k <= 4; ++k)
      CHECK(principal_specialization(f, k) == principal_specialization(m, k));
    CHECK(is_symmetric(m) == is_symmetric(f_to_m(m_to_f(m))));
  }
}

TEST_CASE("specialization is multiplicative") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_element = [&](int n) {
    QSymElement x(QBasis::Monomial);
    for (const auto& a : compositions(n))
      x.add(a, coeff(rng));
    return x;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int da = 1 + trial % 3, db = 1 + (trial / 3) % 3;
    const QSymElement a = random_element(da), b = random_element(db);
    const QSymElement ab = m_product(a, b);
    for (int m = 0; m <= 4; ++m)
      CHECK(principal_specialization(ab, m) == principal_specialization(a, m) * principal_specialization(b, m));
  }
}

TEST_CASE("coefficients, degree parts and text rendering") {
  const SymElement u = P({1, 1}) + P({3}, 2);
  CHECK(u.coefficient(Partition{3}) == 2);
  CHECK(M({2}).coefficient(Composition{1, 1}) == 0);
  CHECK(F({2}, 2).coefficient(Composition{2}) == 2);
  const QSymElement mixed = M({1}) + M({2, 1}, 3);
  CHECK(mixed.degree_part(3) == M({2, 1}, 3));
  CHECK(to_text(P({1, 1}) + P({2})) == "p[1,1]: 1, p[2]: 1");
  CHECK(to_text(QSymElement(QBasis::Fundamental)) == "0");
  CHECK(to_text(P({2}, Rational(-1, 2))) == "p[2]: -1/2");
  CHECK_THROWS_AS(M({1}) + F({1}), ValidationError);
}

TEST_CASE("power-sum product concatenates") {
  CHECK(p_product(P({2}) + P({1, 1}), P({1})) == P({2, 1}) + P({1, 1, 1}));
}

}
