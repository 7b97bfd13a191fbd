#include <doctest.h>

#include <random>
#include <set>

#include "rbsym/hopf.hpp"
#include "rbsym/redei_berge.hpp"
#include "support.hpp"

using namespace rbsym;
using namespace testing_support;

namespace {

template <class T>
FreeModuleElement<T> basis(const T& x) {
  return FreeModuleElement<T>(x);
}

std::vector<Digraph> digraph_classes(int n, bool loops) {
  std::set<Digraph> seen;
  const int pairs = loops ? n * n : n * (n - 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
    seen.insert(canonical_form(digraph_from_bits(n, bits, loops)));
  return {seen.begin(), seen.end()};
}

std::vector<Digraph> digraph_classes_up_to(int n, bool loops) {
  std::vector<Digraph> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& x : digraph_classes(m, loops))
      out.push_back(x);
  return out;
}

std::vector<Poset> posets_up_to(int n) {
  std::vector<Poset> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : enumerate_posets(m, false))
      out.push_back(p);
  return out;
}

std::vector<Permutation> perms_up_to(int n) {
  std::vector<Permutation> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : permutations(m))
      out.push_back(p);
  return out;
}

// zeta_alpha read literally: Delta^{(k-1)}, keep tuples with the right
// degrees, multiply characters.
template <class T>
Integer zeta_alpha_literal(const T& x, const Composition& alpha) {
  using S = HopfSpecies<T>;
  Integer total = 0;
  const auto t = iterated_coproduct(x, std::max(alpha.length(), 1));
  for (const auto& [key, c] : t.terms()) {
    Integer prod = c;
    for (std::size_t i = 0; i < key.size(); ++i) {
      const int want = alpha.empty() ? 0 : alpha[i];
      if (S::degree(key[i]) != want) {
        prod = 0;
        break;
      }
      prod *= S::character(key[i]);
    }
    total += prod;
  }
  return total;
}

// zeta_alpha of a digraph over set compositions of its vertex set.
Integer zeta_alpha_set_compositions(const Digraph& x, const Composition& alpha) {
  Integer total = 0;
  for_each_set_composition(full_mask(x.n()), alpha, [&](const SetComposition& s) {
    Integer prod = 1;
    for (Mask b : s.blocks)
      prod *= count_hamiltonian_paths(complement(restrict(x, b)));
    total += prod;
  });
  return total;
}

template <class T>
void check_coassociative(const T& x) {
  TensorElement<T> single;
  single.add({HopfSpecies<T>::key(x)}, 1);
  const TensorElement<T> d = coproduct_at(single, 0);
  CHECK(coproduct_at(d, 0) == coproduct_at(d, 1));
}

template <class T>
void check_counit(const T& x) {
  // Exactly one term with an empty left factor, and it is 1 (x) x.
  Integer left = 0, right = 0;
  const auto d = coproduct_of(x);
  for (const auto& [k, c] : d.terms()) {
    if (HopfSpecies<T>::degree(k[0]) == 0) {
      CHECK(k[1] == HopfSpecies<T>::key(x));
      left += c;
    }
    if (HopfSpecies<T>::degree(k[1]) == 0) {
      CHECK(k[0] == HopfSpecies<T>::key(x));
      right += c;
    }
  }
  CHECK(left == 1);
  CHECK(right == 1);
}

} // namespace

TEST_SUITE("hopf") {

TEST_CASE("products") {
  CHECK(hopf_product(basis(Digraph(1)), basis(Digraph(1))) == basis(Digraph::from_edges(2, {{1, 2}})));
  CHECK(hopf_product(basis(Permutation{1}), basis(Permutation{1})) == basis(Permutation{1, 2}));
  CHECK(hopf_product(basis(chain_poset(1)), basis(chain_poset(1))) == basis(chain_poset(2)));
  CHECK(hopf_product(basis(Permutation{2, 1}), basis(Permutation{1})) == basis(Permutation{2, 1, 3}));
  // Unit and associativity on a sample.
  const auto p = basis(Permutation{2, 3, 1});
  CHECK(hopf_product(basis(Permutation{}), p) == p);
  CHECK(hopf_product(p, basis(Permutation{})) == p);
  const auto a = basis(Permutation{2, 1}), b = basis(Permutation{1});
  CHECK(hopf_product(hopf_product(a, b), p) == hopf_product(a, hopf_product(b, p)));
  // Digraph keys are isomorphism classes.
  CHECK(basis(Digraph::from_edges(2, {{1, 2}})) == basis(Digraph::from_edges(2, {{2, 1}})));
}

TEST_CASE("coproduct examples") {
  TensorElement<Digraph> d1;
  d1.add({Digraph(0), Digraph(1)}, 1);
  d1.add({Digraph(1), Digraph(0)}, 1);
  CHECK(coproduct_of(Digraph(1)) == d1);

  const Digraph e = canonical_form(Digraph::from_edges(2, {{1, 2}}));
  TensorElement<Digraph> d2;
  d2.add({Digraph(0), e}, 1);
  d2.add({Digraph(1), Digraph(1)}, 2);
  d2.add({e, Digraph(0)}, 1);
  CHECK(coproduct_of(e) == d2);

  TensorElement<Permutation> ds;
  ds.add({Permutation{}, Permutation{2, 1}}, 1);
  ds.add({Permutation{1}, Permutation{1}}, 2);
  ds.add({Permutation{2, 1}, Permutation{}}, 1);
  CHECK(coproduct_of(Permutation{2, 1}) == ds);
  CHECK(hopf_coproduct(basis(Permutation{2, 1})) == ds);
}

TEST_CASE("characters") {
  CHECK(character(basis(Digraph::from_edges(2, {{1, 2}}))) == 1);
  CHECK(character(basis(antichain_poset(3))) == 6);
  CHECK(character(basis(Permutation::identity(2))) == 1);
  CHECK(character(basis(Digraph(0))) == 1);
}

TEST_CASE("zeta_alpha") {
  const Digraph tri = Digraph::from_edges(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(zeta_alpha(basis(tri), Composition{3}) == character(basis(tri)));
  CHECK(zeta_alpha(basis(Digraph::from_edges(2, {{1, 2}})), Composition{1, 1}) == 2);
  CHECK(zeta_alpha(basis(tri), Composition{1, 1, 1}) == 6);
  CHECK_THROWS_AS(zeta_alpha(basis(tri), Composition{1, 1}), ValidationError);
  for (const Digraph& x : digraph_classes_up_to(4, false))
    for (const auto& alpha : compositions(x.n())) {
      const Integer z = zeta_alpha(basis(x), alpha);
      CHECK(z == zeta_alpha_literal(x, alpha));
      CHECK(z == zeta_alpha_set_compositions(x, alpha));
    }
  for (const Poset& p : posets_up_to(4))
    for (const auto& alpha : compositions(p.n()))
      CHECK(zeta_alpha(basis(p), alpha) == zeta_alpha_literal(p, alpha));
  for (const Permutation& s : perms_up_to(4))
    for (const auto& alpha : compositions(s.size()))
      CHECK(zeta_alpha(basis(s), alpha) == zeta_alpha_literal(s, alpha));
}

TEST_CASE("psi examples") {
  const QSymElement m1(QBasis::Monomial, Composition{1});
  CHECK(psi(basis(Digraph(1))) == m1);
  CHECK(psi(basis(Digraph::from_edges(2, {{1, 2}}))) ==
        QSymElement(QBasis::Monomial, Composition{2}) + QSymElement(QBasis::Monomial, Composition{1, 1}, 2));
  CHECK(psi(basis(Digraph(2))) ==
        QSymElement(QBasis::Monomial, Composition{2}, 2) + QSymElement(QBasis::Monomial, Composition{1, 1}, 2));
}

TEST_CASE("coassociativity and counit up to degree 4") {
  for (const Digraph& x : digraph_classes_up_to(4, true)) {
    check_coassociative(x);
    check_counit(x);
  }
  for (const Poset& p : posets_up_to(4)) {
    check_coassociative(p);
    check_counit(p);
  }
  for (const Permutation& s : perms_up_to(4)) {
    check_coassociative(s);
    check_counit(s);
  }
}

TEST_CASE("digraph coproduct is cocommutative") {
  for (const Digraph& x : digraph_classes_up_to(4, true)) {
    const auto d = coproduct_of(x);
    CHECK(swap_factors(d) == d);
  }
}

TEST_CASE("coproduct is multiplicative") {
  std::mt19937_64 rng(23);
  const auto ds = digraph_classes_up_to(3, true);
  const auto ps = posets_up_to(3);
  const auto ss = perms_up_to(3);
  std::uniform_int_distribution<std::size_t> pick_d(0, ds.size() - 1), pick_p(0, ps.size() - 1),
      pick_s(0, ss.size() - 1);
  for (int i = 0; i < 60; ++i) {
    const auto a = basis(ds[pick_d(rng)]), b = basis(ds[pick_d(rng)]);
    CHECK(hopf_coproduct(hopf_product(a, b)) == tensor_product(hopf_coproduct(a), hopf_coproduct(b)));
    const auto c = basis(ps[pick_p(rng)]), d = basis(ps[pick_p(rng)]);
    CHECK(hopf_coproduct(hopf_product(c, d)) == tensor_product(hopf_coproduct(c), hopf_coproduct(d)));
    const auto e = basis(ss[pick_s(rng)]), f = basis(ss[pick_s(rng)]);
    CHECK(hopf_coproduct(hopf_product(e, f)) == tensor_product(hopf_coproduct(e), hopf_coproduct(f)));
  }
}

TEST_CASE("characters are multiplicative") {
  // Loops never change the digraph character, so loopless classes suffice.
  const auto ds = digraph_classes_up_to(4, false);
  for (const auto& x : ds)
    for (const auto& y : ds)
      CHECK(character(hopf_product(basis(x), basis(y))) == character(basis(x)) * character(basis(y)));
  const auto ps = posets_up_to(4);
  for (const auto& p : ps)
    for (const auto& q : ps)
      CHECK(character(hopf_product(basis(p), basis(q))) == character(basis(p)) * character(basis(q)));
  const auto ss = perms_up_to(4);
  for (const auto& s : ss)
    for (const auto& t : ss)
      CHECK(character(hopf_product(basis(s), basis(t))) == character(basis(s)) * character(basis(t)));
}

TEST_CASE("psi is an algebra morphism") {
  const auto ds = digraph_classes_up_to(3, true);
  for (const auto& x : ds)
    for (const auto& y : ds)
      CHECK(psi(hopf_product(basis(x), basis(y))) == m_product(psi(basis(x)), psi(basis(y))));
  const auto ss = perms_up_to(3);
  for (const auto& s : ss)
    for (const auto& t : ss)
      CHECK(psi(hopf_product(basis(s), basis(t))) == m_product(psi(basis(s)), psi(basis(t))));
}

TEST_CASE("morphisms f and g") {
  CHECK(morphism_f(Permutation::identity(3)) == basis(chain_poset(3)));
  CHECK(morphism_g(chain_poset(3)) == basis(Digraph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}})));
  CHECK(morphism_g(antichain_poset(2)) == basis(Digraph(2)));

  for (const Permutation& s : perms_up_to(4)) {
    const auto fs = morphism_f(s);
    CHECK(character(basis(s)) == character(fs));
    CHECK(psi(basis(s)) == psi(fs));
    CHECK(map_tensor<Permutation, Poset>(coproduct_of(s), perm_to_poset) == hopf_coproduct(fs));
  }
  for (const Poset& p : posets_up_to(4)) {
    const auto gp = morphism_g(p);
    CHECK(character(basis(p)) == character(gp));
    CHECK(psi(gp) == f_to_m(u_via_listings(poset_to_digraph(p))));
    CHECK(psi(basis(p)) == psi(gp));
    CHECK(map_tensor<Poset, Digraph>(coproduct_of(p), poset_to_digraph) == hopf_coproduct(gp));
  }
  const auto ss = perms_up_to(3);
  for (const auto& s : ss)
    for (const auto& t : ss)
      CHECK(morphism_f(hopf_product(basis(s), basis(t))) == hopf_product(morphism_f(s), morphism_f(t)));
  const auto ps = posets_up_to(3);
  for (const auto& p : ps)
    for (const auto& q : ps)
      CHECK(morphism_g(hopf_product(basis(p), basis(q))) == hopf_product(morphism_g(p), morphism_g(q)));
}

TEST_CASE("the composite g f carries the permutation character") {
  // sigma-reversing only looks at adjacent positions, exactly like an empty
  // descent set in the complement of D_{P_sigma}. So the permutation
  // character factors through digraphs even where it differs from the
  // linear-extension count of P_sigma.
  for (const Permutation& s : perms_up_to(5)) {
    const auto gfs = morphism_g(morphism_f(s));
    CHECK(character(basis(s)) == character(gfs));
    if (s.size() <= 4)
      CHECK(psi(basis(s)) == f_to_m(u_of_perm(s).fundamental));
  }
  // Smallest poset separating the two counts: 1 < 3 with 2 free. The
  // listing 1 2 3 has no adjacent comparable pair but puts 1 before 3.
  const Poset p = Poset::from_relations(3, {{1, 3}}, RelationKind::Full);
  CHECK(linear_extensions_count(p) == 3);
  CHECK(count_hamiltonian_paths(complement(poset_to_digraph(p))) == 4);
}

}
