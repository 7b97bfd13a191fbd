#include <doctest.h>

#include <set>

#include "rbsym/errors.hpp"
#include "rbsym/order.hpp"
#include "support.hpp"

using namespace rbsym;
using namespace testing_support;

namespace {

Poset vee() { return Poset::from_relations(3, {{1, 3}, {2, 3}}); }

// Every relation on [n] that satisfies the strict partial order axioms,
// checked directly on all 2^(n^2) candidates.
std::vector<std::vector<std::vector<bool>>> brute_posets(int n) {
  std::vector<std::vector<std::vector<bool>>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
    std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bits >> (i * n + j) & 1U;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = !r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
              r[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])
            ok = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    if (ok)
      out.push_back(r);
  }
  return out;
}

std::vector<Poset> all_posets_up_to(int n) {
  std::vector<Poset> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& p : enumerate_posets(m, false))
      out.push_back(p);
  return out;
}

} // namespace

TEST_SUITE("order") {

TEST_CASE("validation and closure") {
  const Poset p = Poset::from_relations(3, {{1, 2}, {2, 3}});
  CHECK(p.less(1, 3));
  CHECK(p.cover_relations() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(Poset::from_relations(2, {{1, 2}, {2, 1}}), ValidationError);
  CHECK_THROWS_AS(Poset::from_relations(2, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(Poset::from_relations(3, {{1, 2}, {2, 3}}, RelationKind::Full), ValidationError);
  CHECK_THROWS_AS(Poset::from_relations(2, {{1, 3}}), ValidationError);
}

TEST_CASE("perm_to_poset and poset_to_digraph") {
  CHECK(perm_to_poset(Permutation::identity(4)) == chain_poset(4));
  CHECK(perm_to_poset(Permutation{2, 1}) == antichain_poset(2));
  CHECK(perm_to_poset(Permutation{1, 3, 2}).relations() == std::vector<Edge>{{1, 2}, {1, 3}});
  CHECK(poset_to_digraph(chain_poset(3)) == Digraph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(poset_to_digraph(antichain_poset(3)).edge_count() == 0);
  CHECK(poset_to_digraph(vee()) == Digraph::from_edges(3, {{1, 3}, {2, 3}}));
}

TEST_CASE("minimal and maximal elements") {
  CHECK(min_max_counts(chain_poset(5)) == MinMaxCounts{1, 1});
  CHECK(min_max_counts(antichain_poset(4)) == MinMaxCounts{4, 4});
  CHECK(min_max_counts(vee()) == MinMaxCounts{2, 1});
  CHECK(min_max_counts(dual(vee())) == MinMaxCounts{1, 2});
}

TEST_CASE("linear extensions") {
  CHECK(linear_extensions_count(antichain_poset(3)) == 6);
  CHECK(linear_extensions_count(chain_poset(3)) == 1);
  CHECK(linear_extensions_count(vee()) == 2);
  CHECK(linear_extensions_count(antichain_poset(20)) == 2432902008176640000ULL);
  CHECK_THROWS_AS(linear_extensions_count(antichain_poset(21)), CapacityError);
  for (const Poset& p : all_posets_up_to(5)) {
    CHECK(linear_extensions_count(p) == linear_extensions_count(dual(p)));
    if (p.n() <= 7)
      CHECK(linear_extensions_count(p) == linear_extensions_by_listings(p));
    CHECK(count_hamiltonian_paths(complement(poset_to_digraph(p))) == linear_extensions_count(p));
  }
}

TEST_CASE("sigma-reversing permutations") {
  CHECK(sigma_reversing_count(Permutation::identity(2)) == 1);
  CHECK(sigma_reversing_count(Permutation{2, 1}) == 2);
  CHECK(sigma_reversing_count(Permutation::identity(3)) == 1);
  for (int n = 0; n <= 5; ++n)
    for (const auto& s : permutations(n))
      CHECK(sigma_reversing_count(s) == linear_extensions_count(dual(perm_to_poset(s))));
}

TEST_CASE("chains") {
  const Poset p = disjoint_union(chain_poset(2), chain_poset(1));
  CHECK(count_chains(p, 1) == 3);
  CHECK(count_chains(p, 2) == 1);
  CHECK(chain_structure(p) == Partition{2, 1});
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(Integer(count_chains(chain_poset(n), k)) == binomial(n, k));
  CHECK_FALSE(chain_structure(vee()).has_value());
  CHECK_THROWS_AS(count_chains(vee(), 4), ValidationError);
  CHECK(chain_union(Partition{3, 1, 1}) == disjoint_union(disjoint_union(chain_poset(3), chain_poset(1)), chain_poset(1)));
}

TEST_CASE("digraph of a poset") {
  for (const Poset& p : all_posets_up_to(5)) {
    const Digraph d = poset_to_digraph(p);
    CHECK(is_acyclic(d));
    CHECK(d.loop_count() == 0);
    for (int k = 1; k <= p.n(); ++k)
      CHECK(count_paths(d, k) == count_chains(p, k));
  }
}

TEST_CASE("enumeration matches the brute-force axiom filter") {
  for (int n = 0; n <= 3; ++n)
    CHECK(enumerate_posets(n, false).size() == brute_posets(n).size());
  CHECK(enumerate_posets(3, false).size() == 19);
  CHECK(enumerate_posets(3, true).size() == 5);
  CHECK(enumerate_posets(0, false).size() == 1);
  // Labeled: 1, 1, 3, 19, 219, 4231; unlabeled: 1, 1, 2, 5, 16, 63, 318.
  CHECK(enumerate_posets(4, false).size() == 219);
  CHECK(enumerate_posets(5, false).size() == 4231);
  const std::size_t unlabeled[] = {1, 1, 2, 5, 16, 63, 318};
  for (int n = 0; n <= 6; ++n)
    CHECK(enumerate_posets(n, true).size() == unlabeled[n]);
  CHECK_THROWS_AS(enumerate_posets(7, true), CapacityError);
  // The up-to-iso list canonicalizes the labeled one.
  std::set<Poset> canon;
  for (const Poset& p : enumerate_posets(4, false))
    canon.insert(canonical_poset(p));
  const auto iso = enumerate_posets(4, true);
  CHECK(std::set<Poset>(iso.begin(), iso.end()) == canon);
}

TEST_CASE("ordinal product and restriction") {
  CHECK(ordinal_product(chain_poset(1), chain_poset(1)) == chain_poset(2));
  CHECK(ordinal_product(antichain_poset(2), chain_poset(1)) == vee());
  CHECK(restrict(vee(), 0b101) == chain_poset(2));
  CHECK(restrict(vee(), 0b011) == antichain_poset(2));
}

}
