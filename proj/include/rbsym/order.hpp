#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rbsym/combinatorics.hpp"
#include "rbsym/digraph.hpp"

namespace rbsym {

enum class RelationKind { Cover, Full };

/// A strict partial order on [n], always stored transitively closed.
class Poset {
public:
  Poset() = default;
  explicit Poset(int n); // antichain

  /// Builds <_P from relation pairs (a, b) meaning a < b. Cover input is
  /// closed transitively; full input must already be transitive. Throws
  /// ValidationError on reflexive or cyclic input, or a non-transitive full
  /// relation.
  static Poset from_relations(int n, std::span<const Edge> relations, RelationKind kind);
  static Poset from_relations(int n, std::initializer_list<Edge> relations,
                              RelationKind kind = RelationKind::Cover) {
    return from_relations(n, std::span<const Edge>(relations.begin(), relations.size()), kind);
  }

  int n() const { return static_cast<int>(above_.size()); }
  bool less(int a, int b) const { return (above_[idx(a)] >> (b - 1)) & 1U; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  /// Elements strictly above / below a, bit (b-1) for b.
  Mask above(int a) const { return above_[idx(a)]; }
  Mask below(int a) const;

  /// All pairs a < b, sorted.
  std::vector<Edge> relations() const;
  /// Pairs a < b with nothing strictly between them.
  std::vector<Edge> cover_relations() const;

  friend bool operator==(const Poset&, const Poset&) = default;
  friend auto operator<=>(const Poset& a, const Poset& b) {
    if (auto c = a.n() <=> b.n(); c != 0)
      return c;
    return a.above_ <=> b.above_;
  }

private:
  std::size_t idx(int v) const { return static_cast<std::size_t>(v - 1); }

  std::vector<Mask> above_;
};

Poset chain_poset(int n);
Poset antichain_poset(int n);

/// i < j iff i < j and sigma(i) < sigma(j).
Poset perm_to_poset(const Permutation& sigma);
/// Edge (i, j) iff i <_P j.
Digraph poset_to_digraph(const Poset& p);
Poset dual(const Poset& p);

/// Ordinal sum: p on [m] entirely below q shifted to [m+1, m+n].
Poset ordinal_product(const Poset& p, const Poset& q);
Poset disjoint_union(const Poset& p, const Poset& q);
/// Restriction to `subset`, relabelled order-preservingly.
Poset restrict(const Poset& p, Mask subset);

struct MinMaxCounts {
  int minimal = 0;
  int maximal = 0;
  friend bool operator==(const MinMaxCounts&, const MinMaxCounts&) = default;
};
MinMaxCounts min_max_counts(const Poset& p);

inline constexpr int kMaxLinearExtensionVertices = 20;

/// Down-set DP; CapacityError above `cap`.
std::uint64_t linear_extensions_count(const Poset& p, int cap = kMaxLinearExtensionVertices);
/// Filter over all listings (n <= 10).
std::uint64_t linear_extensions_by_listings(const Poset& p);

/// Permutations pi of [n] with pi(i) > pi(i+1) or sigma(pi(i)) > sigma(pi(i+1))
/// at every position, by enumeration (n <= 10).
std::uint64_t sigma_reversing_count(const Permutation& sigma);

/// k-element totally ordered subsets.
std::uint64_t count_chains(const Poset& p, int k);
/// Chain sizes when P is a disjoint union of chains.
std::optional<Partition> chain_structure(const Poset& p);
/// Disjoint union of chains of the given sizes, chain blocks laid out
/// consecutively.
Poset chain_union(const Partition& sizes);

inline constexpr int kDefaultPosetEnumerationCap = 6;

/// Every partial order on [n] (labeled), or one representative per
/// isomorphism class (canonical form of the induced digraph).
std::vector<Poset> enumerate_posets(int n, bool up_to_iso, int cap = kDefaultPosetEnumerationCap);

/// Poset whose induced digraph is canonical_form(poset_to_digraph(p)).
Poset canonical_poset(const Poset& p);

} // namespace rbsym
