#pragma once

// The Redei-Berge symmetric function U_X, computed two unrelated ways:
//
//   listings: U_X = sum over listings pi of F_{XDes(pi)}
//   cycles:   U_X = sum over pi whose every cycle lies in X or in its
//             complement of (-1)^phi p_{type(pi)}, phi = sum of (len - 1)
//             over the cycles lying in X
//
// The two share no descent or cycle logic, so agreement is a real check.

#include <map>
#include <optional>
#include <vector>

#include "rbsym/digraph.hpp"
#include "rbsym/order.hpp"
#include "rbsym/qsym.hpp"

namespace rbsym {

struct EnumerationOptions {
  int cap = kDefaultMaterializeCap;
  /// Worker threads for listing enumeration (split by first vertex). The
  /// result does not depend on this.
  int threads = 1;
};

/// F-basis expansion; CapacityError when n exceeds options.cap.
QSymElement u_via_listings(const Digraph& x, const EnumerationOptions& options = {});
/// Signed p-basis expansion; CapacityError when n exceeds options.cap.
SymElement u_via_cycles(const Digraph& x, const EnumerationOptions& options = {});

struct RedeiBerge {
  QSymElement fundamental{QBasis::Fundamental};
  SymElement power_sum{SymBasis::PowerSum};
};

/// Both expansions; ConsistencyError if they disagree.
RedeiBerge redei_berge(const Digraph& x, const EnumerationOptions& options = {});
RedeiBerge u_of_poset(const Poset& p, const EnumerationOptions& options = {});
RedeiBerge u_of_perm(const Permutation& sigma, const EnumerationOptions& options = {});

/// u_X(m), the principal specialization of U_X. Both expansions are
/// specialized and must agree.
Integer redei_berge_polynomial(const Digraph& x, int m, const EnumerationOptions& options = {});

struct SignedDigraph {
  int sign = 1;
  Digraph digraph;
};

inline constexpr int kDefaultDeletionEdgeCap = 12;

/// U_X = sum over nonempty S in E of (-1)^{|S|-1} U_{X - S}. Terms come
/// ordered by |S|, then lexicographically by the sorted edge list.
/// DomainError for a disjoint union of paths; CapacityError above `edge_cap`.
std::vector<SignedDigraph> deletion_expansion(const Digraph& x, int edge_cap = kDefaultDeletionEdgeCap);
/// The same sum restricted to subsets of the edges of the directed cycle
/// (v_1, ..., v_k), k >= 2. ValidationError if it is not a cycle of X.
std::vector<SignedDigraph> k_deletion_expansion(const Digraph& x, std::span<const int> cycle);

/// Sum of sign * U over the terms, in the M basis (by listings).
QSymElement signed_sum_m(const std::vector<SignedDigraph>& terms, const EnumerationOptions& options = {});

struct InvariantOptions {
  /// Extract [p_(k,1,...,1)] / 2 for odd k; requires a tournament.
  bool tournament = false;
  /// Extract [p_(2,1,...,1)], the number of incomparable pairs of a poset.
  bool poset = false;
};

struct InvariantReport {
  int n = 0;
  Integer nonloop_edges = 0;
  /// k -> number of k-vertex paths, k = 1..n.
  std::map<int, Integer> path_counts;
  SymElement p_coefficients{SymBasis::PowerSum};
  /// odd k -> number of directed k-cycles.
  std::optional<std::map<int, Integer>> odd_cycle_counts;
  std::optional<Integer> incomparable_pairs;
};

/// Reads invariants off an F-basis U of degree n. Every division is exact
/// for a genuine U; a remainder raises ConsistencyError. Tournament
/// extraction raises DomainError when the edge count rules out a tournament.
InvariantReport invariants_from_u(const QSymElement& u, int n, const InvariantOptions& options = {});
/// Same, from the digraph itself (tournament mode checks is_tournament).
InvariantReport invariants_of(const Digraph& x, const InvariantOptions& options = {},
                              const EnumerationOptions& enumeration = {});

/// Every coefficient >= 0; ValidationError for a non-p-basis element.
bool is_p_positive(const SymElement& u);

} // namespace rbsym
