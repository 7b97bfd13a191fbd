#pragma once

// Investigations built on U: new bases of Sym from digraph families,
// chain-union reconstruction, collision searches and the min/max scan
// for posets.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rbsym/io.hpp"
#include "rbsym/redei_berge.hpp"

namespace rbsym {

struct DigraphFamily {
  std::string name;
  /// Member with exactly n vertices.
  std::function<Digraph(int n)> member;
};

DigraphFamily discrete_family();
/// X_{n,k}: edges (1, 1+i) for 1 <= i <= k; members with n < k + 2 use
/// k' = max(0, n - 2).
DigraphFamily family_xnk(int k);

struct BasisConditionRow {
  int n = 0;
  Integer h = 0;      // Hamiltonian cycles of X_n
  Integer h_bar = 0;  // Hamiltonian cycles of the complement
  /// Odd n: h + h_bar > 0. Even n: h != h_bar. n = 0 holds vacuously.
  bool condition = false;
  Integer p_n_coefficient = 0;
  /// h + h_bar for odd n, h_bar - h for even n.
  Integer predicted_coefficient = 0;
  bool coefficient_matches = false;
};

struct BasisConditionReport {
  std::string family;
  std::vector<BasisConditionRow> rows;
  bool all_conditions = false;
  bool all_coefficients_match = false;
};

inline constexpr int kDefaultBasisCap = 7;

BasisConditionReport check_basis_conditions(const DigraphFamily& family, int max_n, int cap = kDefaultBasisCap);

/// Rows and columns indexed by the partitions of n in decreasing
/// lexicographic order; entry (lambda, mu) = [p_mu] U_{X_lambda}.
struct TransitionMatrix {
  int n = 0;
  std::vector<Partition> index;
  std::vector<std::vector<Rational>> entries;

  /// Entry (lambda, mu) vanishes unless mu <= lambda in dominance order.
  bool dominance_triangular() const;
  bool nonzero_diagonal() const;
  /// Exact Gaussian elimination over the rationals.
  Rational determinant() const;
};

/// U_{X_lambda} = product of member U's, taken in the p basis.
TransitionMatrix transition_matrix(const DigraphFamily& family, int n, int cap = kDefaultBasisCap);

/// Chain sizes of a disjoint union of chains from its U. DomainError when
/// the recurrence goes negative or the sizes do not add up to n.
Partition reconstruct_chain_multiset(const SymElement& u, int n);
Partition reconstruct_chain_multiset(const QSymElement& u_fundamental, int n);

enum class SearchClass { Posets, Digraphs, PathUnions, ChainUnions };

std::string search_class_name(SearchClass c);
/// "posets", "digraphs", "path-unions", "chain-unions"; ValidationError otherwise.
SearchClass parse_search_class(const std::string& name);

struct CollisionGroup {
  std::string u_key;
  /// One JSON object per isomorphism class with this U.
  std::vector<Json> members;
  /// Posets only: m_P + M_P for each member, and whether they agree.
  std::optional<std::vector<int>> m_plus_M;
  std::optional<bool> conjecture_ok;
};

struct CollisionReport {
  SearchClass search_class = SearchClass::Posets;
  int n = 0;
  /// Isomorphism classes examined.
  std::size_t objects = 0;
  /// Groups sorted by u_key.
  std::vector<CollisionGroup> groups;

  std::size_t collision_groups() const;  // groups with more than one member
  std::size_t max_group_size() const;
  /// Posets: every group agrees on m + M.
  bool conjecture_holds() const;
  /// Every group is a single isomorphism class.
  bool all_singletons() const;
  /// One JSON record per group.
  std::vector<Json> json_lines() const;
  Json summary() const;
};

struct SearchCaps {
  int posets = 6;
  int digraphs = 3;
  int unions = 8;
};

CollisionReport collision_search(SearchClass c, int n, const SearchCaps& caps = {},
                                 const EnumerationOptions& options = {});

/// Disjoint union of directed paths with the given vertex counts, laid out
/// consecutively.
Digraph path_union(const Partition& sizes);

struct DisjointUnionWitness {
  Digraph x;
  Digraph y;
  SymElement u_union{SymBasis::PowerSum};
  SymElement u_product{SymBasis::PowerSum};
};

/// First pair (by total size, then canonical order) with
/// U_{X disjoint-union Y} != U_X U_Y.
std::optional<DisjointUnionWitness> find_disjoint_union_counterexample(int max_total);

} // namespace rbsym
