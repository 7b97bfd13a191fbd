#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "rbsym/combinatorics.hpp"

namespace rbsym {

using Edge = std::pair<int, int>;

/// A digraph on [n]. Loops and antiparallel pairs are allowed; parallel
/// duplicates are not. Stored as one out-neighbour bitset per vertex, which
/// caps n at 64.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n);
  /// ValidationError on an endpoint outside [n] or a repeated pair.
  static Digraph from_edges(int n, std::span<const Edge> edges);
  static Digraph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int n() const { return static_cast<int>(out_.size()); }
  bool has_edge(int u, int v) const { return (out_[idx(u)] >> (v - 1)) & 1U; }
  /// Out-neighbours of u, bit (w-1) for w.
  Mask out_mask(int u) const { return out_[idx(u)]; }
  Mask in_mask(int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  /// All edges, sorted.
  std::vector<Edge> edges() const;
  int edge_count() const;
  int loop_count() const;
  int nonloop_edge_count() const { return edge_count() - loop_count(); }
  Digraph without_loops() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;
  friend auto operator<=>(const Digraph& a, const Digraph& b) {
    if (auto c = a.n() <=> b.n(); c != 0)
      return c;
    return a.out_ <=> b.out_;
  }

private:
  std::size_t idx(int v) const { return static_cast<std::size_t>(v - 1); }
  void check_vertex(int v) const;

  std::vector<Mask> out_;
};

// -- structural operations ---------------------------------------------------

/// Toggles every ordered pair, loops included.
Digraph complement(const Digraph& x);
Digraph opposite(const Digraph& x);
/// Induced subdigraph on `subset`, relabelled order-preservingly onto [|S|].
Digraph restrict(const Digraph& x, Mask subset);
/// Disjoint union plus every edge from the first part to the second.
Digraph product(const Digraph& x, const Digraph& y);
Digraph disjoint_union(const Digraph& x, const Digraph& y);
Digraph discrete_digraph(int n);

/// Positions i with (pi_i, pi_{i+1}) an edge, as a subset of [n-1].
DescentSubset x_descent_set(const Digraph& x, const Permutation& listing);
Mask x_descent_mask(const Digraph& x, std::span<const int> listing);

/// True iff every consecutive pair of `cycle`, wrap-around included, is an
/// edge. A single vertex needs a loop. ValidationError on repeated vertices.
bool is_cycle_of(const Digraph& x, std::span<const int> cycle);

enum class CycleSide { InDigraph, InComplement, Neither };

struct AdmissiblePermutation {
  Permutation perm;
  /// Every cycle lies in X or in its complement.
  bool in_sigma_x_xbar = false;
  /// Every non-trivial cycle lies in X.
  bool in_sigma_x = false;
  /// One entry per cycle of perm.cycles().
  std::vector<CycleSide> sides;
};

AdmissiblePermutation classify_permutation(const Digraph& x, const Permutation& pi);
/// Every permutation of the vertex set with its membership flags, in
/// lexicographic order.
void for_each_classified_permutation(const Digraph& x,
                                     const std::function<void(const AdmissiblePermutation&)>& fn);
/// Only the members of Sigma_V(X, X-bar); CapacityError above `cap`.
std::vector<AdmissiblePermutation> admissible_permutations(const Digraph& x,
                                                           int cap = kDefaultMaterializeCap);

// -- counting ----------------------------------------------------------------

inline constexpr int kMaxDpVertices = 20;

/// Listings all of whose consecutive pairs are edges (subset DP). The empty
/// digraph has one (empty) listing.
std::uint64_t count_hamiltonian_paths(const Digraph& x);
/// Hamiltonian cycles counted once per cyclic sequence up to rotation; a
/// single vertex with a loop has one.
std::uint64_t count_hamiltonian_cycles(const Digraph& x);
/// Same quantities by brute-force listing enumeration (n <= 10).
std::uint64_t count_hamiltonian_paths_by_listings(const Digraph& x);
std::uint64_t count_hamiltonian_cycles_by_listings(const Digraph& x);

/// Sequences of k distinct vertices with all k-1 consecutive edges present.
std::uint64_t count_paths(const Digraph& x, int k);
/// Directed k-cycles on k distinct vertices, up to rotation.
std::uint64_t count_cycles(const Digraph& x, int k);

// -- predicates --------------------------------------------------------------

/// No directed cycle of length >= 2 (loops are allowed).
bool is_acyclic(const Digraph& x);
bool is_disjoint_union_of_paths(const Digraph& x);
bool is_tournament(const Digraph& x);
/// Not expressible as product(X1, X2) with both factors non-empty.
bool is_irreducible(const Digraph& x);

// -- isomorphism -------------------------------------------------------------

inline constexpr int kDefaultIsoCap = 8;

/// Relabelling with the lexicographically least row-major adjacency matrix.
Digraph canonical_form(const Digraph& x, int cap = kDefaultIsoCap);
bool are_isomorphic(const Digraph& x, const Digraph& y, int cap = kDefaultIsoCap);

} // namespace rbsym
