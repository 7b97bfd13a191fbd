#pragma once

// Compositions, partitions, descent subsets, set compositions and
// permutations, plus the enumerators every other module builds on.
//
// Enumeration orders (reproducible, documented once here):
//   compositions    decreasing lexicographic: (3), (2,1), (1,2), (1,1,1)
//   partitions      decreasing lexicographic: (4), (3,1), (2,2), (2,1,1), ...
//   subsets of [n-1] increasing bitmask value
//   permutations    increasing lexicographic one-line notation
//   set compositions blocks chosen left to right, each block by increasing
//                    bitmask value
//
// Vertex / element sets are passed around as 64-bit masks, bit (v-1) for
// element v. Everything is 1-based at the API.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rbsym {

using Mask = std::uint64_t;

/// Hard upper bound on ground-set size for anything stored in a Mask.
inline constexpr int kMaxVertices = 64;

/// Default cap on materialized n!-sized lists.
inline constexpr int kDefaultMaterializeCap = 10;

class Partition;

/// A sequence of positive integers. The empty composition is the unique
/// composition of 0.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  /// Weakly decreasing rearrangement.
  Partition sorted() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  Composition as_composition() const { return Composition(parts_); }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  /// Parts of both, merged and re-sorted (the p-basis product of keys).
  Partition concat(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// A subset I of [n-1] for a fixed degree n.
class DescentSubset {
public:
  DescentSubset() = default;
  DescentSubset(int n, std::vector<int> elements);
  static DescentSubset from_mask(int n, Mask bits);

  int n() const { return n_; }
  const std::vector<int>& elements() const { return elements_; }
  /// Bit (i-1) set for i in I.
  Mask mask() const;
  int size() const { return static_cast<int>(elements_.size()); }

  friend bool operator==(const DescentSubset&, const DescentSubset&) = default;

private:
  int n_ = 0;
  std::vector<int> elements_;
};

Composition comp_of_subset(const DescentSubset& subset);
DescentSubset subset_of_comp(const Composition& alpha);

/// Descent mask of `alpha` (bit i-1 for each partial sum i < n).
Mask descent_mask(const Composition& alpha);
Composition comp_of_mask(int n, Mask bits);

/// Dominance order: every prefix sum of mu is at most that of lambda.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// An ordered sequence of disjoint blocks whose union is the ground set.
struct SetComposition {
  Mask ground = 0;
  std::vector<Mask> blocks;
  bool allow_empty_blocks = false;

  /// Throws ValidationError when blocks overlap, miss part of the ground set,
  /// or contain a forbidden empty block.
  void validate() const;
  /// Block sizes in order; zeros appear only when empty blocks are allowed.
  std::vector<int> block_sizes() const;
};

/// One-line notation (sigma(1), ..., sigma(n)), values in [n].
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  /// sigma(i) for i in [n].
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  Permutation inverse() const;
  /// Cycles in order of their smallest element, each starting at it.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;
  int fixed_points() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

/// Replaces each entry by its rank among the entries (1 = smallest).
Permutation standardize(std::span<const int> word);

// -- enumeration -------------------------------------------------------------

void for_each_composition(int n, const std::function<void(const Composition&)>& fn);
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
/// Subsets of [n-1] as masks, in increasing mask order.
void for_each_descent_subset(int n, const std::function<void(const DescentSubset&)>& fn);
/// Permutations of the given values (sorted first), in lexicographic order.
void for_each_permutation(std::vector<int> values,
                          const std::function<void(std::span<const int>)>& fn);
/// Set compositions of `ground` whose block sizes equal `type` (never empty).
void for_each_set_composition(Mask ground, const Composition& type,
                              const std::function<void(const SetComposition&)>& fn);
/// All set compositions of `ground` into exactly k blocks.
void for_each_set_composition(Mask ground, int k, bool allow_empty_blocks,
                              const std::function<void(const SetComposition&)>& fn);

std::vector<Composition> compositions(int n);
std::vector<Partition> partitions(int n);
/// Materialized permutations of [n]; throws CapacityError above `cap`.
std::vector<Permutation> permutations(int n, int cap = kDefaultMaterializeCap);
std::vector<SetComposition> set_compositions(Mask ground, const Composition& type);
std::vector<SetComposition> set_compositions(Mask ground, int k, bool allow_empty_blocks);

// -- masks -------------------------------------------------------------------

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }
/// Elements of a mask in increasing order, 1-based.
std::vector<int> mask_elements(Mask m);
Mask mask_of(std::span<const int> elements);

std::string to_string(const Composition& c);
std::string to_string(const Partition& p);
std::string to_string(const Permutation& p);

} // namespace rbsym
