#include "rbsym/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rbsym/errors.hpp"

namespace rbsym {

namespace {

int checked_sum(const std::vector<int>& parts, const char* what) {
  int total = 0;
  for (int p : parts) {
    if (p < 1)
      throw ValidationError(std::string(what) + " part must be positive, got " + std::to_string(p));
    total += p;
  }
  return total;
}

template <class Seq>
std::string bracketed(const Seq& seq) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int x : seq) {
    if (!first)
      os << ',';
    os << x;
    first = false;
  }
  os << ']';
  return os.str();
}

} // namespace

// -- Composition / Partition -------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  degree_ = checked_sum(parts_, "composition");
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Partition Composition::sorted() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  degree_ = checked_sum(parts_, "partition");
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
    throw ValidationError("partition parts must be weakly decreasing: " + bracketed(parts_));
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::concat(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

// -- DescentSubset -----------------------------------------------------------

DescentSubset::DescentSubset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  if (n < 0)
    throw ValidationError("negative degree");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > n - 1)
      throw ValidationError("descent subset element " + std::to_string(elements_[i]) +
                            " outside [1, " + std::to_string(n - 1) + "]");
    if (i > 0 && elements_[i] == elements_[i - 1])
      throw ValidationError("duplicate element in descent subset");
  }
}

DescentSubset DescentSubset::from_mask(int n, Mask bits) {
  return DescentSubset(n, mask_elements(bits));
}

Mask DescentSubset::mask() const { return mask_of(elements_); }

Composition comp_of_subset(const DescentSubset& subset) {
  return comp_of_mask(subset.n(), subset.mask());
}

DescentSubset subset_of_comp(const Composition& alpha) {
  return DescentSubset::from_mask(alpha.degree(), descent_mask(alpha));
}

Mask descent_mask(const Composition& alpha) {
  Mask bits = 0;
  int sum = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    sum += alpha[static_cast<std::size_t>(i)];
    bits |= Mask{1} << (sum - 1);
  }
  return bits;
}

Composition comp_of_mask(int n, Mask bits) {
  if (n == 0)
    return Composition{};
  if (n < 64 && (bits >> (n - 1)) != 0)
    throw ValidationError("descent mask has bits outside [n-1]");
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < n; ++i) {
    if (bits & (Mask{1} << (i - 1))) {
      parts.push_back(i - last);
      last = i;
    }
  }
  parts.push_back(n - last);
  return Composition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.degree() != lambda.degree())
    throw ValidationError("dominance order compares partitions of the same integer");
  int a = 0;
  int b = 0;
  const std::size_t len = std::max(mu.parts().size(), lambda.parts().size());
  for (std::size_t j = 0; j < len; ++j) {
    a += j < mu.parts().size() ? mu[j] : 0;
    b += j < lambda.parts().size() ? lambda[j] : 0;
    if (a > b)
      return false;
  }
  return true;
}

// -- SetComposition ----------------------------------------------------------

void SetComposition::validate() const {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0 && !allow_empty_blocks)
      throw ValidationError("empty block in set composition");
    if (b & seen)
      throw ValidationError("set composition blocks overlap");
    seen |= b;
  }
  if (seen != ground)
    throw ValidationError("set composition blocks do not cover the ground set");
}

std::vector<int> SetComposition::block_sizes() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (Mask b : blocks)
    out.push_back(popcount(b));
  return out;
}

// -- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw ValidationError("not a permutation of [" + std::to_string(n) + "]: " + bracketed(images_));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i)
    inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(images_.size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (done[static_cast<std::size_t>(start)])
      continue;
    std::vector<int> cyc;
    for (int v = start; !done[static_cast<std::size_t>(v)]; v = (*this)(v)) {
      done[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lens;
  for (const auto& c : cycles())
    lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(std::move(lens));
}

int Permutation::fixed_points() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i)
    count += (*this)(i) == i;
  return count;
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]])
      throw ValidationError("standardize: duplicate entry " + std::to_string(word[order[r]]));
    ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

// -- enumeration -------------------------------------------------------------

namespace {

// Parts chosen largest first, which yields decreasing lexicographic order.
void compositions_rec(int remaining, std::vector<int>& prefix,
                      const std::function<void(const Composition&)>& fn) {
  if (remaining == 0) {
    fn(Composition(prefix));
    return;
  }
  for (int part = remaining; part >= 1; --part) {
    prefix.push_back(part);
    compositions_rec(remaining - part, prefix, fn);
    prefix.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, fn);
    prefix.pop_back();
  }
}

// Enumerates submasks of `pool` with exactly `size` bits in increasing value.
void for_each_submask_of_size(Mask pool, int size, const std::function<void(Mask)>& fn) {
  const std::vector<int> elems = mask_elements(pool);
  const int m = static_cast<int>(elems.size());
  if (size < 0 || size > m)
    return;
  if (m > 62)
    throw CapacityError("set enumeration over more than 62 elements");
  std::vector<Mask> found;
  // Gosper's hack over positions within the pool, then mapped to real bits.
  if (size == 0) {
    fn(0);
    return;
  }
  for (Mask sel = full_mask(size); sel < (Mask{1} << m);) {
    Mask out = 0;
    for (int i = 0; i < m; ++i)
      if (sel & (Mask{1} << i))
        out |= Mask{1} << (elems[static_cast<std::size_t>(i)] - 1);
    found.push_back(out);
    const Mask c = sel & (~sel + 1);
    const Mask r = sel + c;
    sel = (((r ^ sel) >> 2) / c) | r;
  }
  std::sort(found.begin(), found.end());
  for (Mask f : found)
    fn(f);
}

void set_comp_rec(Mask remaining, const Composition& type, std::size_t idx, SetComposition& acc,
                  const std::function<void(const SetComposition&)>& fn) {
  if (idx == static_cast<std::size_t>(type.length())) {
    if (remaining == 0)
      fn(acc);
    return;
  }
  for_each_submask_of_size(remaining, type[idx], [&](Mask block) {
    acc.blocks.push_back(block);
    set_comp_rec(remaining & ~block, type, idx + 1, acc, fn);
    acc.blocks.pop_back();
  });
}

void set_comp_k_rec(Mask remaining, int blocks_left, SetComposition& acc,
                    const std::function<void(const SetComposition&)>& fn) {
  if (blocks_left == 0) {
    if (remaining == 0)
      fn(acc);
    return;
  }
  const int lo = acc.allow_empty_blocks ? 0 : 1;
  const int avail = popcount(remaining);
  for (int size = lo; size <= avail; ++size) {
    // Remaining blocks must still be fillable.
    if (!acc.allow_empty_blocks && avail - size < blocks_left - 1)
      break;
    if (blocks_left == 1 && size != avail)
      continue;
    for_each_submask_of_size(remaining, size, [&](Mask block) {
      acc.blocks.push_back(block);
      set_comp_k_rec(remaining & ~block, blocks_left - 1, acc, fn);
      acc.blocks.pop_back();
    });
  }
}

} // namespace

void for_each_composition(int n, const std::function<void(const Composition&)>& fn) {
  if (n < 0)
    throw ValidationError("negative degree");
  std::vector<int> prefix;
  compositions_rec(n, prefix, fn);
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0)
    throw ValidationError("negative degree");
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, fn);
}

void for_each_descent_subset(int n, const std::function<void(const DescentSubset&)>& fn) {
  if (n < 0)
    throw ValidationError("negative degree");
  const Mask limit = n == 0 ? 1 : (Mask{1} << (n - 1));
  for (Mask m = 0; m < limit; ++m)
    fn(DescentSubset::from_mask(n, m));
}

void for_each_permutation(std::vector<int> values,
                          const std::function<void(std::span<const int>)>& fn) {
  std::sort(values.begin(), values.end());
  do {
    fn(values);
  } while (std::next_permutation(values.begin(), values.end()));
}

void for_each_set_composition(Mask ground, const Composition& type,
                              const std::function<void(const SetComposition&)>& fn) {
  if (type.degree() != popcount(ground))
    return;
  SetComposition acc{ground, {}, false};
  set_comp_rec(ground, type, 0, acc, fn);
}

void for_each_set_composition(Mask ground, int k, bool allow_empty_blocks,
                              const std::function<void(const SetComposition&)>& fn) {
  if (k < 0)
    throw ValidationError("negative block count");
  SetComposition acc{ground, {}, allow_empty_blocks};
  set_comp_k_rec(ground, k, acc, fn);
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> permutations(int n, int cap) {
  if (n > cap)
    throw CapacityError("refusing to materialize " + std::to_string(n) + "! permutations (cap " +
                        std::to_string(cap) + ")");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  for_each_permutation(values, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

std::vector<SetComposition> set_compositions(Mask ground, const Composition& type) {
  std::vector<SetComposition> out;
  for_each_set_composition(ground, type, [&](const SetComposition& s) { out.push_back(s); });
  return out;
}

std::vector<SetComposition> set_compositions(Mask ground, int k, bool allow_empty_blocks) {
  std::vector<SetComposition> out;
  for_each_set_composition(ground, k, allow_empty_blocks,
                           [&](const SetComposition& s) { out.push_back(s); });
  return out;
}

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctzll(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxVertices)
      throw ValidationError("element " + std::to_string(e) + " outside [1, 64]");
    m |= Mask{1} << (e - 1);
  }
  return m;
}

std::string to_string(const Composition& c) { return bracketed(c.parts()); }
std::string to_string(const Partition& p) { return bracketed(p.parts()); }
std::string to_string(const Permutation& p) { return bracketed(p.images()); }

} // namespace rbsym
