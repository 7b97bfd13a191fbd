#include "rbsym/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rbsym/errors.hpp"

namespace rbsym {

Poset::Poset(int n) {
  if (n < 0 || n > kMaxVertices)
    throw ValidationError("poset size " + std::to_string(n) + " outside [0, 64]");
  above_.assign(static_cast<std::size_t>(n), 0);
}

Poset Poset::from_relations(int n, std::span<const Edge> relations, RelationKind kind) {
  Poset p(n);
  for (const auto& [a, b] : relations) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw ValidationError("relation (" + std::to_string(a) + "," + std::to_string(b) +
                            ") outside [1, " + std::to_string(n) + "]");
    if (a == b)
      throw ValidationError("strict order cannot relate " + std::to_string(a) + " to itself");
    p.above_[p.idx(a)] |= Mask{1} << (b - 1);
  }
  const std::vector<Mask> given = p.above_;
  // Warshall closure on bitsets.
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      if (p.above_[p.idx(i)] & (Mask{1} << (k - 1)))
        p.above_[p.idx(i)] |= p.above_[p.idx(k)];
  for (int i = 1; i <= n; ++i)
    if (p.less(i, i))
      throw ValidationError("relation is cyclic through element " + std::to_string(i));
  if (kind == RelationKind::Full && p.above_ != given)
    throw ValidationError("full relation is not transitive");
  return p;
}

Mask Poset::below(int a) const {
  Mask m = 0;
  for (int b = 1; b <= n(); ++b)
    if (less(b, a))
      m |= Mask{1} << (b - 1);
  return m;
}

std::vector<Edge> Poset::relations() const {
  std::vector<Edge> out;
  for (int a = 1; a <= n(); ++a)
    for (int b : mask_elements(above(a)))
      out.emplace_back(a, b);
  return out;
}

std::vector<Edge> Poset::cover_relations() const {
  std::vector<Edge> out;
  for (int a = 1; a <= n(); ++a) {
    for (int b : mask_elements(above(a))) {
      bool cover = true;
      for (int c : mask_elements(above(a)))
        if (less(c, b)) {
          cover = false;
          break;
        }
      if (cover)
        out.emplace_back(a, b);
    }
  }
  return out;
}

Poset chain_poset(int n) {
  std::vector<Edge> rel;
  for (int i = 1; i < n; ++i)
    rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel, RelationKind::Cover);
}

Poset antichain_poset(int n) { return Poset(n); }

Poset perm_to_poset(const Permutation& sigma) {
  std::vector<Edge> rel;
  for (int i = 1; i <= sigma.size(); ++i)
    for (int j = i + 1; j <= sigma.size(); ++j)
      if (sigma(i) < sigma(j))
        rel.emplace_back(i, j);
  return Poset::from_relations(sigma.size(), rel, RelationKind::Full);
}

Digraph poset_to_digraph(const Poset& p) {
  Digraph d(p.n());
  for (const auto& [a, b] : p.relations())
    d.add_edge(a, b);
  return d;
}

Poset dual(const Poset& p) {
  std::vector<Edge> rel;
  for (const auto& [a, b] : p.relations())
    rel.emplace_back(b, a);
  return Poset::from_relations(p.n(), rel, RelationKind::Full);
}

Poset ordinal_product(const Poset& p, const Poset& q) {
  const int m = p.n();
  std::vector<Edge> rel = p.relations();
  for (const auto& [a, b] : q.relations())
    rel.emplace_back(a + m, b + m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= q.n(); ++j)
      rel.emplace_back(i, j + m);
  return Poset::from_relations(m + q.n(), rel, RelationKind::Full);
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  const int m = p.n();
  std::vector<Edge> rel = p.relations();
  for (const auto& [a, b] : q.relations())
    rel.emplace_back(a + m, b + m);
  return Poset::from_relations(m + q.n(), rel, RelationKind::Full);
}

Poset restrict(const Poset& p, Mask subset) {
  if (p.n() < 64 && (subset >> p.n()) != 0)
    throw ValidationError("restriction subset is not a subset of the ground set");
  const std::vector<int> keep = mask_elements(subset);
  std::vector<Edge> rel;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (p.less(keep[i], keep[j]))
        rel.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return Poset::from_relations(static_cast<int>(keep.size()), rel, RelationKind::Full);
}

MinMaxCounts min_max_counts(const Poset& p) {
  MinMaxCounts out;
  for (int a = 1; a <= p.n(); ++a) {
    out.minimal += p.below(a) == 0;
    out.maximal += p.above(a) == 0;
  }
  return out;
}

std::uint64_t linear_extensions_count(const Poset& p, int cap) {
  const int n = p.n();
  if (n > cap || n > kMaxLinearExtensionVertices)
    throw CapacityError("linear_extensions_count: n = " + std::to_string(n) + " above cap");
  std::vector<Mask> below(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a)
    below[static_cast<std::size_t>(a - 1)] = p.below(a);
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint64_t> ways(states, 0);
  ways[0] = 1;
  for (Mask ideal = 0; ideal < states; ++ideal) {
    if (ways[ideal] == 0)
      continue;
    for (int a = 0; a < n; ++a) {
      const Mask bit = Mask{1} << a;
      if (!(ideal & bit) && (below[static_cast<std::size_t>(a)] & ~ideal) == 0)
        ways[ideal | bit] += ways[ideal];
    }
  }
  return ways[states - 1];
}

std::uint64_t linear_extensions_by_listings(const Poset& p) {
  if (p.n() > kDefaultMaterializeCap)
    throw CapacityError("listing enumeration above n = 10");
  std::vector<int> values(static_cast<std::size_t>(p.n()));
  std::iota(values.begin(), values.end(), 1);
  std::uint64_t count = 0;
  for_each_permutation(values, [&](std::span<const int> w) {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (p.less(w[j], w[i]))
          return;
    ++count;
  });
  return count;
}

std::uint64_t sigma_reversing_count(const Permutation& sigma) {
  const int n = sigma.size();
  if (n > kDefaultMaterializeCap)
    throw CapacityError("sigma_reversing_count enumerates n! permutations; n above 10");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::uint64_t count = 0;
  for_each_permutation(values, [&](std::span<const int> pi) {
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
      if (!(pi[i] > pi[i + 1] || sigma(pi[i]) > sigma(pi[i + 1])))
        return;
    ++count;
  });
  return count;
}

std::uint64_t count_chains(const Poset& p, int k) {
  const int n = p.n();
  if (k < 1 || k > n)
    throw ValidationError("chain size " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  std::uint64_t count = 0;
  // Grow chains upward from each element so each chain is built once, from
  // its minimum.
  std::vector<std::pair<int, int>> stack; // (top element, size)
  for (int a = 1; a <= n; ++a)
    stack.emplace_back(a, 1);
  while (!stack.empty()) {
    const auto [top, size] = stack.back();
    stack.pop_back();
    if (size == k) {
      ++count;
      continue;
    }
    for (int b : mask_elements(p.above(top)))
      stack.emplace_back(b, size + 1);
  }
  return count;
}

std::optional<Partition> chain_structure(const Poset& p) {
  const int n = p.n();
  // P is a union of chains iff "equal or comparable" is an equivalence.
  std::vector<bool> assigned(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> sizes;
  for (int a = 1; a <= n; ++a) {
    if (assigned[static_cast<std::size_t>(a)])
      continue;
    const Mask block = (Mask{1} << (a - 1)) | p.above(a) | p.below(a);
    for (int b : mask_elements(block)) {
      const Mask other = (Mask{1} << (b - 1)) | p.above(b) | p.below(b);
      if (other != block)
        return std::nullopt;
      assigned[static_cast<std::size_t>(b)] = true;
    }
    sizes.push_back(popcount(block));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return Partition(std::move(sizes));
}

Poset chain_union(const Partition& sizes) {
  Poset out(0);
  for (int s : sizes.parts())
    out = disjoint_union(out, chain_poset(s));
  return out;
}

Poset canonical_poset(const Poset& p) {
  const Digraph d = canonical_form(poset_to_digraph(p));
  std::vector<Edge> rel = d.edges();
  return Poset::from_relations(p.n(), rel, RelationKind::Full);
}

std::vector<Poset> enumerate_posets(int n, bool up_to_iso, int cap) {
  if (n < 0)
    throw ValidationError("negative poset size");
  if (n > cap)
    throw CapacityError("enumerate_posets: n = " + std::to_string(n) + " above cap " + std::to_string(cap));
  if (up_to_iso && n > kDefaultIsoCap)
    throw CapacityError("isomorphism classes need n <= 8");
  std::vector<Poset> level{Poset(0)};
  for (int m = 1; m <= n; ++m) {
    // Element m joins with a down-set D (elements below it) and an up-set U
    // (elements above it); every element of D must lie below every element of U.
    std::vector<Poset> next;
    std::set<Poset> seen;
    const Mask pool = full_mask(m - 1);
    for (const Poset& base : level) {
      for (Mask down = 0;; down = (down - pool) & pool) {
        bool down_closed = true;
        for (int a : mask_elements(down))
          if ((base.below(a) & ~down) != 0) {
            down_closed = false;
            break;
          }
        if (down_closed) {
          const Mask rest = pool & ~down;
          for (Mask up = 0;; up = (up - rest) & rest) {
            bool ok = true;
            for (int b : mask_elements(up))
              if ((base.above(b) & ~up) != 0) {
                ok = false;
                break;
              }
            for (int a : mask_elements(down)) {
              if (!ok)
                break;
              if ((base.above(a) & up) != up)
                ok = false;
            }
            if (ok) {
              std::vector<Edge> rel = base.relations();
              for (int a : mask_elements(down))
                rel.emplace_back(a, m);
              for (int b : mask_elements(up))
                rel.emplace_back(m, b);
              Poset candidate = Poset::from_relations(m, rel, RelationKind::Full);
              if (up_to_iso) {
                candidate = canonical_poset(candidate);
                if (seen.insert(candidate).second)
                  next.push_back(std::move(candidate));
              } else {
                next.push_back(std::move(candidate));
              }
            }
            if (up == rest)
              break;
          }
        }
        if (down == pool)
          break;
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

} // namespace rbsym
