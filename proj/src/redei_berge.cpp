#include "rbsym/redei_berge.hpp"

#include <algorithm>
#include <thread>

namespace rbsym {

namespace {

void check_cap(const Digraph& x, const EnumerationOptions& options, const char* what) {
  if (x.n() > options.cap)
    throw CapacityError(std::string(what) + ": n = " + std::to_string(x.n()) + " exceeds cap " +
                        std::to_string(options.cap));
}

// Depth-first over listings, one histogram slot per descent mask.
class ListingWalker {
public:
  ListingWalker(const Digraph& x, std::vector<std::uint64_t>& hist) : x_(x), hist_(hist) {
    for (int v = 1; v <= x.n(); ++v)
      out_.push_back(x.out_mask(v));
  }

  void from_first(int first) {
    walk(Mask{1} << (first - 1), first - 1, 1, 0);
  }

private:
  void walk(Mask used, int last, int placed, Mask desc) {
    const int n = x_.n();
    if (placed == n) {
      ++hist_[desc];
      return;
    }
    const Mask edges = out_[static_cast<std::size_t>(last)];
    for (Mask free = full_mask(n) & ~used; free; free &= free - 1) {
      const int v = __builtin_ctzll(free);
      const Mask bit = Mask{1} << v;
      walk(used | bit, v, placed + 1, (edges & bit) ? desc | (Mask{1} << (placed - 1)) : desc);
    }
  }

  const Digraph& x_;
  std::vector<std::uint64_t>& hist_;
  std::vector<Mask> out_;
};

} // namespace

QSymElement u_via_listings(const Digraph& x, const EnumerationOptions& options) {
  check_cap(x, options, "u_via_listings");
  const int n = x.n();
  QSymElement out(QBasis::Fundamental);
  if (n == 0) {
    out.add(Composition{}, 1);
    return out;
  }
  const std::size_t slots = std::size_t{1} << (n - 1);
  const int workers = std::clamp(options.threads, 1, n);
  std::vector<std::vector<std::uint64_t>> hists(static_cast<std::size_t>(workers),
                                                std::vector<std::uint64_t>(slots, 0));
  auto job = [&](int w) {
    ListingWalker walker(x, hists[static_cast<std::size_t>(w)]);
    for (int first = 1 + w; first <= n; first += workers)
      walker.from_first(first);
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(job, w);
    for (auto& t : pool)
      t.join();
  }
  for (std::size_t s = 0; s < slots; ++s) {
    std::uint64_t total = 0;
    for (const auto& h : hists)
      total += h[s];
    if (total)
      out.add(comp_of_mask(n, s), Integer(total));
  }
  return out;
}

namespace {

// Builds the admissible permutations cycle by cycle. Each cycle starts at
// the smallest vertex not yet covered, which makes every permutation appear
// exactly once.
class CycleBuilder {
public:
  explicit CycleBuilder(const Digraph& x) : x_(x), full_(full_mask(x.n())) {}

  std::map<std::vector<int>, long long> run() {
    cover(0, 0);
    return counts_;
  }

private:
  void cover(Mask used, int phi) {
    if (used == full_) {
      std::vector<int> type = lengths_;
      std::sort(type.begin(), type.end(), std::greater<>());
      counts_[type] += (phi % 2 == 0) ? 1 : -1;
      return;
    }
    const int v = __builtin_ctzll(~used & full_) + 1;
    // Fixed point: a cycle of X with a loop, of the complement without.
    lengths_.push_back(1);
    cover(used | bit(v), phi);
    lengths_.pop_back();
    grow(v, v, 1, true, true, used | bit(v), phi);
  }

  void grow(int start, int cur, int len, bool in_x, bool in_comp, Mask used, int phi) {
    for (Mask free = full_ & ~used; free; free &= free - 1) {
      const int w = __builtin_ctzll(free) + 1;
      const bool e = x_.has_edge(cur, w);
      const bool nx = in_x && e;
      const bool nc = in_comp && !e;
      if (!nx && !nc)
        continue;
      const bool back = x_.has_edge(w, start);
      const bool cx = nx && back;
      const bool cc = nc && !back;
      if (cx || cc) {
        lengths_.push_back(len + 1);
        cover(used | bit(w), cx ? phi + len : phi);
        lengths_.pop_back();
      }
      grow(start, w, len + 1, nx, nc, used | bit(w), phi);
    }
  }

  static Mask bit(int v) { return Mask{1} << (v - 1); }

  const Digraph& x_;
  Mask full_;
  std::vector<int> lengths_;
  std::map<std::vector<int>, long long> counts_;
};

} // namespace

SymElement u_via_cycles(const Digraph& x, const EnumerationOptions& options) {
  check_cap(x, options, "u_via_cycles");
  SymElement out(SymBasis::PowerSum);
  for (const auto& [type, c] : CycleBuilder(x).run())
    out.add(Partition(type), Rational(c));
  return out;
}

RedeiBerge redei_berge(const Digraph& x, const EnumerationOptions& options) {
  RedeiBerge r;
  r.fundamental = u_via_listings(x, options);
  r.power_sum = u_via_cycles(x, options);
  if (f_to_m(r.fundamental) != p_to_m(r.power_sum))
    throw ConsistencyError("listing and cycle expansions of U disagree");
  return r;
}

RedeiBerge u_of_poset(const Poset& p, const EnumerationOptions& options) {
  return redei_berge(poset_to_digraph(p), options);
}

RedeiBerge u_of_perm(const Permutation& sigma, const EnumerationOptions& options) {
  return u_of_poset(perm_to_poset(sigma), options);
}

Integer redei_berge_polynomial(const Digraph& x, int m, const EnumerationOptions& options) {
  if (m < 0)
    throw ValidationError("m must be nonnegative");
  const Rational a = principal_specialization(u_via_listings(x, options), m);
  const Rational b = principal_specialization(u_via_cycles(x, options), m);
  if (a != b || !is_integral(a))
    throw ConsistencyError("principal specializations disagree: " + to_string(a) + " vs " + to_string(b));
  return numerator(a);
}

namespace {

std::vector<SignedDigraph> subset_deletions(const Digraph& x, const std::vector<Edge>& pool) {
  const int k = static_cast<int>(pool.size());
  std::vector<std::vector<int>> subsets;
  for (Mask s = 1; s <= full_mask(k); ++s) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1U)
        idx.push_back(i);
    subsets.push_back(std::move(idx));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<SignedDigraph> out;
  out.reserve(subsets.size());
  for (const auto& idx : subsets) {
    Digraph d = x;
    for (int i : idx)
      d.remove_edge(pool[static_cast<std::size_t>(i)].first, pool[static_cast<std::size_t>(i)].second);
    out.push_back({idx.size() % 2 == 1 ? 1 : -1, std::move(d)});
  }
  return out;
}

} // namespace

std::vector<SignedDigraph> deletion_expansion(const Digraph& x, int edge_cap) {
  if (is_disjoint_union_of_paths(x))
    throw DomainError("deletion expansion needs a digraph that is not a disjoint union of paths");
  if (x.edge_count() > edge_cap)
    throw CapacityError("deletion expansion: " + std::to_string(x.edge_count()) + " edges exceed cap " +
                        std::to_string(edge_cap));
  return subset_deletions(x, x.edges());
}

std::vector<SignedDigraph> k_deletion_expansion(const Digraph& x, std::span<const int> cycle) {
  if (cycle.size() < 2)
    throw ValidationError("k-deletion needs a directed cycle with k >= 2");
  if (!is_cycle_of(x, cycle))
    throw ValidationError("the given vertex sequence is not a directed cycle of X");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return subset_deletions(x, edges);
}

QSymElement signed_sum_m(const std::vector<SignedDigraph>& terms, const EnumerationOptions& options) {
  QSymElement total(QBasis::Monomial);
  for (const auto& t : terms) {
    QSymElement u = f_to_m(u_via_listings(t.digraph, options));
    if (t.sign < 0)
      total -= u;
    else
      total += u;
  }
  return total;
}

namespace {

// Number of i in [n-j] with {i, ..., i+j-1} inside S; n when j = 0.
int runs(Mask s, int n, int j) {
  if (j == 0)
    return n;
  int count = 0;
  const Mask window = full_mask(j);
  for (int i = 0; i + j <= n - 1; ++i)
    if (((s >> i) & window) == window)
      ++count;
  return count;
}

Partition hook(int k, int n) {
  std::vector<int> parts{k};
  parts.resize(static_cast<std::size_t>(n - k + 1), 1);
  return Partition(std::move(parts));
}

} // namespace

InvariantReport invariants_from_u(const QSymElement& u, int n, const InvariantOptions& options) {
  if (u.basis() != QBasis::Fundamental)
    throw ValidationError("invariants_from_u expects an F-basis expansion");
  if (n < 0 || n > kMaxVertices)
    throw ValidationError("degree outside [0, 64]");
  Integer mass = 0;
  for (const auto& [alpha, c] : u.terms()) {
    if (alpha.degree() != n)
      throw ConsistencyError("term " + to_string(alpha) + " is not of degree " + std::to_string(n));
    mass += c;
  }
  if (mass != factorial(n))
    throw ConsistencyError("total coefficient " + to_string(mass) + " differs from n! = " +
                           to_string(factorial(n)));

  InvariantReport r;
  r.n = n;
  if (n >= 1) {
    std::vector<Integer> sums(static_cast<std::size_t>(n), 0); // index j = k - 1
    for (const auto& [alpha, c] : u.terms()) {
      const Mask s = descent_mask(alpha);
      for (int j = 0; j < n; ++j)
        sums[static_cast<std::size_t>(j)] += c * runs(s, n, j);
    }
    for (int k = 1; k <= n; ++k)
      r.path_counts[k] = exact_divide(sums[static_cast<std::size_t>(k - 1)], factorial(n - k + 1),
                                      "k-vertex path count");
    r.nonloop_edges = n >= 2 ? r.path_counts[2] : Integer(0);
  }
  r.p_coefficients = m_to_p(f_to_m(u));

  auto integral_coefficient = [&](const Partition& key) {
    const Rational c = r.p_coefficients.coefficient(key);
    if (!is_integral(c))
      throw ConsistencyError("p-coefficient " + to_string(c) + " of " + to_string(key) + " is not integral");
    return numerator(c);
  };

  if (options.tournament) {
    if (n >= 2 && r.nonloop_edges != binomial(n, 2))
      throw DomainError("odd-cycle extraction needs a tournament; edge count " + to_string(r.nonloop_edges) +
                        " differs from n(n-1)/2");
    std::map<int, Integer> cycles;
    for (int k = 3; k <= n; k += 2)
      cycles[k] = exact_divide(integral_coefficient(hook(k, n)), 2, "odd-cycle count");
    r.odd_cycle_counts = std::move(cycles);
  }
  if (options.poset) {
    Integer pairs = n >= 2 ? integral_coefficient(hook(2, n)) : Integer(0);
    if (pairs < 0)
      throw ConsistencyError("negative incomparable-pair count");
    r.incomparable_pairs = pairs;
  }
  return r;
}

InvariantReport invariants_of(const Digraph& x, const InvariantOptions& options,
                              const EnumerationOptions& enumeration) {
  if (options.tournament && !is_tournament(x))
    throw DomainError("odd-cycle extraction requested on a digraph that is not a tournament");
  return invariants_from_u(u_via_listings(x, enumeration), x.n(), options);
}

bool is_p_positive(const SymElement& u) {
  if (u.basis() != SymBasis::PowerSum)
    throw ValidationError("is_p_positive expects a p-basis element");
  return std::all_of(u.terms().begin(), u.terms().end(), [](const auto& t) { return t.second > 0; });
}

} // namespace rbsym
