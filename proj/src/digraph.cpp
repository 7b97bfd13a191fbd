#include "rbsym/digraph.hpp"

#include <algorithm>
#include <numeric>

#include "rbsym/errors.hpp"

namespace rbsym {

Digraph::Digraph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw ValidationError("digraph size " + std::to_string(n) + " outside [0, 64]");
  out_.assign(static_cast<std::size_t>(n), 0);
}

Digraph Digraph::from_edges(int n, std::span<const Edge> edges) {
  Digraph x(n);
  for (const auto& [u, v] : edges) {
    x.check_vertex(u);
    x.check_vertex(v);
    if (x.has_edge(u, v))
      throw ValidationError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    x.add_edge(u, v);
  }
  return x;
}

void Digraph::check_vertex(int v) const {
  if (v < 1 || v > n())
    throw ValidationError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n()) + "]");
}

Mask Digraph::in_mask(int v) const {
  Mask m = 0;
  for (int u = 1; u <= n(); ++u)
    if (has_edge(u, v))
      m |= Mask{1} << (u - 1);
  return m;
}

void Digraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  out_[idx(u)] |= Mask{1} << (v - 1);
}

void Digraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  out_[idx(u)] &= ~(Mask{1} << (v - 1));
}

void Digraph::toggle_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  out_[idx(u)] ^= Mask{1} << (v - 1);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n(); ++u)
    for (int v : mask_elements(out_[idx(u)]))
      out.emplace_back(u, v);
  return out;
}

int Digraph::edge_count() const {
  int c = 0;
  for (Mask m : out_)
    c += popcount(m);
  return c;
}

int Digraph::loop_count() const {
  int c = 0;
  for (int v = 1; v <= n(); ++v)
    c += has_edge(v, v);
  return c;
}

Digraph Digraph::without_loops() const {
  Digraph y = *this;
  for (int v = 1; v <= n(); ++v)
    y.out_[idx(v)] &= ~(Mask{1} << (v - 1));
  return y;
}

// -- structural operations ---------------------------------------------------

Digraph complement(const Digraph& x) {
  Digraph y(x.n());
  const Mask all = full_mask(x.n());
  for (int u = 1; u <= x.n(); ++u)
    for (int v : mask_elements(all & ~x.out_mask(u)))
      y.add_edge(u, v);
  return y;
}

Digraph opposite(const Digraph& x) {
  Digraph y(x.n());
  for (const auto& [u, v] : x.edges())
    y.add_edge(v, u);
  return y;
}

Digraph restrict(const Digraph& x, Mask subset) {
  if (x.n() < 64 && (subset >> x.n()) != 0)
    throw ValidationError("restriction subset is not a subset of the vertex set");
  const std::vector<int> keep = mask_elements(subset);
  Digraph y(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (x.has_edge(keep[i], keep[j]))
        y.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return y;
}

Digraph product(const Digraph& x, const Digraph& y) {
  const int nx = x.n();
  Digraph z(nx + y.n());
  for (const auto& [u, v] : x.edges())
    z.add_edge(u, v);
  for (const auto& [u, v] : y.edges())
    z.add_edge(u + nx, v + nx);
  for (int u = 1; u <= nx; ++u)
    for (int v = 1; v <= y.n(); ++v)
      z.add_edge(u, v + nx);
  return z;
}

Digraph disjoint_union(const Digraph& x, const Digraph& y) {
  const int nx = x.n();
  Digraph z(nx + y.n());
  for (const auto& [u, v] : x.edges())
    z.add_edge(u, v);
  for (const auto& [u, v] : y.edges())
    z.add_edge(u + nx, v + nx);
  return z;
}

Digraph discrete_digraph(int n) { return Digraph(n); }

Mask x_descent_mask(const Digraph& x, std::span<const int> listing) {
  Mask bits = 0;
  for (std::size_t i = 0; i + 1 < listing.size(); ++i)
    if (x.has_edge(listing[i], listing[i + 1]))
      bits |= Mask{1} << i;
  return bits;
}

DescentSubset x_descent_set(const Digraph& x, const Permutation& listing) {
  if (listing.size() != x.n())
    throw ValidationError("listing length does not match the vertex count");
  return DescentSubset::from_mask(x.n(), x_descent_mask(x, listing.images()));
}

bool is_cycle_of(const Digraph& x, std::span<const int> cycle) {
  Mask seen = 0;
  for (int v : cycle) {
    if (v < 1 || v > x.n())
      throw ValidationError("cycle vertex " + std::to_string(v) + " outside the vertex set");
    const Mask bit = Mask{1} << (v - 1);
    if (seen & bit)
      throw ValidationError("cycle repeats vertex " + std::to_string(v));
    seen |= bit;
  }
  if (cycle.empty())
    return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!x.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
      return false;
  return true;
}

AdmissiblePermutation classify_permutation(const Digraph& x, const Permutation& pi) {
  if (pi.size() != x.n())
    throw ValidationError("permutation size does not match the vertex count");
  const Digraph xbar = complement(x);
  AdmissiblePermutation out{pi, true, true, {}};
  for (const auto& cyc : pi.cycles()) {
    CycleSide side = CycleSide::Neither;
    if (is_cycle_of(x, cyc))
      side = CycleSide::InDigraph;
    else if (is_cycle_of(xbar, cyc))
      side = CycleSide::InComplement;
    out.sides.push_back(side);
    if (side == CycleSide::Neither)
      out.in_sigma_x_xbar = false;
    if (cyc.size() > 1 && side != CycleSide::InDigraph)
      out.in_sigma_x = false;
  }
  return out;
}

void for_each_classified_permutation(const Digraph& x,
                                     const std::function<void(const AdmissiblePermutation&)>& fn) {
  std::vector<int> values(static_cast<std::size_t>(x.n()));
  std::iota(values.begin(), values.end(), 1);
  for_each_permutation(values, [&](std::span<const int> w) {
    fn(classify_permutation(x, Permutation(std::vector<int>(w.begin(), w.end()))));
  });
}

std::vector<AdmissiblePermutation> admissible_permutations(const Digraph& x, int cap) {
  if (x.n() > cap)
    throw CapacityError("admissible_permutations: n = " + std::to_string(x.n()) + " above cap " +
                        std::to_string(cap));
  std::vector<AdmissiblePermutation> out;
  for_each_classified_permutation(x, [&](const AdmissiblePermutation& a) {
    if (a.in_sigma_x_xbar)
      out.push_back(a);
  });
  return out;
}

// -- counting ----------------------------------------------------------------

namespace {

void require_dp_size(const Digraph& x, const char* what) {
  if (x.n() > kMaxDpVertices)
    throw CapacityError(std::string(what) + ": n = " + std::to_string(x.n()) + " above cap " +
                        std::to_string(kMaxDpVertices));
}

// paths[mask * n + v]: simple paths visiting exactly `mask`, ending at v,
// starting anywhere inside `start_pool`.
std::vector<std::uint64_t> path_table(const Digraph& x, Mask start_pool, Mask allowed) {
  const int n = x.n();
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint64_t> dp(states * static_cast<std::size_t>(n), 0);
  for (int v : mask_elements(start_pool & allowed))
    dp[(Mask{1} << (v - 1)) * n + (v - 1)] = 1;
  for (Mask mask = 1; mask < states; ++mask) {
    if ((mask & ~allowed) != 0)
      continue;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t ways = dp[mask * n + v];
      if (ways == 0)
        continue;
      Mask next = x.out_mask(v + 1) & allowed & ~mask;
      while (next) {
        const int w = __builtin_ctzll(next);
        next &= next - 1;
        dp[(mask | (Mask{1} << w)) * n + w] += ways;
      }
    }
  }
  return dp;
}

} // namespace

std::uint64_t count_hamiltonian_paths(const Digraph& x) {
  require_dp_size(x, "count_hamiltonian_paths");
  const int n = x.n();
  if (n == 0)
    return 1;
  const Mask all = full_mask(n);
  const auto dp = path_table(x, all, all);
  std::uint64_t total = 0;
  for (int v = 0; v < n; ++v)
    total += dp[all * n + v];
  return total;
}

std::uint64_t count_hamiltonian_cycles(const Digraph& x) {
  require_dp_size(x, "count_hamiltonian_cycles");
  const int n = x.n();
  if (n == 0)
    return 0;
  if (n == 1)
    return x.has_edge(1, 1) ? 1 : 0;
  const Mask all = full_mask(n);
  // Anchor every cycle at vertex 1 so each rotation class is counted once.
  const auto dp = path_table(x, Mask{1}, all);
  std::uint64_t total = 0;
  for (int v = 1; v < n; ++v)
    if (x.has_edge(v + 1, 1))
      total += dp[all * n + v];
  return total;
}

std::uint64_t count_hamiltonian_paths_by_listings(const Digraph& x) {
  if (x.n() > kDefaultMaterializeCap)
    throw CapacityError("listing enumeration above n = 10");
  std::vector<int> values(static_cast<std::size_t>(x.n()));
  std::iota(values.begin(), values.end(), 1);
  std::uint64_t count = 0;
  for_each_permutation(values, [&](std::span<const int> w) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < w.size(); ++i)
      ok = x.has_edge(w[i], w[i + 1]);
    count += ok;
  });
  return count;
}

std::uint64_t count_hamiltonian_cycles_by_listings(const Digraph& x) {
  if (x.n() > kDefaultMaterializeCap)
    throw CapacityError("listing enumeration above n = 10");
  if (x.n() == 0)
    return 0;
  std::vector<int> values(static_cast<std::size_t>(x.n()));
  std::iota(values.begin(), values.end(), 1);
  std::uint64_t count = 0;
  for_each_permutation(values, [&](std::span<const int> w) {
    if (w[0] != 1)
      return;
    count += is_cycle_of(x, w);
  });
  return count;
}

std::uint64_t count_paths(const Digraph& x, int k) {
  const int n = x.n();
  if (k < 1 || k > n)
    throw ValidationError("path vertex count " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
  require_dp_size(x, "count_paths");
  const Mask all = full_mask(n);
  const auto dp = path_table(x, all, all);
  std::uint64_t total = 0;
  for (Mask mask = 1; mask <= all; ++mask) {
    if (popcount(mask) != k)
      continue;
    for (int v = 0; v < n; ++v)
      total += dp[mask * n + v];
  }
  return total;
}

std::uint64_t count_cycles(const Digraph& x, int k) {
  const int n = x.n();
  if (k < 1 || k > n)
    throw ValidationError("cycle length " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  require_dp_size(x, "count_cycles");
  if (k == 1)
    return static_cast<std::uint64_t>(x.loop_count());
  std::uint64_t total = 0;
  // Each cycle is counted from its smallest vertex s, using only vertices >= s.
  for (int s = 1; s <= n; ++s) {
    const Mask allowed = full_mask(n) & ~full_mask(s - 1);
    const auto dp = path_table(x, Mask{1} << (s - 1), allowed);
    for (Mask mask = 1; mask <= full_mask(n); ++mask) {
      if (popcount(mask) != k || (mask & ~allowed) != 0 || !(mask & (Mask{1} << (s - 1))))
        continue;
      for (int v = 0; v < n; ++v)
        if (v + 1 != s && x.has_edge(v + 1, s))
          total += dp[mask * n + v];
    }
  }
  return total;
}

// -- predicates --------------------------------------------------------------

bool is_acyclic(const Digraph& x) {
  const Digraph y = x.without_loops();
  const int n = y.n();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : y.edges())
    ++indeg[static_cast<std::size_t>(v - 1)];
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[static_cast<std::size_t>(v - 1)] == 0)
      ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++removed;
    for (int v : mask_elements(y.out_mask(u)))
      if (--indeg[static_cast<std::size_t>(v - 1)] == 0)
        ready.push_back(v);
  }
  return removed == n;
}

bool is_disjoint_union_of_paths(const Digraph& x) {
  if (x.loop_count() != 0)
    return false;
  for (int v = 1; v <= x.n(); ++v)
    if (popcount(x.out_mask(v)) > 1 || popcount(x.in_mask(v)) > 1)
      return false;
  return is_acyclic(x);
}

bool is_tournament(const Digraph& x) {
  if (x.loop_count() != 0)
    return false;
  for (int u = 1; u <= x.n(); ++u)
    for (int v = u + 1; v <= x.n(); ++v)
      if (x.has_edge(u, v) == x.has_edge(v, u))
        return false;
  return true;
}

bool is_irreducible(const Digraph& x) {
  const int n = x.n();
  if (n <= 1)
    return true;
  const Mask all = full_mask(n);
  for (Mask first = 1; first < all; ++first) {
    const Mask second = all & ~first;
    bool splits = true;
    for (int u : mask_elements(first)) {
      if ((x.out_mask(u) & second) != second) {
        splits = false;
        break;
      }
    }
    for (int u : mask_elements(second)) {
      if (!splits)
        break;
      if (x.out_mask(u) & first)
        splits = false;
    }
    if (splits)
      return false;
  }
  return true;
}

// -- isomorphism -------------------------------------------------------------

Digraph canonical_form(const Digraph& x, int cap) {
  const int n = x.n();
  if (n > cap)
    throw CapacityError("canonical_form: n = " + std::to_string(n) + " above cap " + std::to_string(cap));
  if (n > 8)
    throw CapacityError("canonical_form encodes at most 8 vertices");
  // Row-major matrix packed most-significant-first; smaller code = lex smaller.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> best_order = order;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;
  do {
    std::uint64_t code = 0;
    bool pruned = false;
    bool smaller = !have_best;
    for (int i = 0; i < n; ++i) {
      const Mask row = x.out_mask(order[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j)
        code = (code << 1) | ((row >> (order[static_cast<std::size_t>(j)] - 1)) & 1U);
      if (smaller)
        continue;
      const std::uint64_t best_prefix = best >> ((n - 1 - i) * n);
      if (code > best_prefix) {
        pruned = true;
        break;
      }
      smaller = code < best_prefix;
    }
    if (!pruned && smaller) {
      best = code;
      best_order = order;
      have_best = true;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  Digraph y(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (x.has_edge(best_order[static_cast<std::size_t>(i - 1)], best_order[static_cast<std::size_t>(j - 1)]))
        y.add_edge(i, j);
  return y;
}

bool are_isomorphic(const Digraph& x, const Digraph& y, int cap) {
  if (x.n() != y.n() || x.edge_count() != y.edge_count() || x.loop_count() != y.loop_count())
    return false;
  return canonical_form(x, cap) == canonical_form(y, cap);
}

} // namespace rbsym
