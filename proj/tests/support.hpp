#pragma once

// Shared fixtures: digraph populations and a few brute-force oracles that
// deliberately avoid the library's own algorithms.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "rbsym/digraph.hpp"
#include "rbsym/qsym.hpp"

namespace testing_support {

using namespace rbsym;

/// Digraph whose edge set is read off `bits`, one bit per ordered pair
/// (u, v) in row-major order; loops skipped when `loops` is false.
inline Digraph digraph_from_bits(int n, std::uint64_t bits, bool loops) {
  Digraph x(n);
  int b = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v && !loops)
        continue;
      if (bits >> b & 1U)
        x.add_edge(u, v);
      ++b;
    }
  return x;
}

inline void for_each_loopless_digraph(int n, const std::function<void(const Digraph&)>& fn) {
  const int pairs = n * (n - 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
    fn(digraph_from_bits(n, bits, false));
}

inline Digraph random_digraph(int n, std::mt19937_64& rng, bool loops = true) {
  std::bernoulli_distribution coin(0.5);
  Digraph x(n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if ((u != v || loops) && coin(rng))
        x.add_edge(u, v);
  return x;
}

/// The population of the oracle-equivalence checks: every loopless
/// digraph on 4 vertices plus `samples` seeded random digraphs with loops
/// for each of n = 5, 6.
inline std::vector<Digraph> oracle_population(int samples, std::uint64_t seed = 0) {
  std::vector<Digraph> out;
  for_each_loopless_digraph(4, [&](const Digraph& x) { out.push_back(x); });
  std::mt19937_64 rng(seed);
  for (int n : {5, 6})
    for (int i = 0; i < samples; ++i)
      out.push_back(random_digraph(n, rng));
  return out;
}

inline std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

/// Hamiltonian paths by trying every vertex order.
inline long long brute_hamiltonian_paths(const Digraph& x) {
  long long count = 0;
  std::vector<int> v = iota_vec(x.n());
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < v.size() && ok; ++i)
      ok = x.has_edge(v[i], v[i + 1]);
    count += ok;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

/// Sequences of k distinct vertices along edges, by trying every ordered
/// k-subset.
inline long long brute_paths(const Digraph& x, int k) {
  long long count = 0;
  std::vector<int> seq;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t used) {
    if (static_cast<int>(seq.size()) == k) {
      ++count;
      return;
    }
    for (int v = 1; v <= x.n(); ++v) {
      if (used >> (v - 1) & 1U)
        continue;
      if (!seq.empty() && !x.has_edge(seq.back(), v))
        continue;
      seq.push_back(v);
      rec(used | (std::uint64_t{1} << (v - 1)));
      seq.pop_back();
    }
  };
  rec(0);
  return count;
}

/// Directed k-cycles on distinct vertices, counted up to rotation.
inline long long brute_cycles(const Digraph& x, int k) {
  long long closed = 0;
  std::vector<int> seq;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t used) {
    if (static_cast<int>(seq.size()) == k) {
      closed += x.has_edge(seq.back(), seq.front());
      return;
    }
    for (int v = 1; v <= x.n(); ++v) {
      if (used >> (v - 1) & 1U)
        continue;
      if (!seq.empty() && !x.has_edge(seq.back(), v))
        continue;
      seq.push_back(v);
      rec(used | (std::uint64_t{1} << (v - 1)));
      seq.pop_back();
    }
  };
  rec(0);
  return closed / k;
}

} // namespace testing_support
