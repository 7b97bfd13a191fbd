#pragma once

// Named property suites behind `rbsym verify`. Each one walks a finite
// population (exhaustive where small, seeded samples otherwise) and stops
// at the first counterexample.

#include <cstdint>
#include <string>
#include <vector>

#include "rbsym/io.hpp"

namespace rbsym {

struct VerifyConfig {
  int n = 4;
  /// Cycle length for the k-deletion suite.
  int k = 3;
  /// Seeded random objects per suite, on top of any exhaustive part.
  int samples = 20;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct SuiteResult {
  std::string suite;
  VerifyConfig config;
  bool passed = true;
  std::size_t checked = 0;
  /// Set on failure.
  std::string failure;
  Json counterexample;

  Json to_json() const;
};

/// oracle, dual, loops, deletion, k-deletion, redei, berge, hopf-axioms,
/// morphisms, p-positivity.
const std::vector<std::string>& suite_names();

/// ValidationError for an unknown suite or a bad config, CapacityError
/// when n is above what the suite enumerates.
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

/// Isomorphism class representatives on exactly n vertices, in canonical
/// order. Exhaustive over edge sets, so n is capped at 4 (3 with loops).
std::vector<Digraph> digraph_classes(int n, bool loops);
/// Tournaments on n vertices up to isomorphism, n <= 6.
std::vector<Digraph> tournament_classes(int n);
/// Every labeled loopless acyclic digraph on n <= 4 vertices.
std::vector<Digraph> acyclic_digraphs(int n);

/// Loopless digraphs on n vertices when n <= 4, then `samples` seeded random
/// digraphs with loops on n vertices.
std::vector<Digraph> digraph_population(int n, int samples, std::uint64_t seed);

} // namespace rbsym
