#include "rbsym/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "rbsym/hopf.hpp"

namespace rbsym {

Json SuiteResult::to_json() const {
  Json j = {{"suite", suite},
            {"n", config.n},
            {"k", config.k},
            {"samples", config.samples},
            {"seed", config.seed},
            {"threads", config.threads},
            {"passed", passed},
            {"checked", checked}};
  if (!passed) {
    j["failure"] = failure;
    j["counterexample"] = counterexample;
  }
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "dual",     "loops",       "deletion",  "k-deletion",
                                              "redei",  "berge",    "hopf-axioms", "morphisms", "p-positivity"};
  return names;
}

namespace {

Digraph from_bits(int n, std::uint64_t bits, bool loops) {
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

// One fair coin per ordered pair, loops included. Uses raw engine bits so
// the stream does not depend on the standard library's distributions.
Digraph random_digraph(int n, std::mt19937_64& rng) {
  Digraph x(n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (rng() >> 63)
        x.add_edge(u, v);
  return x;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Fisher-Yates on raw engine output, for the same reason.
void shuffle(std::vector<int>& v, std::mt19937_64& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(uniform(rng, 0, i))]);
}

class Runner {
public:
  Runner(const std::string& name, const VerifyConfig& config) {
    result_.suite = name;
    result_.config = config;
  }

  bool ok() const { return result_.passed; }

  void check(bool condition, const std::string& what, const std::function<Json()>& witness) {
    ++result_.checked;
    if (!condition && result_.passed) {
      result_.passed = false;
      result_.failure = what;
      result_.counterexample = witness();
    }
  }

  SuiteResult done() { return std::move(result_); }

private:
  SuiteResult result_;
};

void require_n(const VerifyConfig& c, int lo, int hi, const std::string& suite) {
  if (c.n < lo)
    throw ValidationError(suite + " needs n >= " + std::to_string(lo));
  if (c.n > hi)
    throw CapacityError(suite + ": n = " + std::to_string(c.n) + " exceeds cap " + std::to_string(hi));
}

QSymElement u_m(const Digraph& x, const EnumerationOptions& opt) { return f_to_m(u_via_listings(x, opt)); }

template <class T>
FreeModuleElement<T> basis(const T& x) {
  return FreeModuleElement<T>(x);
}

std::vector<Poset> posets_up_to(int n, bool up_to_iso) {
  std::vector<Poset> out;
  for (int m = 0; m <= n; ++m)
    for (auto& p : enumerate_posets(m, up_to_iso))
      out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> perms_up_to(int n) {
  std::vector<Permutation> out;
  for (int m = 0; m <= n; ++m)
    for (auto& s : permutations(m))
      out.push_back(std::move(s));
  return out;
}

std::vector<Digraph> digraph_classes_up_to(int n, bool loops) {
  std::vector<Digraph> out;
  for (int m = 0; m <= n; ++m)
    for (auto& x : digraph_classes(m, loops))
      out.push_back(std::move(x));
  return out;
}

SuiteResult suite_oracle(const VerifyConfig& c, const EnumerationOptions& opt) {
  require_n(c, 0, 6, "oracle");
  Runner run("oracle", c);
  for (const Digraph& x : digraph_population(c.n, c.samples, c.seed)) {
    const QSymElement a = u_m(x, opt);
    const QSymElement b = p_to_m(u_via_cycles(x, opt));
    const QSymElement z = psi(basis(x));
    run.check(a == b && a == z, "listings, cycles and psi disagree", [&] {
      return Json{{"digraph", to_json(x)}, {"listings", to_json(a)}, {"cycles", to_json(b)}, {"psi", to_json(z)}};
    });
    if (!run.ok())
      break;
  }
  return run.done();
}

SuiteResult suite_dual(const VerifyConfig& c, const EnumerationOptions& opt) {
  require_n(c, 0, 6, "dual");
  Runner run("dual", c);
  for (const Digraph& x : digraph_population(c.n, c.samples, c.seed)) {
    run.check(u_via_listings(x, opt) == u_via_listings(opposite(x), opt), "U_X differs from U of the opposite",
              [&] { return Json{{"digraph", to_json(x)}}; });
    if (!run.ok())
      return run.done();
  }
  for (const Poset& p : posets_up_to(std::min(c.n, 5), true)) {
    run.check(u_of_poset(p, opt).power_sum == u_of_poset(dual(p), opt).power_sum, "U_P differs from U of the dual",
              [&] { return Json{{"poset", to_json(p)}}; });
    if (!run.ok())
      break;
  }
  return run.done();
}

SuiteResult suite_loops(const VerifyConfig& c, const EnumerationOptions& opt) {
  require_n(c, 0, 6, "loops");
  Runner run("loops", c);
  for (const Digraph& x : digraph_population(c.n, c.samples, c.seed)) {
    const QSymElement u = u_via_listings(x, opt);
    for (int v = 1; v <= x.n() && run.ok(); ++v) {
      Digraph y = x;
      if (y.has_edge(v, v))
        y.remove_edge(v, v);
      else
        y.add_edge(v, v);
      run.check(u_via_listings(y, opt) == u, "toggling a loop changed U",
                [&] { return Json{{"digraph", to_json(x)}, {"vertex", v}}; });
    }
    if (!run.ok())
      break;
  }
  return run.done();
}

SuiteResult suite_berge(const VerifyConfig& c) {
  require_n(c, 0, 8, "berge");
  Runner run("berge", c);
  for (const Digraph& x : digraph_population(c.n, c.samples, c.seed)) {
    const auto h = count_hamiltonian_paths(x);
    const auto hc = count_hamiltonian_paths(complement(x));
    run.check(h % 2 == hc % 2, "HP(X) and HP of the complement differ in parity",
              [&] { return Json{{"digraph", to_json(x)}, {"hp", h}, {"hp_complement", hc}}; });
    if (!run.ok())
      break;
  }
  return run.done();
}

SuiteResult suite_redei(const VerifyConfig& c) {
  require_n(c, 1, 6, "redei");
  Runner run("redei", c);
  for (int m = 1; m <= c.n && run.ok(); ++m)
    for (const Digraph& t : tournament_classes(m)) {
      const auto h = count_hamiltonian_paths(t);
      run.check(h % 2 == 1, "tournament with an even Hamiltonian path count",
                [&] { return Json{{"digraph", to_json(t)}, {"hp", h}}; });
      if (!run.ok())
        break;
    }
  return run.done();
}

SuiteResult suite_deletion(const VerifyConfig& c, const EnumerationOptions& opt) {
  require_n(c, 1, 6, "deletion");
  constexpr int kEdgeCap = 8;
  Runner run("deletion", c);
  auto test = [&](const Digraph& x) {
    if (is_disjoint_union_of_paths(x) || x.edge_count() > kEdgeCap)
      return;
    const QSymElement lhs = u_m(x, opt);
    const QSymElement rhs = signed_sum_m(deletion_expansion(x, kEdgeCap), opt);
    run.check(lhs == rhs, "edge-subset deletion sum differs from U_X",
              [&] { return Json{{"digraph", to_json(x)}, {"u", to_json(lhs)}, {"sum", to_json(rhs)}}; });
  };
  if (c.n <= 3)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (c.n * c.n)) && run.ok(); ++bits)
      test(from_bits(c.n, bits, true));
  // Random edge sets of size 1..8, loops allowed.
  std::mt19937_64 rng(c.seed);
  std::vector<int> slots(static_cast<std::size_t>(c.n * c.n));
  std::iota(slots.begin(), slots.end(), 0);
  for (int i = 0; i < c.samples && run.ok(); ++i) {
    shuffle(slots, rng);
    const int m = uniform(rng, 1, std::min(kEdgeCap, c.n * c.n));
    Digraph x(c.n);
    for (int s = 0; s < m; ++s)
      x.add_edge(slots[static_cast<std::size_t>(s)] / c.n + 1, slots[static_cast<std::size_t>(s)] % c.n + 1);
    test(x);
  }
  return run.done();
}

SuiteResult suite_k_deletion(const VerifyConfig& c, const EnumerationOptions& opt) {
  require_n(c, 2, 6, "k-deletion");
  if (c.k < 2 || c.k > c.n)
    throw ValidationError("k-deletion needs 2 <= k <= n");
  Runner run("k-deletion", c);
  std::mt19937_64 rng(c.seed);
  std::vector<int> order(static_cast<std::size_t>(c.n));
  for (int i = 0; i < std::max(c.samples, 1) && run.ok(); ++i) {
    Digraph x = random_digraph(c.n, rng);
    std::iota(order.begin(), order.end(), 1);
    shuffle(order, rng);
    const std::vector<int> cycle(order.begin(), order.begin() + c.k);
    for (int j = 0; j < c.k; ++j)
      x.add_edge(cycle[static_cast<std::size_t>(j)], cycle[static_cast<std::size_t>((j + 1) % c.k)]);
    const QSymElement lhs = u_m(x, opt);
    const QSymElement rhs = signed_sum_m(k_deletion_expansion(x, cycle), opt);
    run.check(lhs == rhs, "cycle-edge deletion sum differs from U_X",
              [&] { return Json{{"digraph", to_json(x)}, {"cycle", cycle}}; });
  }
  return run.done();
}

template <class T>
void hopf_axioms_for(Runner& run, const std::vector<T>& objects, int n) {
  using S = HopfSpecies<T>;
  const std::string sp = species_name(S::tag);
  auto witness = [](const T& x) { return [x] { return Json{{"object", to_json(x)}}; }; };
  for (const T& x : objects) {
    TensorElement<T> single;
    single.add({S::key(x)}, 1);
    const TensorElement<T> d = coproduct_at(single, 0);
    run.check(coproduct_at(d, 0) == coproduct_at(d, 1), sp + ": coproduct is not coassociative", witness(x));
    Integer left = 0, right = 0;
    bool unit_ok = true;
    for (const auto& [k, m] : d.terms()) {
      if (S::degree(k[0]) == 0) {
        unit_ok = unit_ok && k[1] == S::key(x);
        left += m;
      }
      if (S::degree(k[1]) == 0) {
        unit_ok = unit_ok && k[0] == S::key(x);
        right += m;
      }
    }
    run.check(unit_ok && left == 1 && right == 1, sp + ": counit axiom fails", witness(x));
    if (!run.ok())
      return;
  }
  for (const T& x : objects)
    for (const T& y : objects) {
      if (S::degree(x) + S::degree(y) > n)
        continue;
      const auto a = basis(x), b = basis(y);
      const auto ab = hopf_product(a, b);
      auto pair = [&] { return Json{{"left", to_json(x)}, {"right", to_json(y)}}; };
      run.check(hopf_coproduct(ab) == tensor_product(hopf_coproduct(a), hopf_coproduct(b)),
                sp + ": coproduct is not multiplicative", pair);
      run.check(character(ab) == character(a) * character(b), sp + ": character is not multiplicative", pair);
      run.check(psi(ab) == m_product(psi(a), psi(b)), sp + ": psi is not an algebra map", pair);
      if (!run.ok())
        return;
    }
}

SuiteResult suite_hopf_axioms(const VerifyConfig& c) {
  require_n(c, 0, 4, "hopf-axioms");
  Runner run("hopf-axioms", c);
  hopf_axioms_for(run, digraph_classes_up_to(c.n, true), c.n);
  if (run.ok())
    hopf_axioms_for(run, posets_up_to(c.n, false), c.n);
  if (run.ok())
    hopf_axioms_for(run, perms_up_to(c.n), c.n);
  return run.done();
}

SuiteResult suite_morphisms(const VerifyConfig& c, const EnumerationOptions& opt) {
  require_n(c, 0, 4, "morphisms");
  Runner run("morphisms", c);
  // Structure first: these hold independently of the characters.
  for (const Permutation& s : perms_up_to(c.n)) {
    run.check(map_tensor<Permutation, Poset>(coproduct_of(s), perm_to_poset) == hopf_coproduct(morphism_f(s)),
              "f does not commute with the coproduct", [&] { return Json{{"permutation", to_json(s)}}; });
    if (!run.ok())
      return run.done();
  }
  for (const Poset& p : posets_up_to(c.n, false)) {
    const auto gp = morphism_g(p);
    run.check(map_tensor<Poset, Digraph>(coproduct_of(p), poset_to_digraph) == hopf_coproduct(gp),
              "g does not commute with the coproduct", [&] { return Json{{"poset", to_json(p)}}; });
    run.check(psi(gp) == u_m(poset_to_digraph(p), opt), "psi(g(P)) differs from U_P",
              [&] { return Json{{"poset", to_json(p)}}; });
    if (!run.ok())
      return run.done();
  }
  for (const Permutation& s : perms_up_to(c.n)) {
    const auto fs = morphism_f(s);
    run.check(character(basis(s)) == character(fs), "zeta(sigma) differs from zeta(f(sigma))", [&] {
      return Json{{"permutation", to_json(s)},
                  {"zeta_sigma", to_string(character(basis(s)))},
                  {"zeta_f_sigma", to_string(character(fs))}};
    });
    if (!run.ok())
      return run.done();
  }
  for (const Poset& p : posets_up_to(c.n, false)) {
    const auto gp = morphism_g(p);
    run.check(character(basis(p)) == character(gp), "zeta(P) differs from zeta(g(P))", [&] {
      return Json{{"poset", to_json(p)},
                  {"zeta_P", to_string(character(basis(p)))},
                  {"zeta_g_P", to_string(character(gp))}};
    });
    if (!run.ok())
      break;
  }
  return run.done();
}

SuiteResult suite_p_positivity(const VerifyConfig& c, const EnumerationOptions& opt) {
  require_n(c, 0, 6, "p-positivity");
  Runner run("p-positivity", c);
  for (int m = 0; m <= std::min(c.n, 4) && run.ok(); ++m)
    for (const Digraph& x : acyclic_digraphs(m)) {
      const SymElement u = u_via_cycles(x, opt);
      run.check(is_p_positive(u), "acyclic digraph with a negative p-coefficient",
                [&] { return Json{{"digraph", to_json(x)}, {"u", to_json(u)}}; });
      if (!run.ok())
        break;
    }
  for (const Poset& p : posets_up_to(c.n, true)) {
    if (!run.ok())
      break;
    const SymElement u = u_of_poset(p, opt).power_sum;
    run.check(is_p_positive(u), "poset with a negative p-coefficient",
              [&] { return Json{{"poset", to_json(p)}, {"u", to_json(u)}}; });
  }
  for (const Permutation& s : perms_up_to(c.n)) {
    if (!run.ok())
      break;
    const SymElement u = u_of_perm(s, opt).power_sum;
    run.check(is_p_positive(u), "permutation with a negative p-coefficient",
              [&] { return Json{{"permutation", to_json(s)}, {"u", to_json(u)}}; });
  }
  return run.done();
}

} // namespace

std::vector<Digraph> digraph_classes(int n, bool loops) {
  if (n < 0)
    throw ValidationError("digraph_classes: negative n");
  if (n > 4)
    throw CapacityError("digraph_classes: n = " + std::to_string(n) + " exceeds cap 4");
  std::set<Digraph> seen;
  const int pairs = loops ? n * n : n * (n - 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
    seen.insert(canonical_form(from_bits(n, bits, loops)));
  return {seen.begin(), seen.end()};
}

std::vector<Digraph> tournament_classes(int n) {
  if (n < 0)
    throw ValidationError("tournament_classes: negative n");
  if (n > 6)
    throw CapacityError("tournament_classes: n = " + std::to_string(n) + " exceeds cap 6");
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      pairs.emplace_back(u, v);
  std::set<Digraph> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    Digraph t(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [u, v] = pairs[i];
      if (bits >> i & 1U)
        t.add_edge(v, u);
      else
        t.add_edge(u, v);
    }
    seen.insert(canonical_form(t));
  }
  return {seen.begin(), seen.end()};
}

std::vector<Digraph> acyclic_digraphs(int n) {
  if (n < 0)
    throw ValidationError("acyclic_digraphs: negative n");
  if (n > 4)
    throw CapacityError("acyclic_digraphs: n = " + std::to_string(n) + " exceeds cap 4");
  std::vector<Digraph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1))); ++bits) {
    Digraph x = from_bits(n, bits, false);
    if (is_acyclic(x))
      out.push_back(std::move(x));
  }
  return out;
}

std::vector<Digraph> digraph_population(int n, int samples, std::uint64_t seed) {
  if (n < 0 || samples < 0)
    throw ValidationError("digraph_population: negative n or samples");
  std::vector<Digraph> out;
  if (n <= 4)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1))); ++bits)
      out.push_back(from_bits(n, bits, false));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i)
    out.push_back(random_digraph(n, rng));
  return out;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
  if (config.samples < 0)
    throw ValidationError("samples must be nonnegative");
  if (config.threads < 1)
    throw ValidationError("threads must be positive");
  const EnumerationOptions opt{.threads = config.threads};
  if (name == "oracle")
    return suite_oracle(config, opt);
  if (name == "dual")
    return suite_dual(config, opt);
  if (name == "loops")
    return suite_loops(config, opt);
  if (name == "deletion")
    return suite_deletion(config, opt);
  if (name == "k-deletion")
    return suite_k_deletion(config, opt);
  if (name == "redei")
    return suite_redei(config);
  if (name == "berge")
    return suite_berge(config);
  if (name == "hopf-axioms")
    return suite_hopf_axioms(config);
  if (name == "morphisms")
    return suite_morphisms(config, opt);
  if (name == "p-positivity")
    return suite_p_positivity(config, opt);
  throw ValidationError("unknown suite \"" + name + "\"");
}

} // namespace rbsym
