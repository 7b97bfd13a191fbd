#include "rbsym/lab.hpp"
#include "rbsym/verify.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace rbsym {

DigraphFamily discrete_family() {
  return {"discrete", [](int n) { return discrete_digraph(n); }};
}

DigraphFamily family_xnk(int k) {
  if (k < 0)
    throw ValidationError("X_{n,k} needs k >= 0");
  return {"xnk(k=" + std::to_string(k) + ")", [k](int n) {
            Digraph x(n);
            const int kk = std::min(k, std::max(0, n - 2));
            for (int i = 1; i <= kk; ++i)
              x.add_edge(1, 1 + i);
            return x;
          }};
}

namespace {

Digraph checked_member(const DigraphFamily& family, int n) {
  Digraph x = family.member(n);
  if (x.n() != n)
    throw ValidationError("family " + family.name + " returned " + std::to_string(x.n()) +
                          " vertices for n = " + std::to_string(n));
  return x;
}

void check_basis_cap(int n, int cap) {
  if (n > cap)
    throw CapacityError("n = " + std::to_string(n) + " exceeds the basis cap " + std::to_string(cap));
}

} // namespace

BasisConditionReport check_basis_conditions(const DigraphFamily& family, int max_n, int cap) {
  check_basis_cap(max_n, cap);
  BasisConditionReport report;
  report.family = family.name;
  report.all_conditions = true;
  report.all_coefficients_match = true;
  for (int n = 1; n <= max_n; ++n) {
    const Digraph x = checked_member(family, n);
    BasisConditionRow row;
    row.n = n;
    row.h = count_hamiltonian_cycles(x);
    row.h_bar = count_hamiltonian_cycles(complement(x));
    row.condition = n % 2 == 1 ? row.h + row.h_bar > 0 : row.h != row.h_bar;
    const Rational c = u_via_cycles(x, {.cap = cap}).coefficient(Partition{n});
    if (!is_integral(c))
      throw ConsistencyError("fractional p-coefficient in U");
    row.p_n_coefficient = numerator(c);
    row.predicted_coefficient = n % 2 == 1 ? Integer(row.h + row.h_bar) : Integer(row.h_bar - row.h);
    row.coefficient_matches = row.p_n_coefficient == row.predicted_coefficient;
    report.all_conditions = report.all_conditions && row.condition;
    report.all_coefficients_match = report.all_coefficients_match && row.coefficient_matches;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool TransitionMatrix::dominance_triangular() const {
  for (std::size_t r = 0; r < index.size(); ++r)
    for (std::size_t c = 0; c < index.size(); ++c)
      if (entries[r][c] != 0 && !dominance_leq(index[c], index[r]))
        return false;
  return true;
}

bool TransitionMatrix::nonzero_diagonal() const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (entries[i][i] == 0)
      return false;
  return true;
}

Rational TransitionMatrix::determinant() const {
  auto a = entries;
  const std::size_t d = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot][col] == 0)
      ++pivot;
    if (pivot == d)
      return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < d; ++r) {
      if (a[r][col] == 0)
        continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < d; ++c)
        a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

TransitionMatrix transition_matrix(const DigraphFamily& family, int n, int cap) {
  check_basis_cap(n, cap);
  std::vector<SymElement> member_u;
  for (int m = 0; m <= n; ++m)
    member_u.push_back(u_via_cycles(checked_member(family, m), {.cap = cap}));
  TransitionMatrix t;
  t.n = n;
  t.index = partitions(n);
  for (const Partition& lambda : t.index) {
    SymElement u(SymBasis::PowerSum, Partition{});
    for (int part : lambda.parts())
      u = p_product(u, member_u[static_cast<std::size_t>(part)]);
    std::vector<Rational> row;
    for (const Partition& mu : t.index)
      row.push_back(u.coefficient(mu));
    t.entries.push_back(std::move(row));
  }
  return t;
}

Partition reconstruct_chain_multiset(const QSymElement& u_fundamental, int n) {
  const InvariantReport inv = invariants_from_u(u_fundamental, n);
  // r_m = c_m - sum over i > m of C(i, m) r_i, c_m = number of m-element chains.
  std::vector<Integer> r(static_cast<std::size_t>(n) + 1, 0);
  for (int m = n; m >= 1; --m) {
    Integer v = inv.path_counts.at(m);
    for (int i = m + 1; i <= n; ++i)
      v -= binomial(i, m) * r[static_cast<std::size_t>(i)];
    if (v < 0)
      throw DomainError("chain reconstruction went negative at size " + std::to_string(m) +
                        "; not the U of a disjoint union of chains");
    r[static_cast<std::size_t>(m)] = v;
  }
  std::vector<int> parts;
  Integer total = 0;
  for (int m = n; m >= 1; --m) {
    total += r[static_cast<std::size_t>(m)] * m;
    if (total > n)
      break;
    parts.insert(parts.end(), static_cast<std::size_t>(r[static_cast<std::size_t>(m)]), m);
  }
  if (total != n)
    throw DomainError("reconstructed chain sizes sum to " + to_string(total) + ", not " + std::to_string(n));
  return Partition(std::move(parts));
}

Partition reconstruct_chain_multiset(const SymElement& u, int n) {
  if (u.basis() != SymBasis::PowerSum)
    throw ValidationError("reconstruct_chain_multiset expects a p-basis element");
  return reconstruct_chain_multiset(m_to_f(p_to_m(u)), n);
}

std::string search_class_name(SearchClass c) {
  switch (c) {
  case SearchClass::Posets:
    return "posets";
  case SearchClass::Digraphs:
    return "digraphs";
  case SearchClass::PathUnions:
    return "path-unions";
  case SearchClass::ChainUnions:
    return "chain-unions";
  }
  return "?";
}

SearchClass parse_search_class(const std::string& name) {
  for (SearchClass c : {SearchClass::Posets, SearchClass::Digraphs, SearchClass::PathUnions, SearchClass::ChainUnions})
    if (search_class_name(c) == name)
      return c;
  throw ValidationError("unknown search class \"" + name + "\"");
}

std::size_t CollisionReport::collision_groups() const {
  return static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [](const auto& g) { return g.members.size() > 1; }));
}

std::size_t CollisionReport::max_group_size() const {
  std::size_t m = 0;
  for (const auto& g : groups)
    m = std::max(m, g.members.size());
  return m;
}

bool CollisionReport::conjecture_holds() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const auto& g) { return !g.conjecture_ok || *g.conjecture_ok; });
}

bool CollisionReport::all_singletons() const { return max_group_size() <= 1; }

std::vector<Json> CollisionReport::json_lines() const {
  std::vector<Json> out;
  for (const auto& g : groups) {
    Json j = {{"class", search_class_name(search_class)}, {"n", n}, {"u_key", g.u_key}, {"members", g.members}};
    j["m_plus_M"] = g.m_plus_M ? Json(*g.m_plus_M) : Json(nullptr);
    j["conjecture_ok"] = g.conjecture_ok ? Json(*g.conjecture_ok) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

Json CollisionReport::summary() const {
  Json j = {{"class", search_class_name(search_class)},
            {"n", n},
            {"objects", objects},
            {"groups", groups.size()},
            {"collision_groups", collision_groups()},
            {"max_group_size", max_group_size()}};
  if (search_class == SearchClass::Posets) {
    std::vector<Json> bad;
    for (const auto& g : groups)
      if (g.conjecture_ok && !*g.conjecture_ok) {
        // First member paired with the first one whose m + M differs.
        const auto& v = *g.m_plus_M;
        const auto other = std::find_if(v.begin(), v.end(), [&](int x) { return x != v.front(); }) - v.begin();
        bad.push_back(Json::array({g.members.front(), g.members[static_cast<std::size_t>(other)]}));
      }
    j["verdict"] = (bad.empty() ? "no counterexample found for n = " : "counterexample found for n = ") +
                   std::to_string(n);
    j["counterexamples"] = bad;
  } else {
    j["verdict"] = all_singletons() ? "every U determines the isomorphism class"
                                    : "non-isomorphic objects share U";
  }
  return j;
}

Digraph path_union(const Partition& sizes) {
  Digraph x(sizes.degree());
  int base = 0;
  for (int s : sizes.parts()) {
    for (int i = 1; i < s; ++i)
      x.add_edge(base + i, base + i + 1);
    base += s;
  }
  return x;
}

namespace {

struct SearchObject {
  Digraph digraph;
  Json json;
  std::optional<int> m_plus_M;
};

// Labeled disjoint unions of directed paths: successor maps that are
// injective and acyclic.
std::vector<Digraph> path_union_classes(int n) {
  std::set<Digraph> seen;
  std::vector<int> succ(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> assign = [&](int v) {
    if (v > n) {
      Digraph x(n);
      for (int u = 1; u <= n; ++u)
        if (succ[static_cast<std::size_t>(u)])
          x.add_edge(u, succ[static_cast<std::size_t>(u)]);
      if (is_disjoint_union_of_paths(x))
        seen.insert(canonical_form(x));
      return;
    }
    succ[static_cast<std::size_t>(v)] = 0;
    assign(v + 1);
    for (int w = 1; w <= n; ++w) {
      if (w == v || taken[static_cast<std::size_t>(w)])
        continue;
      taken[static_cast<std::size_t>(w)] = true;
      succ[static_cast<std::size_t>(v)] = w;
      assign(v + 1);
      taken[static_cast<std::size_t>(w)] = false;
    }
    succ[static_cast<std::size_t>(v)] = 0;
  };
  assign(1);
  return {seen.begin(), seen.end()};
}

std::vector<SearchObject> search_objects(SearchClass c, int n, const SearchCaps& caps) {
  std::vector<SearchObject> out;
  auto cap = [&](int limit) {
    if (n > limit)
      throw CapacityError(search_class_name(c) + " search: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(limit));
  };
  switch (c) {
  case SearchClass::Posets:
  case SearchClass::ChainUnions:
    cap(c == SearchClass::Posets ? caps.posets : std::min(caps.posets, caps.unions));
    for (const Poset& p : enumerate_posets(n, true, std::max(caps.posets, n))) {
      if (c == SearchClass::ChainUnions && !chain_structure(p))
        continue;
      const MinMaxCounts mm = min_max_counts(p);
      out.push_back({poset_to_digraph(p), to_json(p),
                     c == SearchClass::Posets ? std::optional<int>(mm.minimal + mm.maximal) : std::nullopt});
    }
    break;
  case SearchClass::Digraphs:
    cap(caps.digraphs);
    for (const Digraph& x : digraph_classes(n, true))
      out.push_back({x, to_json(x), std::nullopt});
    break;
  case SearchClass::PathUnions:
    cap(std::min(caps.unions, kDefaultIsoCap));
    for (const Digraph& x : path_union_classes(n))
      out.push_back({x, to_json(x), std::nullopt});
    break;
  }
  return out;
}

} // namespace

CollisionReport collision_search(SearchClass c, int n, const SearchCaps& caps, const EnumerationOptions& options) {
  if (n < 0)
    throw ValidationError("negative n");
  const std::vector<SearchObject> objects = search_objects(c, n, caps);

  std::vector<std::string> keys(objects.size());
  const int workers = std::clamp(options.threads, 1, static_cast<int>(std::max<std::size_t>(objects.size(), 1)));
  auto job = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < objects.size(); i += static_cast<std::size_t>(workers))
      keys[i] = canonical_key(u_via_cycles(objects[i].digraph, {.cap = options.cap}));
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

  std::map<std::string, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < objects.size(); ++i)
    by_key[keys[i]].push_back(i);

  CollisionReport report;
  report.search_class = c;
  report.n = n;
  report.objects = objects.size();
  for (const auto& [key, idx] : by_key) {
    CollisionGroup g;
    g.u_key = key;
    for (std::size_t i : idx)
      g.members.push_back(objects[i].json);
    if (c == SearchClass::Posets) {
      std::vector<int> values;
      for (std::size_t i : idx)
        values.push_back(*objects[i].m_plus_M);
      g.conjecture_ok = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
      g.m_plus_M = std::move(values);
    }
    report.groups.push_back(std::move(g));
  }
  return report;
}

std::optional<DisjointUnionWitness> find_disjoint_union_counterexample(int max_total) {
  std::vector<std::vector<Digraph>> classes(static_cast<std::size_t>(std::max(max_total, 0)) + 1);
  for (int n = 1; n < max_total && n <= 3; ++n)
    classes[static_cast<std::size_t>(n)] = digraph_classes(n, true);
  for (int total = 2; total <= max_total; ++total) {
    for (int a = 1; a <= total / 2; ++a) {
      const int b = total - a;
      if (a > 3 || b > 3)
        continue;
      for (const Digraph& x : classes[static_cast<std::size_t>(a)])
        for (const Digraph& y : classes[static_cast<std::size_t>(b)]) {
          SymElement joint = u_via_cycles(disjoint_union(x, y));
          SymElement prod = p_product(u_via_cycles(x), u_via_cycles(y));
          if (joint != prod)
            return DisjointUnionWitness{x, y, std::move(joint), std::move(prod)};
        }
    }
  }
  return std::nullopt;
}

} // namespace rbsym
