#include "rbsym/io.hpp"

#include <sstream>

namespace rbsym {

namespace {

template <class Element>
Json element_json(const Element& x, const std::string& basis) {
  Json terms = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const Rational q(it->second);
    terms.push_back({{"key", it->first.parts()},
                     {"num", to_string(Integer(numerator(q)))},
                     {"den", to_string(Integer(denominator(q)))}});
  }
  return {{"basis", basis}, {"terms", std::move(terms)}};
}

// Runs `fn`, turning json library exceptions into ValidationError.
template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<Edge> pairs_of(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw ValidationError("expected a pair [u, v], got " + e.dump());
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

} // namespace

Json to_json(const QSymElement& x) { return element_json(x, basis_name(x.basis())); }
Json to_json(const SymElement& x) { return element_json(x, basis_name(x.basis())); }

AnyElement element_from_json(const Json& j) {
  return guarded("element", [&]() -> AnyElement {
    const std::string basis = j.at("basis").get<std::string>();
    const Json& terms = j.at("terms");
    if (basis == "F" || basis == "M") {
      QSymElement x(basis == "F" ? QBasis::Fundamental : QBasis::Monomial);
      for (const auto& t : terms) {
        const Rational q = parse_rational(t.at("num").get<std::string>(), t.value("den", std::string("1")));
        if (!is_integral(q))
          throw ValidationError("QSym coefficients must be integers, got " + to_string(q));
        x.add(Composition(t.at("key").get<std::vector<int>>()), numerator(q));
      }
      return x;
    }
    if (basis == "p" || basis == "m") {
      SymElement x(basis == "p" ? SymBasis::PowerSum : SymBasis::MonomialSym);
      for (const auto& t : terms)
        x.add(Partition(t.at("key").get<std::vector<int>>()),
              parse_rational(t.at("num").get<std::string>(), t.value("den", std::string("1"))));
      return x;
    }
    throw ValidationError("unknown basis \"" + basis + "\"");
  });
}

Json to_json(const Digraph& x) {
  Json edges = Json::array();
  for (const auto& [u, v] : x.edges())
    edges.push_back({u, v});
  return {{"n", x.n()}, {"edges", std::move(edges)}};
}

Json to_json(const Poset& p) {
  Json rel = Json::array();
  for (const auto& [a, b] : p.cover_relations())
    rel.push_back({a, b});
  return {{"n", p.n()}, {"relations", std::move(rel)}, {"relations_kind", "cover"}};
}

Json to_json(const Permutation& s) { return {{"one_line", s.images()}}; }

Digraph digraph_from_json(const Json& j) {
  return guarded("digraph", [&] {
    const std::vector<Edge> edges = pairs_of(j.at("edges"));
    return Digraph::from_edges(j.at("n").get<int>(), edges);
  });
}

Poset poset_from_json(const Json& j) {
  return guarded("poset", [&] {
    const std::string kind = j.value("relations_kind", std::string("cover"));
    if (kind != "cover" && kind != "full")
      throw ValidationError("relations_kind must be \"cover\" or \"full\"");
    const std::vector<Edge> rel = pairs_of(j.value("relations", Json::array()));
    return Poset::from_relations(j.at("n").get<int>(), rel,
                                 kind == "cover" ? RelationKind::Cover : RelationKind::Full);
  });
}

Permutation permutation_from_json(const Json& j) {
  return guarded("permutation", [&] { return Permutation(j.at("one_line").get<std::vector<int>>()); });
}

Digraph digraph_from_text(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');)
    if (item.find_first_not_of(" \t\r\n") != std::string::npos)
      fields.push_back(item);
  if (fields.empty())
    throw ValidationError("empty digraph text");
  auto ints = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<int> out;
    for (std::string tok; in >> tok;) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw ValidationError("not an integer: \"" + tok + "\"");
      out.push_back(v);
    }
    return out;
  };
  const std::vector<int> head = ints(fields[0]);
  if (head.size() != 1)
    throw ValidationError("digraph text must start with the vertex count");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::vector<int> e = ints(fields[i]);
    if (e.size() != 2)
      throw ValidationError("edge entry \"" + fields[i] + "\" needs two vertices");
    edges.emplace_back(e[0], e[1]);
  }
  return Digraph::from_edges(head[0], edges);
}

std::string to_text(const Digraph& x) {
  std::string s = std::to_string(x.n());
  for (const auto& [u, v] : x.edges())
    s += "; " + std::to_string(u) + " " + std::to_string(v);
  return s;
}

ParsedObject parse_object(const std::string& text, const std::string& kind) {
  const auto first = text.find_first_not_of(" \t\r\n");
  ParsedObject obj;
  if (first == std::string::npos || text[first] != '{') {
    if (kind != "auto" && kind != "digraph")
      throw ValidationError("plain text input is only accepted for digraphs");
    obj.kind = "digraph";
    obj.digraph = digraph_from_text(text);
    return obj;
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
  obj.kind = kind;
  if (obj.kind == "auto")
    obj.kind = j.contains("one_line") ? "permutation" : j.contains("relations") ? "poset" : "digraph";
  if (obj.kind == "digraph") {
    obj.digraph = digraph_from_json(j);
  } else if (obj.kind == "poset") {
    obj.poset = poset_from_json(j);
    obj.digraph = poset_to_digraph(*obj.poset);
  } else if (obj.kind == "permutation") {
    obj.permutation = permutation_from_json(j);
    obj.poset = perm_to_poset(*obj.permutation);
    obj.digraph = poset_to_digraph(*obj.poset);
  } else {
    throw ValidationError("kind must be digraph, poset or permutation");
  }
  return obj;
}

Json to_json(const InvariantReport& r) {
  Json paths = Json::object();
  for (const auto& [k, c] : r.path_counts)
    paths[std::to_string(k)] = to_string(c);
  Json j = {{"n", r.n},
            {"nonloop_edges", to_string(r.nonloop_edges)},
            {"path_counts", std::move(paths)},
            {"p_coefficients", to_json(r.p_coefficients)}};
  if (r.odd_cycle_counts) {
    Json cyc = Json::object();
    for (const auto& [k, c] : *r.odd_cycle_counts)
      cyc[std::to_string(k)] = to_string(c);
    j["odd_cycle_counts"] = std::move(cyc);
  }
  if (r.incomparable_pairs)
    j["incomparable_pairs"] = to_string(*r.incomparable_pairs);
  return j;
}

std::string canonical_key(const SymElement& x) { return to_json(x).dump(); }

} // namespace rbsym
