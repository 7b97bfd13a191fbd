#pragma once

// JSON and text formats.
//
//   element     {"basis": "F"|"M"|"p"|"m", "terms": [{"key": [..], "num": "..", "den": ".."}]}
//               terms in decreasing lexicographic key order, rationals reduced
//   digraph     {"n": 3, "edges": [[1,2],[2,3]]}      or text "3; 1 2; 2 3"
//   poset       {"n": 3, "relations": [[1,3]], "relations_kind": "cover"|"full"}
//   permutation {"one_line": [2,1,3]}

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "rbsym/digraph.hpp"
#include "rbsym/order.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/redei_berge.hpp"

namespace rbsym {

using Json = nlohmann::json;

Json to_json(const QSymElement& x);
Json to_json(const SymElement& x);
using AnyElement = std::variant<QSymElement, SymElement>;
/// ValidationError on malformed input, an unknown basis, or a fractional
/// coefficient in a QSym basis.
AnyElement element_from_json(const Json& j);

Json to_json(const Digraph& x);
Json to_json(const Poset& p);
Json to_json(const Permutation& s);
Digraph digraph_from_json(const Json& j);
Poset poset_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
/// "n; u v; u v; ..." (blank entries ignored).
Digraph digraph_from_text(const std::string& text);
std::string to_text(const Digraph& x);

/// A digraph, poset or permutation read from JSON or digraph text, with
/// the digraph it induces.
struct ParsedObject {
  std::string kind;
  Digraph digraph;
  std::optional<Poset> poset;
  std::optional<Permutation> permutation;
};

/// `kind` is "digraph", "poset", "permutation" or "auto" (decided by the
/// JSON keys; plain text is always a digraph). ValidationError otherwise.
ParsedObject parse_object(const std::string& text, const std::string& kind = "auto");

Json to_json(const InvariantReport& r);

/// Compact dump with sorted keys: equal elements give equal strings.
std::string canonical_key(const SymElement& x);

} // namespace rbsym
