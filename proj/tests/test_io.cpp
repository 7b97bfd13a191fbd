#include <doctest.h>

#include "rbsym/io.hpp"

using namespace rbsym;

TEST_SUITE("io") {

TEST_CASE("element JSON round trip") {
  SymElement p(SymBasis::PowerSum);
  p.add(Partition{1, 1}, Rational(1, 2));
  p.add(Partition{2}, Rational(-3));
  const Json j = to_json(p);
  CHECK(j["basis"] == "p");
  CHECK(j["terms"][0]["key"] == Json::array({2}));
  CHECK(j["terms"][0]["num"] == "-3");
  CHECK(j["terms"][1]["den"] == "2");
  CHECK(std::get<SymElement>(element_from_json(j)) == p);
  CHECK(std::get<SymElement>(element_from_json(Json::parse(j.dump()))) == p);

  QSymElement f(QBasis::Fundamental);
  f.add(Composition{1, 2}, Integer("123456789012345678901234567890"));
  f.add(Composition{3}, 2);
  CHECK(std::get<QSymElement>(element_from_json(to_json(f))) == f);
  CHECK(to_json(f)["terms"][0]["key"] == Json::array({3}));
}

TEST_CASE("element JSON errors") {
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"basis":"s","terms":[]})")), ValidationError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"basis":"F"})")), ValidationError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"basis":"F","terms":[{"key":[1],"num":"1","den":"2"}]})")),
                  ValidationError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"basis":"p","terms":[{"key":[1,2],"num":"1"}]})")),
                  ValidationError);
}

TEST_CASE("digraph formats") {
  const Digraph x = Digraph::from_edges(3, {{1, 2}, {3, 3}});
  CHECK(digraph_from_json(to_json(x)) == x);
  CHECK(to_json(x).dump() == R"({"edges":[[1,2],[3,3]],"n":3})");
  CHECK(digraph_from_text("3; 1 2; 3 3") == x);
  CHECK(digraph_from_text(to_text(x)) == x);
  CHECK(digraph_from_text("2") == Digraph(2));
  CHECK_THROWS_AS(digraph_from_text("2; 1"), ValidationError);
  CHECK_THROWS_AS(digraph_from_text("2; 1 x"), ValidationError);
  CHECK_THROWS_AS(digraph_from_text(""), ValidationError);
  CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"n":2,"edges":[[1,3]]})")), ValidationError);
  CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"n":2,"edges":[[1]]})")), ValidationError);
  CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"edges":[]})")), ValidationError);
}

TEST_CASE("poset and permutation formats") {
  const Poset p = Poset::from_relations(3, {{1, 2}, {2, 3}});
  CHECK(poset_from_json(to_json(p)) == p);
  CHECK(poset_from_json(Json::parse(R"({"n":3,"relations":[[1,2],[2,3],[1,3]],"relations_kind":"full"})")) == p);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"n":3,"relations":[[1,2],[2,3]],"relations_kind":"full"})")),
                  ValidationError);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"n":2,"relations":[],"relations_kind":"hasse"})")),
                  ValidationError);
  const Permutation s{2, 3, 1};
  CHECK(permutation_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"one_line":[1,1]})")), ValidationError);
}

TEST_CASE("canonical keys") {
  SymElement a(SymBasis::PowerSum), b(SymBasis::PowerSum);
  a.add(Partition{2}, Rational(2, 4));
  a.add(Partition{1, 1}, 1);
  b.add(Partition{1, 1}, 1);
  b.add(Partition{2}, Rational(1, 2));
  CHECK(canonical_key(a) == canonical_key(b));
}

}
