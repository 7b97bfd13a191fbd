#include <doctest.h>

#include <set>

#include "rbsym/combinatorics.hpp"
#include "rbsym/errors.hpp"
#include "rbsym/exact.hpp"

using namespace rbsym;

TEST_SUITE("combinatorics") {

TEST_CASE("comp_of_subset and subset_of_comp") {
  CHECK(comp_of_subset(DescentSubset(5, {2, 3})) == Composition{2, 1, 2});
  CHECK(comp_of_subset(DescentSubset(4, {})) == Composition{4});
  CHECK(comp_of_subset(DescentSubset(4, {1, 2, 3})) == Composition{1, 1, 1, 1});
  CHECK(subset_of_comp(Composition{2, 1, 2}) == DescentSubset(5, {2, 3}));
  CHECK(subset_of_comp(Composition{4}) == DescentSubset(4, {}));
  CHECK(subset_of_comp(Composition{1, 3}) == DescentSubset(4, {1}));
  CHECK_THROWS_AS(DescentSubset(4, {4}), ValidationError);
  CHECK_THROWS_AS(DescentSubset(4, {0}), ValidationError);
}

TEST_CASE("the bijection round-trips in both directions") {
  for (int n = 1; n <= 8; ++n) {
    for_each_descent_subset(n, [&](const DescentSubset& s) { CHECK(subset_of_comp(comp_of_subset(s)) == s); });
    for_each_composition(n, [&](const Composition& a) {
      CHECK(comp_of_subset(subset_of_comp(a)) == a);
      CHECK(comp_of_mask(n, descent_mask(a)) == a);
    });
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition{1, 1, 1}, Partition{3}));
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), ValidationError);
}

TEST_CASE("dominance is a partial order for n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions(n);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a))
          CHECK(a == b);
        for (const auto& c : ps)
          if (dominance_leq(a, b) && dominance_leq(b, c))
            CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("enumeration order and counts") {
  CHECK(compositions(3) == std::vector<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(4).front() == Partition{4});
  CHECK(partitions(4).back() == Partition{1, 1, 1, 1});
  const std::size_t expected_partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n <= 9; ++n)
    CHECK(partitions(n).size() == expected_partitions[n]);
  for (int n = 1; n <= 10; ++n)
    CHECK(compositions(n).size() == (std::size_t{1} << (n - 1)));
  CHECK(compositions(0).size() == 1);
  for (int n = 0; n <= 7; ++n) {
    std::size_t count = 0;
    std::vector<int> prev;
    bool increasing = true;
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      values[static_cast<std::size_t>(i)] = i + 1;
    for_each_permutation(values, [&](std::span<const int> p) {
      std::vector<int> cur(p.begin(), p.end());
      if (count > 0 && !(prev < cur))
        increasing = false;
      prev = cur;
      ++count;
    });
    CHECK(count == static_cast<std::size_t>(factorial(n)));
    CHECK(increasing);
  }
  CHECK_THROWS_AS(permutations(11), CapacityError);
}

TEST_CASE("set compositions") {
  const auto two = set_compositions(0b11, Composition{1, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].blocks == std::vector<Mask>{0b01, 0b10});
  CHECK(two[1].blocks == std::vector<Mask>{0b10, 0b01});
  // Ordered set compositions of [n] into k nonempty blocks: k! S(n, k).
  CHECK(set_compositions(0b1111, 2, false).size() == 14);
  CHECK(set_compositions(0b111, 3, false).size() == 6);
  // With empty blocks allowed: k^n.
  CHECK(set_compositions(0b111, 2, true).size() == 8);
  for (const auto& s : set_compositions(0b1111, 3, true))
    s.validate();
  SetComposition bad{0b11, {0b01, 0b01}, false};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  SetComposition empty_block{0b11, {0b11, 0}, false};
  CHECK_THROWS_AS(empty_block.validate(), ValidationError);
  empty_block.allow_empty_blocks = true;
  CHECK_NOTHROW(empty_block.validate());
  CHECK(empty_block.block_sizes() == std::vector<int>{2, 0});
}

TEST_CASE("cycle decomposition") {
  CHECK(Permutation::identity(3).cycle_type() == Partition{1, 1, 1});
  CHECK(Permutation{2, 3, 1}.cycle_type() == Partition{3});
  CHECK(Permutation{2, 3, 1}.cycles().size() == 1);
  CHECK(Permutation{2, 1, 3}.cycle_type() == Partition{2, 1});
  CHECK(Permutation{3, 1, 2}.cycles() == std::vector<std::vector<int>>{{1, 3, 2}});
  CHECK_THROWS_AS(Permutation({1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 1}), ValidationError);
  for (const auto& p : permutations(6)) {
    const Partition t = p.cycle_type();
    CHECK(t.degree() == 6);
    CHECK(t.multiplicity(1) == p.fixed_points());
    int covered = 0;
    for (const auto& c : p.cycles())
      covered += static_cast<int>(c.size());
    CHECK(covered == 6);
  }
}

TEST_CASE("standardize") {
  const std::vector<int> a{5, 2, 9}, b{1, 2, 3}, c{7}, dup{3, 3};
  CHECK(standardize(a) == Permutation{2, 1, 3});
  CHECK(standardize(b) == Permutation{1, 2, 3});
  CHECK(standardize(c) == Permutation{1});
  CHECK_THROWS_AS(standardize(dup), ValidationError);
}

TEST_CASE("composition and partition validation") {
  CHECK_THROWS_AS(Composition({2, 0}), ValidationError);
  CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  CHECK(Composition{}.degree() == 0);
  CHECK(Composition{1, 3, 1}.sorted() == Partition{3, 1, 1});
  CHECK(Partition{3, 1}.concat(Partition{2, 1}) == Partition{3, 2, 1, 1});
}

TEST_CASE("exact helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(exact_divide(12, 4, "t") == 3);
  CHECK_THROWS_AS(exact_divide(13, 4, "t"), ConsistencyError);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-6", "4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("x", "1"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1", "0"), ValidationError);
}

}
