#include <doctest.h>

#include <set>

#include "ewe/errors.hpp"
#include "ewe/shape.hpp"
#include "oracles.hpp"

using namespace ewe;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("shape construction") {
  CHECK_THROWS_AS(FerrersShape({2, 3}), usage_error);
  CHECK_THROWS_AS(FerrersShape({2, 0}), usage_error);
  const FerrersShape s{5, 5, 5, 3, 2};
  CHECK(s.rows() == 5);
  CHECK(s.column_height(1) == 5);
  CHECK(s.column_height(3) == 4);
  CHECK(s.column_height(4) == 3);
  CHECK(s.column_height(6) == 0);
  CHECK(s.has_cell(3, 5));
  CHECK_FALSE(s.has_cell(4, 4));
  CHECK(FerrersShape::staircase(3) == FerrersShape({3, 2, 1}));
  CHECK(parse_shape("5,5,5,3,2") == s);
  CHECK(to_string(s) == "5,5,5,3,2");
  CHECK_THROWS_AS(parse_shape("3,x"), usage_error);
}

TEST_CASE("transversals of the worked shape") {
  const FerrersShape s{5, 5, 5, 3, 2};
  CHECK(is_transversal(s, P("45321")));
  const auto t = make_transversal(s, P("45321"));
  CHECK(transversal_contains(t, P("321")));
  CHECK_FALSE(transversal_contains(t, P("231")));
  CHECK(contains(P("45321"), P("231")));
  CHECK_THROWS_AS(is_transversal(s, P("1234")), usage_error);
  CHECK_THROWS_AS(make_transversal(FerrersShape::staircase(3), P("123")), usage_error);
}

TEST_CASE("square and staircase transversals") {
  for (int n = 1; n <= 6; ++n) {
    const auto square = FerrersShape::square(n);
    const auto stair = FerrersShape::staircase(n);
    int stair_count = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      REQUIRE(is_transversal(square, p));
      const bool fits = is_transversal(stair, p);
      REQUIRE(fits == oracle::fits(stair, p));
      if (fits) {
        ++stair_count;
        REQUIRE(p == reverse(Permutation::identity(n)));
      }
    });
    CHECK(stair_count == 1);
    CHECK(transversals(stair).size() == 1);
  }
}

TEST_CASE("shapes_in_box") {
  CHECK(shapes_in_box(1) == std::vector<FerrersShape>{FerrersShape{1}});
  CHECK(shapes_in_box(2) == std::vector<FerrersShape>{FerrersShape{2, 1}, FerrersShape{2, 2}});
  CHECK(shapes_in_box(3) == std::vector<FerrersShape>{FerrersShape{3, 2, 1}, FerrersShape{3, 2, 2},
                                                       FerrersShape{3, 3, 1}, FerrersShape{3, 3, 2},
                                                       FerrersShape{3, 3, 3}});
}

TEST_CASE("shapes_in_box is complete and duplicate-free") {
  // Brute force: every weakly decreasing part list of length n in [1, n]^n that
  // admits a transversal.
  for (int n = 1; n <= 6; ++n) {
    std::set<FerrersShape> expected;
    std::vector<int> parts(n, 1);
    while (true) {
      if (std::is_sorted(parts.rbegin(), parts.rend())) {
        const FerrersShape s(parts);
        if (!transversals(s).empty()) expected.insert(s);
      }
      int i = 0;
      while (i < n && parts[i] == n) parts[i++] = 1;
      if (i == n) break;
      ++parts[i];
    }
    const auto got = shapes_in_box(n);
    CHECK(std::set<FerrersShape>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
    for (const auto& s : got) CHECK(s.admits_transversal());
  }
  CHECK(shapes_up_to_box(3).size() == 1 + 2 + 5);
}

TEST_CASE("transversal enumeration matches the fit oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : shapes_in_box(n)) {
      std::set<Permutation> expected;
      for_each_permutation(n, [&](const Permutation& p) {
        if (oracle::fits(s, p)) expected.insert(p);
      });
      const auto got = transversals(s);
      REQUIRE(std::set<Permutation>(got.begin(), got.end()) == expected);
      REQUIRE(got.size() == expected.size());
    }
}

TEST_CASE("on the square, transversal containment is classical containment") {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k)
    for (auto& s : all_permutations(k)) patterns.push_back(s);
  for (int n = 1; n <= 6; ++n) {
    const auto square = FerrersShape::square(n);
    for_each_permutation(n, [&](const Permutation& p) {
      for (const auto& s : patterns) REQUIRE(transversal_contains(square, p, s) == contains(p, s));
    });
  }
}

TEST_CASE("transversal containment matches the square-span oracle and implies containment") {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 3; ++k)
    for (auto& s : all_permutations(k)) patterns.push_back(s);
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : shapes_in_box(n))
      for_each_transversal(shape, [&](const Permutation& p) {
        for (const auto& s : patterns) {
          const bool got = transversal_contains(shape, p, s);
          REQUIRE(got == oracle::transversal_contains(shape, p, s));
          if (got) REQUIRE(contains(p, s));
        }
      });
}
