#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "spw/oracle.hpp"
#include "spw/solver.hpp"

using namespace spw;
using spw::testing::random_arrangement;

TEST_CASE("decision matches the subset oracle on random arrangements") {
  std::mt19937 rng(31);
  for (int t = 0; t < 120; ++t) {
    Field f(t % 3 == 0 ? 3 : 2);
    Arrangement a = random_arrangement(f, 2 + rng() % 4, 1 + rng() % 6, 2, rng);
    int pw = pathwidth_subset_dp(a).width;
    for (int k = std::max(0, pw - 1); k <= pw + 1; ++k) {
      Decision d = decide_pathwidth(a, k);
      CHECK(bool(d) == (pw <= k));
      if (d) CHECK(layout_width(a, *d.layout) <= k);
    }
  }
}

TEST_CASE("exact path-width with and without a branch-decomposition") {
  std::mt19937 rng(32);
  for (int t = 0; t < 60; ++t) {
    Field f(t % 2 ? 3 : 2);
    Arrangement a = random_arrangement(f, 2 + rng() % 4, 2 + rng() % 4, 2, rng);
    int pw = pathwidth_subset_dp(a).width;
    ExactResult e = exact_pathwidth(a);
    CHECK(e.width == pw);
    CHECK(layout_width(a, e.layout) == pw);
    BranchwidthResult bw = branchwidth_bruteforce(a);
    ExactResult eb = exact_pathwidth(a, bw.bd);
    CHECK(eb.width == pw);
    CHECK(layout_width(a, eb.layout) == pw);
  }
}

TEST_CASE("uniform matroid U(2,4) has path-width 2") {
  Arrangement a(Mat::from_rows(Field(3), {{1, 0, 1, 1}, {0, 1, 1, 2}}), {0, 1, 2, 3}, 4);
  CHECK_FALSE(decide_pathwidth(a, 1));
  Decision d = decide_pathwidth(a, 2);
  REQUIRE(d);
  CHECK(layout_width(a, *d.layout) == 2);
  CHECK(exact_pathwidth(a).width == 2);
}

TEST_CASE("degenerate inputs") {
  Field f(2);
  Arrangement empty(Mat(f, 3, 0), {}, 0);
  CHECK(decide_pathwidth(empty, 0));
  Arrangement one(Mat::from_rows(f, {{1}, {1}}), {0}, 1);
  Decision d = decide_pathwidth(one, 0);
  REQUIRE(d);
  CHECK(d.layout->order == std::vector<int>{0});
  // zero parts and an empty part go to the front
  Arrangement z(Mat::from_rows(f, {{0, 1, 1, 0}, {0, 0, 1, 1}}), {0, 1, 1, 3}, 4);
  Decision dz = decide_pathwidth(z, 1);
  REQUIRE(dz);
  CHECK(dz.layout->order[0] == 0);
  CHECK(dz.layout->order[1] == 2);
  CHECK(layout_width(z, *dz.layout) <= 1);
  CHECK_THROWS_AS(decide_pathwidth(z, -1), std::invalid_argument);
}

TEST_CASE("a wide part is reported") {
  // part 0 spans everything, the rest spans a 3-space
  Field f(2);
  Arrangement a(Mat::from_rows(f, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}), {0, 0, 0, 1, 2, 3}, 4);
  Decision d = decide_pathwidth(a, 1);
  CHECK_FALSE(d);
  CHECK(d.wide_part == 0);
}
