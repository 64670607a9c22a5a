#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "generators.hpp"
#include "literal_fullset.hpp"
#include "spw/oracle.hpp"

using namespace spw;
using namespace spw::testing;

namespace {

LinearLayout shuffled(int n, std::mt19937& rng) {
  LinearLayout l{std::vector<int>(n)};
  std::iota(l.order.begin(), l.order.end(), 0);
  std::shuffle(l.order.begin(), l.order.end(), rng);
  return l;
}

void check_antichain(const FullSet& fs) {
  for (std::size_t i = 0; i < fs.elems.size(); ++i) {
    const Trajectory& t = fs.elems[i].traj;
    validate_trajectory(t);
    CHECK(is_compact(t));
    CHECK(width(t) <= fs.k);
    CHECK(t.boundary_dim() == fs.boundary_dim);
    CHECK(fs.elems[i].cert->length == t.size());
    for (std::size_t j = 0; j < fs.elems.size(); ++j)
      if (i != j) CHECK_FALSE(precedes(fs.elems[j].traj, t));
  }
}

// A random arrangement with a random branch-decomposition.
struct Instance {
  Arrangement a;
  BranchDecomposition bd;
};

Instance random_instance(std::mt19937& rng, Field f, int max_n) {
  Arrangement a = random_arrangement(f, 2 + rng() % 3, 2 + rng() % (max_n - 1), 2, rng);
  if (rng() % 2) return {a, caterpillar(shuffled(a.num_parts(), rng))};
  return {a, branchwidth_bruteforce(a).bd};
}

}  // namespace

TEST_CASE("leaf full sets") {
  Field f(3);
  FullSet z = init_leaf(4, f, 0, 2);
  REQUIRE(z.elems.size() == 1);
  CHECK(z.elems[0].traj.size() == 1);
  FullSet two = init_leaf(1, f, 2, 0);
  REQUIRE(two.elems.size() == 1);
  CHECK(two.elems[0].traj == leaf_trajectory(f, 2));
  CHECK(std::get<Certificate::Leaf>(two.elems[0].cert->node).part == 1);
}

TEST_CASE("antichains stay minimal, sound and complete at every node") {
  std::mt19937 rng(41);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    Instance in = random_instance(rng, Field(t % 2 ? 2 : 3), 5);
    int k = int(rng() % 3);
    DpRun run = run_dp(in.a, in.bd, k);
    for (int v = 0; v < int(in.bd.nodes().size()); ++v) {
      const NodeSets& ns = run.nodes[v];
      check_antichain(ns.result);
      if (!in.bd.node(v).is_leaf()) {
        check_antichain(ns.joined);
        check_antichain(ns.left);
      }
      // against the layouts of the parts below v
      const Arrangement& sa = run.boundaries.standard;
      std::vector<int> parts = in.bd.parts_below(v);
      Arrangement sub = sa.restrict_to(parts);
      Subspace bv = Subspace::span(run.boundaries.nodes[v].basis);
      std::vector<Trajectory> canon;
      LinearLayout l{std::vector<int>(parts.size())};
      std::iota(l.order.begin(), l.order.end(), 0);
      do canon.push_back(compactify(canonical_trajectory(sub, l, bv)));
      while (std::next_permutation(l.order.begin(), l.order.end()));
      for (const auto& e : ns.result.elems) {
        bool realizable = false;
        for (const auto& c : canon) realizable |= precedes(c, e.traj);
        CHECK(realizable);
      }
      for (const auto& c : canon) {
        if (width(c) > k) continue;
        bool covered = false;
        for (const auto& e : ns.result.elems) covered |= precedes(e.traj, c);
        CHECK(covered);
      }
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("backtracking yields a layout dominated by each root element") {
  std::mt19937 rng(42);
  for (int t = 0; t < 80; ++t) {
    Instance in = random_instance(rng, Field(t % 2 ? 2 : 3), 6);
    int k = pathwidth_subset_dp(in.a).width + int(rng() % 2);
    DpRun run = run_dp(in.a, in.bd, k);
    REQUIRE_FALSE(run.root().empty());
    Subspace zero = Subspace::zero(in.a.field(), run.boundaries.standard.ambient_dim());
    for (const auto& e : run.root().elems) {
      LinearLayout l = backtrack(e, in.bd, run.boundaries);
      CHECK(precedes(canonical_trajectory(run.boundaries.standard, l, zero), e.traj));
      CHECK(layout_width(in.a, l) <= width(e.traj));
    }
  }
}

TEST_CASE("literal full sets match the antichain closures") {
  std::mt19937 rng(43);
  int compared = 0;
  for (int t = 0; t < 400 && compared < 25; ++t) {
    Field f(2);
    Arrangement a = random_arrangement(f, 2 + rng() % 3, 2 + rng() % 3, 2, rng);
    BranchDecomposition bd = rng() % 2 ? caterpillar(shuffled(a.num_parts(), rng)) : branchwidth_bruteforce(a).bd;
    int k = int(rng() % 2);
    auto lit = literal_dp(a, bd, k);
    if (!lit) continue;
    DpRun run = run_dp(a, bd, k);
    for (int v = 0; v < int(bd.nodes().size()); ++v) {
      const NodeSets& ns = run.nodes[v];
      CHECK(up_closure(ns.result, f) == (*lit)[v].result);
      CHECK((*lit)[v].result == definitional_full_set(bd, run.boundaries, v, k));
      if (bd.node(v).is_leaf()) continue;
      CHECK(up_closure(ns.left, f) == (*lit)[v].left);
      CHECK(up_closure(ns.right, f) == (*lit)[v].right);
      CHECK(up_closure(ns.joined, f) == (*lit)[v].joined);
    }
    ++compared;
  }
  CHECK(compared >= 10);
}
