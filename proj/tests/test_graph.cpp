#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "generators.hpp"
#include "spw/clique_expression.hpp"

using namespace spw;
using namespace spw::testing;

namespace {

int lrw_by_permutations(const Graph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  int best = -1;
  do {
    int w = linear_rankwidth_of(g, order);
    if (best < 0 || w < best) best = w;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<int> parts_of(unsigned mask, int n) {
  std::vector<int> p;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) p.push_back(i);
  return p;
}

}  // namespace

TEST_CASE("graph arrangement connectivity is twice the cut-rank") {
  std::mt19937 rng(61);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(2 + int(rng() % 7), 0.5, rng);
    Arrangement a = graph_arrangement(g);
    for (unsigned x = 0; x < (1u << g.size()); ++x) {
      auto p = parts_of(x, g.size());
      CHECK(connectivity(a, p) == 2 * cut_rank(g, p));
    }
  }
}

TEST_CASE("linear rank-width of small named graphs") {
  CHECK(linear_rankwidth(cycle_graph(5)).width == 2);
  CHECK(linear_rankwidth(path_graph(4)).width == 1);
  for (int n = 2; n <= 6; ++n) CHECK(linear_rankwidth(complete_graph(n)).width == 1);
  CHECK(linear_rankwidth(Graph(4)).width == 0);
  CHECK(linear_rankwidth(Graph(1)).width == 0);
  CHECK_FALSE(linear_rankwidth_at_most(cycle_graph(5), 1));
}

TEST_CASE("exact linear rank-width matches brute force on all graphs with up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (unsigned long long code = 0; code < (1ull << pairs); ++code) {
      Graph g = graph_from_code(n, code);
      RankwidthResult r = linear_rankwidth(g);
      CHECK(r.width == lrw_by_permutations(g));
      CHECK(linear_rankwidth_of(g, r.order) == r.width);
    }
  }
}

TEST_CASE("clique expressions evaluate back to the graph") {
  std::mt19937 rng(62);
  for (int t = 0; t < 150; ++t) {
    Graph g = random_graph(1 + int(rng() % 8), 0.1 + 0.1 * (t % 8), rng);
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    int w = linear_rankwidth_of(g, order);
    CliqueExpr e = linear_clique_expression(g, order);
    CHECK(evaluate(e, g.size()) == g);
    CHECK(label_count(e) <= (1 << w) + 1);
    CliqueExpr back = parse_clique_expression(to_string(e));
    CHECK(to_string(back) == to_string(e));
    CHECK(evaluate(back, g.size()) == g);
  }
  CHECK_THROWS_AS(parse_clique_expression("u(v(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_clique_expression("w(1,2)"), std::invalid_argument);
  CliqueExpr twice = parse_clique_expression("u(v(1,1),v(1,2))");
  CHECK_THROWS_AS(evaluate(twice, 2), std::invalid_argument);
}
