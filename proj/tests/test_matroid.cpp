#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "generators.hpp"
#include "spw/matroid.hpp"
#include "spw/oracle.hpp"
#include "spw/trellis.hpp"

using namespace spw;

namespace {

Mat code_c() {
  return Mat::from_rows(Field(2), {{1, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}});
}
Mat code_c_prime() {
  return Mat::from_rows(Field(2), {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
}
std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int hamming(std::span<const Elem> a, std::span<const Elem> b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

IndependenceOracle matrix_oracle(const Mat& m) {
  return [m](std::span<const int> x) { return rank(m.select_columns(x)) == int(x.size()); };
}

}  // namespace

TEST_CASE("equivalent codes with different trellis sizes") {
  Mat c = code_c(), cp = code_c_prime();
  CHECK(matroid_layout_width(c, identity(6)) == 3);
  CHECK(matroid_layout_width(cp, identity(6)) == 1);
  MatroidLayout tw = trellis_width(c);
  CHECK(tw.width == 1);
  CHECK(matroid_layout_width(c, tw.order) == 1);
  CHECK(build_trellis(c, identity(6)).max_layer_size() == 8);
  CHECK(build_trellis(c, tw.order).max_layer_size() == 2);
  CHECK_FALSE(trellis_width_at_most(c, 0));
}

TEST_CASE("matroid path-width matches the oracle, loops and coloops included") {
  std::mt19937 rng(51);
  for (int t = 0; t < 80; ++t) {
    Field f(t % 2 ? 3 : 2);
    int r = 1 + int(rng() % 4), n = 1 + int(rng() % 7);
    Mat m = spw::testing::random_matrix(f, r, n, rng);
    if (rng() % 3 == 0)
      for (int i = 0; i < r; ++i) m.at(i, 0) = 0;  // a loop
    int pw = pathwidth_subset_dp(column_arrangement(m)).width;
    MatroidLayout ml = matroid_pathwidth(m);
    CHECK(ml.width == pw);
    CHECK(matroid_layout_width(m, ml.order) == pw);
    std::vector<int> sorted = ml.order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == identity(n));
    if (pw > 0) CHECK_FALSE(matroid_pathwidth_at_most(m, pw - 1));
  }
  // a coloop next to a circuit
  Mat m = Mat::from_rows(Field(2), {{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
  auto order = matroid_pathwidth_at_most(m, 1);
  REQUIRE(order);
  CHECK(order->front() == 3);
  CHECK(matroid_connectivity(m, std::vector<int>{3}) == 0);
}

TEST_CASE("trellis layers, paths and codewords") {
  std::mt19937 rng(52);
  for (int t = 0; t < 60; ++t) {
    Field f(t % 2 ? 3 : 2);
    Mat g = spw::testing::random_matrix(f, 1 + rng() % 3, 2 + rng() % 5, rng);
    std::vector<int> order = identity(g.cols());
    std::shuffle(order.begin(), order.end(), rng);
    Trellis tr = build_trellis(g, order);
    REQUIRE(int(tr.state_dims.size()) == g.cols() + 1);
    CHECK(tr.state_dims.front() == 0);
    CHECK(tr.state_dims.back() == 0);
    for (int i = 1; i < g.cols(); ++i)
      CHECK(tr.state_dims[i] == matroid_connectivity(g, std::span(order).first(i)));
    // count paths; every path spells a codeword and there are exactly q^dim of them
    std::vector<long long> paths{1};
    for (int i = 0; i < g.cols(); ++i) {
      std::vector<long long> next(tr.layer_size(i + 1), 0);
      std::vector<char> has_out(tr.layer_size(i), 0);
      for (const auto& e : tr.sections[i]) next[e.to] += paths[e.from], has_out[e.from] = 1;
      for (char h : has_out) CHECK(h);
      for (long long p : next) CHECK(p > 0);
      paths = next;
    }
    auto words = codewords(g);
    CHECK(paths[0] == (long long)words.size());
    for (const auto& w : words) {
      std::vector<char> reach{1};
      for (int i = 0; i < g.cols(); ++i) {
        std::vector<char> next(tr.layer_size(i + 1), 0);
        for (const auto& e : tr.sections[i])
          if (reach[e.from] && e.label == w[order[i]]) next[e.to] = 1;
        reach = next;
      }
      CHECK(reach[0]);
    }
  }
}

TEST_CASE("Viterbi decoding finds a nearest codeword") {
  std::mt19937 rng(53);
  for (int t = 0; t < 100; ++t) {
    Field f(t % 2 ? 3 : 2);
    Mat g = spw::testing::random_matrix(f, 1 + rng() % 3, 3 + rng() % 5, rng);
    MatroidLayout tw = trellis_width(g);
    Trellis tr = build_trellis(g, tw.order);
    auto words = codewords(g);
    std::vector<Elem> received(g.cols());
    for (auto& e : received) e = Elem(rng() % f.order());
    auto decoded = viterbi_decode(tr, received);
    CHECK(std::find(words.begin(), words.end(), decoded) != words.end());
    int best = g.cols() + 1;
    for (const auto& w : words) best = std::min(best, hamming(w, received));
    CHECK(hamming(decoded, received) == best);
  }
}

TEST_CASE("independence oracle front-end") {
  std::mt19937 rng(54);
  for (int t = 0; t < 40; ++t) {
    Mat m = spw::testing::random_matrix(Field(2), 1 + rng() % 4, 2 + rng() % 5, rng);
    int pw = matroid_pathwidth(m).width;
    OracleAnswer yes = oracle_binary_pathwidth(m.cols(), matrix_oracle(m), pw);
    CHECK(yes.width_at_most_k);
    CHECK(matroid_layout_width(m, yes.order) <= pw);
    if (pw > 0) CHECK_FALSE(oracle_binary_pathwidth(m.cols(), matrix_oracle(m), pw - 1).width_at_most_k);
  }
  // U(2,4) is not binary; its binary stand-in looks narrower than it is
  Mat u24 = Mat::from_rows(Field(3), {{1, 0, 1, 1}, {0, 1, 1, 2}});
  CHECK_FALSE(oracle_binary_pathwidth(4, matrix_oracle(u24), 1).width_at_most_k);
  CHECK(oracle_binary_pathwidth(4, matrix_oracle(u24), 2).width_at_most_k);
  IndependenceOracle broken = [](std::span<const int>) { return false; };
  CHECK_THROWS_AS(oracle_binary_pathwidth(3, broken, 1), OracleInconsistency);
}
