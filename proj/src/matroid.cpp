#include "spw/matroid.hpp"

#include <algorithm>

#include "spw/solver.hpp"

namespace spw {

int matroid_connectivity(const Mat& m, std::span<const int> x) {
  std::vector<int> rest = complement(m.cols(), x);
  return rank(m.select_columns(x)) + rank(m.select_columns(rest)) - rank(m);
}

int matroid_layout_width(const Mat& m, std::span<const int> order) {
  if (int(order.size()) != m.cols()) throw std::invalid_argument("order has wrong length");
  int w = 0;
  for (int i = 1; i < m.cols(); ++i) w = std::max(w, matroid_connectivity(m, order.first(i)));
  return w;
}

Arrangement column_arrangement(const Mat& m) {
  std::vector<int> assign(m.cols());
  for (int c = 0; c < m.cols(); ++c) assign[c] = c;
  return Arrangement(m, std::move(assign), m.cols());
}

std::optional<std::vector<int>> matroid_pathwidth_at_most(const Mat& m, int k) {
  if (k < 0) throw std::invalid_argument("negative width");
  int total = rank(m);
  std::vector<int> loops, coloops, rest;
  for (int c = 0; c < m.cols(); ++c) {
    std::vector<int> others = complement(m.cols(), std::vector<int>{c});
    if (rank(m.select_columns(std::vector<int>{c})) == 0)
      loops.push_back(c);
    else if (rank(m.select_columns(others)) < total)
      coloops.push_back(c);
    else
      rest.push_back(c);
  }
  std::vector<int> order = loops;
  order.insert(order.end(), coloops.begin(), coloops.end());
  Decision d = decide_pathwidth(column_arrangement(m.select_columns(rest)), k);
  if (!d) return std::nullopt;
  for (int i : d.layout->order) order.push_back(rest[i]);
  if (matroid_layout_width(m, order) > k) throw std::logic_error("matroid order exceeds the width bound");
  return order;
}

MatroidLayout matroid_pathwidth(const Mat& m) {
  for (int k = 0;; ++k)
    if (auto order = matroid_pathwidth_at_most(m, k)) return {matroid_layout_width(m, *order), *order};
}

std::optional<std::vector<int>> trellis_width_at_most(const Mat& generator, int k) {
  return matroid_pathwidth_at_most(generator, k);
}

MatroidLayout trellis_width(const Mat& generator) { return matroid_pathwidth(generator); }

int oracle_rank(const IndependenceOracle& independent, std::span<const int> x) {
  std::vector<int> basis;
  for (int e : x) {
    basis.push_back(e);
    if (!independent(basis)) basis.pop_back();
  }
  return int(basis.size());
}

OracleAnswer oracle_binary_pathwidth(int n, const IndependenceOracle& independent, int k) {
  if (!independent(std::vector<int>{})) throw OracleInconsistency("the empty set is reported dependent");
  std::vector<int> basis;
  for (int e = 0; e < n; ++e) {
    basis.push_back(e);
    if (!independent(basis)) basis.pop_back();
  }
  int r = int(basis.size());
  // Row i of the representation belongs to basis element basis[i]; a
  // non-basis column holds the incidence vector of its fundamental circuit.
  Mat m(Field(2), r, n);
  std::vector<int> row_of(n, -1);
  for (int i = 0; i < r; ++i) row_of[basis[i]] = i, m.at(i, basis[i]) = 1;
  for (int e = 0; e < n; ++e) {
    if (row_of[e] >= 0) continue;
    std::vector<int> with = basis;
    with.push_back(e);
    if (independent(with)) throw OracleInconsistency("greedy basis is not maximal");
    for (int i = 0; i < r; ++i) {
      std::vector<int> swapped;
      for (int b : basis)
        if (b != basis[i]) swapped.push_back(b);
      swapped.push_back(e);
      if (independent(swapped)) m.at(i, e) = 1;
    }
  }
  auto order = matroid_pathwidth_at_most(m, k);
  if (!order) return {false, {}};
  std::vector<int> all(n);
  for (int e = 0; e < n; ++e) all[e] = e;
  int total = oracle_rank(independent, all);
  if (total != r) throw OracleInconsistency("rank of the ground set changed");
  for (int i = 1; i < n; ++i) {
    std::span<const int> pre = std::span(*order).first(i), suf = std::span(*order).subspan(i);
    int rp = oracle_rank(independent, pre), rs = oracle_rank(independent, suf);
    if (rp > total || rs > total) throw OracleInconsistency("subset rank exceeds the ground set rank");
    if (rp + rs - total > k) return {false, {}};
  }
  return {true, std::move(*order)};
}

}  // namespace spw
