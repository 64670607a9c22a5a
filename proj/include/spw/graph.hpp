#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spw/arrangement.hpp"

namespace spw {

class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(std::size_t(n) * n, 0) {}
  int size() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[std::size_t(u) * n_ + v]; }
  std::vector<std::pair<int, int>> edges() const;
  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<char> adj_;
};

// GF(2) rank of the adjacency matrix between X and the other vertices.
int cut_rank(const Graph& g, std::span<const int> x);
// Part i is spanned by e_i and the i-th adjacency column; its connectivity is
// twice the cut-rank.
Arrangement graph_arrangement(const Graph& g);

std::vector<int> layout_cut_ranks(const Graph& g, std::span<const int> order);
int linear_rankwidth_of(const Graph& g, std::span<const int> order);

// A vertex order of cut-rank width <= k, or nothing.
std::optional<std::vector<int>> linear_rankwidth_at_most(const Graph& g, int k);

struct RankwidthResult {
  int width;
  std::vector<int> order;
};
RankwidthResult linear_rankwidth(const Graph& g);

}  // namespace spw
