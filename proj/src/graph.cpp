#include "spw/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "spw/solver.hpp"

namespace spw {

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw std::invalid_argument("bad edge");
  adj_[std::size_t(u) * n_ + v] = 1;
  adj_[std::size_t(v) * n_ + u] = 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) e.push_back({u, v});
  return e;
}

int cut_rank(const Graph& g, std::span<const int> x) {
  std::vector<int> rest = complement(g.size(), x);
  Mat m(Field(2), int(x.size()), int(rest.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < rest.size(); ++j) m.at(int(i), int(j)) = g.adjacent(x[i], rest[j]);
  return rank(m);
}

Arrangement graph_arrangement(const Graph& g) {
  int n = g.size();
  Mat m(Field(2), n, 2 * n);
  std::vector<int> assign(2 * n);
  for (int i = 0; i < n; ++i) {
    m.at(i, 2 * i) = 1;
    for (int j = 0; j < n; ++j) m.at(j, 2 * i + 1) = g.adjacent(i, j);
    assign[2 * i] = assign[2 * i + 1] = i;
  }
  return Arrangement(std::move(m), std::move(assign), n);
}

std::vector<int> layout_cut_ranks(const Graph& g, std::span<const int> order) {
  if (int(order.size()) != g.size()) throw std::invalid_argument("order has wrong length");
  std::vector<int> cuts;
  for (int i = 1; i < g.size(); ++i) cuts.push_back(cut_rank(g, order.first(i)));
  return cuts;
}

int linear_rankwidth_of(const Graph& g, std::span<const int> order) {
  auto cuts = layout_cut_ranks(g, order);
  return cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
}

std::optional<std::vector<int>> linear_rankwidth_at_most(const Graph& g, int k) {
  Decision d = decide_pathwidth(graph_arrangement(g), 2 * k);
  if (!d) return std::nullopt;
  if (linear_rankwidth_of(g, d.layout->order) > k) throw std::logic_error("vertex order exceeds the rank-width bound");
  return d.layout->order;
}

RankwidthResult linear_rankwidth(const Graph& g) {
  for (int k = 0;; ++k)
    if (auto order = linear_rankwidth_at_most(g, k)) return {linear_rankwidth_of(g, *order), *order};
}

}  // namespace spw
