#pragma once

#include <span>
#include <string>
#include <vector>

#include "spw/graph.hpp"

namespace spw {

// Clique-width expression. Labels are 1-based, vertices 0-based.
struct CliqueExpr {
  enum class Op { Vertex, Union, Join, Relabel };
  struct Node {
    Op op;
    int a = 0, b = 0;  // Vertex: a = label. Join: labels a, b. Relabel: a -> b.
    int vertex = -1;
    int left = -1, right = -1;  // Union uses both, Join and Relabel use left.
  };
  std::vector<Node> nodes;
  int root = -1;
};

// Linear expression following the vertex order; it uses at most 2^w + 1
// labels where w is the cut-rank width of the order.
CliqueExpr linear_clique_expression(const Graph& g, std::span<const int> order);
int label_count(const CliqueExpr& e);
Graph evaluate(const CliqueExpr& e, int num_vertices);

// Terms: v(VERTEX,LABEL) with a 1-based vertex, u(E,F), eta(I,J,E), rho(I,J,E).
std::string to_string(const CliqueExpr& e);
CliqueExpr parse_clique_expression(const std::string& text);

}  // namespace spw
