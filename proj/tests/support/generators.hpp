#pragma once

#include <random>

#include "spw/arrangement.hpp"
#include "spw/graph.hpp"

namespace spw::testing {

Mat random_matrix(Field f, int rows, int cols, std::mt19937& rng);
// n parts of dimension at most max_part_dim in F^r, columns drawn at random.
Arrangement random_arrangement(Field f, int r, int n, int max_part_dim, std::mt19937& rng);
Graph random_graph(int n, double p, std::mt19937& rng);
// Graph on n vertices from the bits of `code` over the pairs (u < v).
Graph graph_from_code(int n, unsigned long long code);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);

}  // namespace spw::testing
