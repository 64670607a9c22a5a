#include "generators.hpp"

namespace spw::testing {

Mat random_matrix(Field f, int rows, int cols, std::mt19937& rng) {
  Mat m(f, rows, cols);
  std::uniform_int_distribution<int> d(0, f.order() - 1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Elem(d(rng));
  return m;
}

Arrangement random_arrangement(Field f, int r, int n, int max_part_dim, std::mt19937& rng) {
  std::vector<int> assign;
  for (int p = 0; p < n; ++p) {
    int cols = 1 + int(rng() % max_part_dim);
    for (int c = 0; c < cols; ++c) assign.push_back(p);
  }
  return Arrangement(random_matrix(f, r, int(assign.size()), rng), assign, n);
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph graph_from_code(int n, unsigned long long code) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1ull) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace spw::testing
