#include "spw/branch_decomposition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace spw {

BranchDecomposition::BranchDecomposition(std::vector<BdNode> nodes, int root, int num_parts)
    : nodes_(std::move(nodes)), root_(root), num_parts_(num_parts) {
  int count = int(nodes_.size());
  if (num_parts < 2) throw std::invalid_argument("branch-decomposition needs at least two parts");
  if (root < 0 || root >= count || nodes_[root].parent != -1) throw std::invalid_argument("bad root");
  leaf_of_.assign(num_parts, -1);
  below_.assign(count, {});
  std::vector<int> depth(count, -1);
  std::vector<int> stack{root};
  depth[root] = 0;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    const BdNode& nd = nodes_[v];
    if (nd.is_leaf()) {
      if (nd.children[0] != -1 || nd.children[1] != -1) throw std::invalid_argument("leaf with children");
      if (nd.part >= num_parts || leaf_of_[nd.part] != -1) throw std::invalid_argument("leaf labels are not a bijection");
      leaf_of_[nd.part] = v;
      continue;
    }
    for (int c : nd.children) {
      if (c < 0 || c >= count || depth[c] != -1 || nodes_[c].parent != v)
        throw std::invalid_argument("malformed tree");
      depth[c] = depth[v] + 1;
      stack.push_back(c);
    }
  }
  if (visited != count) throw std::invalid_argument("nodes unreachable from the root");
  for (int p = 0; p < num_parts; ++p)
    if (leaf_of_[p] == -1) throw std::invalid_argument("part without leaf");

  order_.resize(count);
  for (int v = 0; v < count; ++v) order_[v] = v;
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return depth[a] > depth[b]; });
  for (int v : order_) {
    if (nodes_[v].is_leaf()) {
      below_[v] = {nodes_[v].part};
    } else {
      auto& b = below_[v];
      for (int c : nodes_[v].children) b.insert(b.end(), below_[c].begin(), below_[c].end());
      std::sort(b.begin(), b.end());
    }
  }
}

BranchDecomposition root_tree(const std::vector<std::vector<int>>& adj, const std::vector<int>& leaf_part) {
  int count = int(adj.size());
  int num_parts = 0, start = -1;
  for (int v = 0; v < count; ++v) {
    if (leaf_part[v] < 0) continue;
    ++num_parts;
    if (start < 0 || leaf_part[v] < leaf_part[start]) start = v;
  }
  if (start < 0 || adj[start].size() != 1) throw std::invalid_argument("lowest leaf is not a leaf");
  std::vector<BdNode> nodes(count + 1);
  int root = count;
  std::function<void(int, int)> orient = [&](int v, int from) {
    nodes[v].part = leaf_part[v];
    int i = 0;
    for (int w : adj[v]) {
      if (w == from) continue;
      if (i == 2) throw std::invalid_argument("tree is not subcubic");
      nodes[v].children[i++] = w;
      nodes[w].parent = v;
      orient(w, v);
    }
    if (i == 1) throw std::invalid_argument("inner vertex of degree two");
  };
  int other = adj[start][0];
  nodes[root].children = {start, other};
  nodes[start].parent = root;
  nodes[other].parent = root;
  orient(start, other);
  orient(other, start);
  return BranchDecomposition(std::move(nodes), root, num_parts);
}

BranchDecomposition caterpillar(const LinearLayout& l) {
  int n = int(l.order.size());
  if (n < 2) throw std::invalid_argument("caterpillar needs at least two parts");
  // Path vertices 0..n-1 (the ends are leaves), pendant leaves n..2n-3.
  std::vector<std::vector<int>> adj(2 * n - 2);
  std::vector<int> leaf_part(2 * n - 2, -1);
  for (int i = 0; i + 1 < n; ++i) adj[i].push_back(i + 1), adj[i + 1].push_back(i);
  leaf_part[0] = l.order[0];
  leaf_part[n - 1] = l.order[n - 1];
  for (int i = 1; i + 1 < n; ++i) {
    int leaf = n + i - 1;
    adj[i].push_back(leaf);
    adj[leaf].push_back(i);
    leaf_part[leaf] = l.order[i];
  }
  return root_tree(adj, leaf_part);
}

int bd_width(const Arrangement& a, const BranchDecomposition& bd) {
  if (bd.num_parts() != a.num_parts()) throw std::invalid_argument("decomposition does not match arrangement");
  int w = 0;
  for (int v = 0; v < int(bd.nodes().size()); ++v)
    if (v != bd.root()) w = std::max(w, connectivity(a, bd.parts_below(v)));
  return w;
}

BranchDecomposition parse_bd(const std::string& text, int num_parts) {
  std::vector<BdNode> nodes;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  std::function<int()> term = [&]() -> int {
    skip();
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of decomposition");
    if (text[pos] == '(') {
      ++pos;
      int l = term();
      int r = term();
      skip();
      if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("expected ')' in decomposition");
      ++pos;
      nodes.push_back({});
      int v = int(nodes.size()) - 1;
      nodes[v].children = {l, r};
      nodes[l].parent = v;
      nodes[r].parent = v;
      return v;
    }
    std::size_t end = pos;
    while (end < text.size() && std::isdigit((unsigned char)text[end])) ++end;
    if (end == pos) throw std::invalid_argument("unexpected character in decomposition");
    int part = std::stoi(text.substr(pos, end - pos)) - 1;
    pos = end;
    if (part < 0 || part >= num_parts) throw std::invalid_argument("part number out of range in decomposition");
    nodes.push_back({});
    nodes.back().part = part;
    return int(nodes.size()) - 1;
  };
  int root = term();
  skip();
  if (pos != text.size()) throw std::invalid_argument("trailing text after decomposition");
  return BranchDecomposition(std::move(nodes), root, num_parts);
}

std::string format_bd(const BranchDecomposition& bd) {
  std::function<std::string(int)> go = [&](int v) -> std::string {
    const BdNode& nd = bd.node(v);
    if (nd.is_leaf()) return std::to_string(nd.part + 1);
    return "(" + go(nd.children[0]) + " " + go(nd.children[1]) + ")";
  };
  return go(bd.root());
}

Boundaries compute_boundaries(const Arrangement& input, const BranchDecomposition& bd) {
  if (bd.num_parts() != input.num_parts()) throw std::invalid_argument("decomposition does not match arrangement");
  Arrangement a = is_standard_form(input) ? input : row_reduce(input).arrangement;
  const Mat& m = a.matrix();
  const Field& f = a.field();
  int r = m.rows();
  Boundaries out{a, {}};
  out.nodes.resize(bd.nodes().size(), NodeBoundary{Mat(f, r, 0), Mat(f, r, 0), {Mat(f, 0, 0), Mat(f, 0, 0)}});
  for (int v : bd.bottom_up_order()) {
    std::vector<char> in(a.num_parts(), 0);
    for (int p : bd.parts_below(v)) in[p] = 1;
    // Blocks of the standard form: B couples inside rows with outside
    // columns, C couples outside rows with inside columns.
    std::vector<std::vector<Elem>> gens;
    for (int c = r; c < m.cols(); ++c) {
      bool c_in = in[a.part_of_column()[c]];
      std::vector<Elem> g(r, 0);
      bool nonzero = false;
      for (int j = 0; j < r; ++j) {
        if (bool(in[a.part_of_column()[j]]) == c_in) continue;
        g[j] = m(j, c);
        nonzero |= g[j] != 0;
      }
      if (nonzero) gens.push_back(std::move(g));
    }
    Mat gm(f, r, int(gens.size()));
    for (std::size_t c = 0; c < gens.size(); ++c)
      for (int j = 0; j < r; ++j) gm.at(j, int(c)) = gens[c][j];
    NodeBoundary& nb = out.nodes[v];
    nb.basis = Subspace::span(gm).basis();
    if (bd.node(v).is_leaf()) {
      nb.ext_basis = nb.basis;
      continue;
    }
    const Mat& b1 = out.nodes[bd.node(v).children[0]].basis;
    const Mat& b2 = out.nodes[bd.node(v).children[1]].basis;
    Mat all = hconcat(hconcat(nb.basis, b1), b2);
    std::vector<int> prefer(nb.basis.cols());
    for (int i = 0; i < nb.basis.cols(); ++i) prefer[i] = i;
    nb.ext_basis = all.select_columns(column_basis(all, prefer));
    for (int i = 0; i < 2; ++i) {
      auto t = solve(nb.ext_basis, i == 0 ? b1 : b2);
      if (!t) throw std::logic_error("child boundary outside the extended boundary");
      nb.transition[i] = *t;
    }
  }
  return out;
}

}  // namespace spw
