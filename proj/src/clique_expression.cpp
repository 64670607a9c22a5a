#include "spw/clique_expression.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace spw {

namespace {

int add(CliqueExpr& e, CliqueExpr::Node n) {
  e.nodes.push_back(n);
  return int(e.nodes.size()) - 1;
}

}  // namespace

CliqueExpr linear_clique_expression(const Graph& g, std::span<const int> order) {
  int n = g.size();
  if (int(order.size()) != n || n == 0) throw std::invalid_argument("order must list every vertex");
  CliqueExpr e;
  std::vector<int> label(n, 0);
  std::vector<char> placed(n, 0);
  std::map<int, int> rep;  // label -> some vertex carrying it
  for (int t = 0; t < n; ++t) {
    int v = order[t];
    if (v < 0 || v >= n || placed[v]) throw std::invalid_argument("order is not a permutation");
    int fresh = 1;
    while (rep.count(fresh)) ++fresh;
    int leaf = add(e, {CliqueExpr::Op::Vertex, fresh, 0, v});
    e.root = t == 0 ? leaf : add(e, {CliqueExpr::Op::Union, 0, 0, -1, e.root, leaf});
    // Vertices sharing a label have the same neighbours among the unplaced ones.
    for (auto [c, x] : rep)
      if (g.adjacent(x, v)) e.root = add(e, {CliqueExpr::Op::Join, c, fresh, -1, e.root});
    placed[v] = 1;
    label[v] = fresh;
    rep[fresh] = v;

    std::map<std::vector<char>, int> by_neighbourhood;
    std::map<int, int> merged;
    for (auto [c, x] : rep) {
      std::vector<char> key(n, 0);
      for (int y = 0; y < n; ++y) key[y] = !placed[y] && g.adjacent(x, y);
      auto [it, inserted] = by_neighbourhood.emplace(key, c);
      if (!inserted) merged[c] = it->second;
    }
    for (auto [from, to] : merged) {
      e.root = add(e, {CliqueExpr::Op::Relabel, from, to, -1, e.root});
      rep.erase(from);
      for (int y = 0; y < n; ++y)
        if (placed[y] && label[y] == from) label[y] = to;
    }
  }
  return e;
}

int label_count(const CliqueExpr& e) {
  std::set<int> labels;
  for (const auto& n : e.nodes) {
    if (n.op == CliqueExpr::Op::Vertex) labels.insert(n.a);
    if (n.op == CliqueExpr::Op::Join || n.op == CliqueExpr::Op::Relabel) labels.insert(n.a), labels.insert(n.b);
  }
  return int(labels.size());
}

Graph evaluate(const CliqueExpr& e, int num_vertices) {
  Graph g(num_vertices);
  std::function<std::map<int, int>(int)> go = [&](int id) -> std::map<int, int> {
    const auto& n = e.nodes.at(id);
    switch (n.op) {
      case CliqueExpr::Op::Vertex:
        if (n.vertex < 0 || n.vertex >= num_vertices) throw std::invalid_argument("vertex out of range");
        return {{n.vertex, n.a}};
      case CliqueExpr::Op::Union: {
        auto l = go(n.left), r = go(n.right);
        for (auto [v, c] : r)
          if (!l.emplace(v, c).second) throw std::invalid_argument("vertex used twice");
        return l;
      }
      case CliqueExpr::Op::Join: {
        auto m = go(n.left);
        if (n.a == n.b) throw std::invalid_argument("join of a label with itself");
        for (auto [u, cu] : m)
          for (auto [v, cv] : m)
            if (cu == n.a && cv == n.b) g.add_edge(u, v);
        return m;
      }
      case CliqueExpr::Op::Relabel: {
        auto m = go(n.left);
        for (auto& [v, c] : m)
          if (c == n.a) c = n.b;
        return m;
      }
    }
    return {};
  };
  if (e.root >= 0) go(e.root);
  return g;
}

std::string to_string(const CliqueExpr& e) {
  std::function<std::string(int)> go = [&](int id) -> std::string {
    const auto& n = e.nodes.at(id);
    switch (n.op) {
      case CliqueExpr::Op::Vertex:
        return "v(" + std::to_string(n.vertex + 1) + "," + std::to_string(n.a) + ")";
      case CliqueExpr::Op::Union:
        return "u(" + go(n.left) + "," + go(n.right) + ")";
      case CliqueExpr::Op::Join:
        return "eta(" + std::to_string(n.a) + "," + std::to_string(n.b) + "," + go(n.left) + ")";
      case CliqueExpr::Op::Relabel:
        return "rho(" + std::to_string(n.a) + "," + std::to_string(n.b) + "," + go(n.left) + ")";
    }
    return {};
  };
  return e.root < 0 ? std::string() : go(e.root);
}

CliqueExpr parse_clique_expression(const std::string& text) {
  CliqueExpr e;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw std::invalid_argument(std::string("expected '") + c + "' in expression");
    ++pos;
  };
  auto number = [&] {
    skip();
    std::size_t end = pos;
    while (end < text.size() && std::isdigit((unsigned char)text[end])) ++end;
    if (end == pos) throw std::invalid_argument("expected a number in expression");
    int v = std::stoi(text.substr(pos, end - pos));
    pos = end;
    return v;
  };
  std::function<int()> term = [&]() -> int {
    skip();
    std::size_t end = pos;
    while (end < text.size() && std::isalpha((unsigned char)text[end])) ++end;
    std::string op = text.substr(pos, end - pos);
    pos = end;
    expect('(');
    int id;
    if (op == "v") {
      int v = number();
      expect(',');
      id = add(e, {CliqueExpr::Op::Vertex, number(), 0, v - 1});
    } else if (op == "u") {
      int l = term();
      expect(',');
      int r = term();
      id = add(e, {CliqueExpr::Op::Union, 0, 0, -1, l, r});
    } else if (op == "eta" || op == "rho") {
      int a = number();
      expect(',');
      int b = number();
      expect(',');
      int c = term();
      id = add(e, {op == "eta" ? CliqueExpr::Op::Join : CliqueExpr::Op::Relabel, a, b, -1, c});
    } else {
      throw std::invalid_argument("unknown operation '" + op + "' in expression");
    }
    expect(')');
    return id;
  };
  e.root = term();
  skip();
  if (pos != text.size()) throw std::invalid_argument("trailing text after expression");
  return e;
}

}  // namespace spw
