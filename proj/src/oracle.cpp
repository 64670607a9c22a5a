#include "spw/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spw {

namespace {

std::vector<int> parts_of(unsigned mask, int n) {
  std::vector<int> p;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) p.push_back(i);
  return p;
}

// rank of the union of parts for every subset
std::vector<int> subset_ranks(const Arrangement& a) {
  int n = a.num_parts();
  std::vector<int> r(std::size_t(1) << n);
  for (unsigned s = 0; s < r.size(); ++s) r[s] = rank(a.matrix().select_columns(a.columns_of(parts_of(s, n))));
  return r;
}

}  // namespace

ExactResult pathwidth_subset_dp(const Arrangement& a) {
  int n = a.num_parts();
  if (n > 20) throw std::invalid_argument("subset oracle limited to 20 parts");
  auto r = subset_ranks(a);
  unsigned full = (1u << n) - 1;
  auto conn = [&](unsigned s) { return r[s] + r[full & ~s] - r[full]; };
  std::vector<int> cost(r.size(), 0), last(r.size(), -1);
  for (unsigned s = 1; s <= full; ++s) {
    int best = -1;
    for (int e = 0; e < n; ++e) {
      if (!(s >> e & 1u)) continue;
      int c = cost[s & ~(1u << e)];
      if (best < 0 || c < best) best = c, last[s] = e;
    }
    cost[s] = std::max(best, conn(s));
  }
  LinearLayout l;
  for (unsigned s = full; s; s &= ~(1u << last[s])) l.order.push_back(last[s]);
  std::reverse(l.order.begin(), l.order.end());
  return {cost[full], l};
}

ExactResult pathwidth_permutations(const Arrangement& a) {
  int n = a.num_parts();
  if (n > 9) throw std::invalid_argument("permutation oracle limited to 9 parts");
  auto r = subset_ranks(a);
  unsigned full = (1u << n) - 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactResult best{-1, {}};
  do {
    int w = 0;
    unsigned s = 0;
    for (int i = 0; i + 1 < n; ++i) {
      s |= 1u << perm[i];
      w = std::max(w, r[s] + r[full & ~s] - r[full]);
    }
    if (best.width < 0 || w < best.width) best = {w, {perm}};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BranchwidthResult branchwidth_bruteforce(const Arrangement& a) {
  int n = a.num_parts();
  if (n < 2 || n > 9) throw std::invalid_argument("branch-width oracle needs 2..9 parts");
  auto r = subset_ranks(a);
  unsigned full = (1u << n) - 1;
  auto conn = [&](unsigned s) { return r[s] + r[full & ~s] - r[full]; };

  // Rooted binary trees on parts 1..n-1, built by inserting each part above
  // some existing node; the final root pairs that tree with part 0.
  struct Tree {
    std::vector<BdNode> nodes;
    int top;
  };
  int best_w = -1;
  Tree best;
  std::vector<unsigned> below;
  auto width_of = [&](const Tree& t) {
    below.assign(t.nodes.size(), 0);
    std::function<unsigned(int)> go = [&](int v) -> unsigned {
      const BdNode& nd = t.nodes[v];
      below[v] = nd.is_leaf() ? 1u << nd.part : go(nd.children[0]) | go(nd.children[1]);
      return below[v];
    };
    go(t.top);
    int w = 0;
    for (unsigned s : below) w = std::max(w, conn(s));
    return w;
  };
  std::function<void(Tree&, int)> grow = [&](Tree& t, int next) {
    if (next == n) {
      int w = width_of(t);
      if (best_w < 0 || w < best_w) best_w = w, best = t;
      return;
    }
    int count = int(t.nodes.size());
    for (int x = 0; x < count; ++x) {
      Tree u = t;
      int leaf = int(u.nodes.size()), mid = leaf + 1;
      u.nodes.push_back({});
      u.nodes[leaf].part = next;
      u.nodes.push_back({});
      int parent = u.nodes[x].parent;
      u.nodes[mid].parent = parent;
      if (parent >= 0) {
        auto& ch = u.nodes[parent].children;
        (ch[0] == x ? ch[0] : ch[1]) = mid;
      } else {
        u.top = mid;
      }
      u.nodes[mid].children = {x, leaf};
      u.nodes[x].parent = mid;
      u.nodes[leaf].parent = mid;
      grow(u, next + 1);
    }
  };
  Tree start;
  start.nodes.push_back({});
  start.nodes[0].part = 1;
  start.top = 0;
  grow(start, 2);

  std::vector<BdNode> nodes = best.nodes;
  int leaf0 = int(nodes.size()), root = leaf0 + 1;
  nodes.push_back({});
  nodes[leaf0].part = 0;
  nodes.push_back({});
  nodes[root].children = {leaf0, best.top};
  nodes[leaf0].parent = root;
  nodes[best.top].parent = root;
  BranchDecomposition bd(std::move(nodes), root, n);
  return {best_w, std::move(bd)};
}

std::vector<int> typical_bruteforce(std::span<const int> seq) {
  std::set<std::vector<int>> seen, finals;
  std::vector<std::vector<int>> todo{std::vector<int>(seq.begin(), seq.end())};
  seen.insert(todo[0]);
  while (!todo.empty()) {
    std::vector<int> s = std::move(todo.back());
    todo.pop_back();
    int n = int(s.size());
    std::vector<std::vector<int>> next;
    for (int i = 1; i < n; ++i)
      if (s[i - 1] == s[i]) {
        auto t = s;
        t.erase(t.begin() + i);
        next.push_back(std::move(t));
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        bool up = true, down = true;
        for (int k = i + 1; k < j; ++k) {
          up &= s[i] <= s[k] && s[k] <= s[j];
          down &= s[i] >= s[k] && s[k] >= s[j];
        }
        if (up || down) {
          auto t = s;
          t.erase(t.begin() + i + 1, t.begin() + j);
          next.push_back(std::move(t));
        }
      }
    if (next.empty()) finals.insert(s);
    for (auto& t : next)
      if (seen.insert(t).second) todo.push_back(std::move(t));
  }
  if (finals.size() != 1) throw std::logic_error("reductions do not reach a unique sequence");
  return *finals.begin();
}

}  // namespace spw
