#include "spw/trajectory.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace spw {

std::vector<int> typical_sequence(std::span<const int> seq) {
  // Reductions are confluent, so reducing each new element against the
  // already reduced prefix gives the same result; only stretches ending at
  // the new element can become reducible.
  std::vector<int> s;
  for (int x : seq) {
    s.push_back(x);
    while (true) {
      int n = int(s.size());
      if (n >= 2 && s[n - 1] == s[n - 2]) {
        s.pop_back();
        continue;
      }
      int found = -1;
      int lo = 0, hi = 0;
      for (int i = n - 3; i >= 0; --i) {
        int v = s[i + 1];
        if (i == n - 3) lo = hi = v;
        lo = std::min(lo, v), hi = std::max(hi, v);
        if ((s[i] <= lo && hi <= x) || (s[i] >= hi && lo >= x)) {
          found = i;
          break;
        }
      }
      if (found < 0) break;
      s.erase(s.begin() + found + 1, s.end() - 1);
    }
  }
  return s;
}

bool is_typical(std::span<const int> seq) {
  int n = int(seq.size());
  for (int i = 0; i + 1 < n; ++i)
    if (seq[i] == seq[i + 1]) return false;
  for (int i = 0; i < n; ++i) {
    int lo = 0, hi = 0;
    for (int j = i + 2; j < n; ++j) {
      int v = seq[j - 1];
      if (j == i + 2) lo = hi = v;
      lo = std::min(lo, v), hi = std::max(hi, v);
      if ((seq[i] <= lo && hi <= seq[j]) || (seq[i] >= hi && lo >= seq[j])) return false;
    }
  }
  return true;
}

std::size_t Trajectory::hash() const {
  std::size_t h = stats.size();
  for (const auto& s : stats) h = (h * 1000003u) ^ (s.left.hash() * 31 + s.right.hash() * 7 + std::size_t(s.lambda));
  return h;
}

void validate_trajectory(const Trajectory& t) {
  if (t.stats.empty()) throw std::invalid_argument("empty trajectory");
  int d = t.boundary_dim();
  for (const auto& s : t.stats) {
    if (s.left.ambient_dim() != d || s.right.ambient_dim() != d) throw std::invalid_argument("mixed boundary spaces");
    if (s.lambda < 0) throw std::invalid_argument("negative lambda");
  }
  for (int i = 0; i + 1 < t.size(); ++i) {
    if (!is_subspace_of(t[i].left, t[i + 1].left)) throw std::invalid_argument("L is not increasing");
    if (!is_subspace_of(t[i + 1].right, t[i].right)) throw std::invalid_argument("R is not decreasing");
  }
  if (!(t.stats.front().right == t.stats.back().left)) throw std::invalid_argument("R(first) differs from L(last)");
}

int width(const Trajectory& t) {
  int w = 0;
  for (const auto& s : t.stats) w = std::max(w, s.lambda);
  return w;
}

Trajectory compactify(const Trajectory& t) {
  // Entries sharing (L, R) are contiguous, so compaction acts group by group
  // on the lambda values.
  Trajectory out;
  int n = t.size();
  for (int i = 0; i < n;) {
    int j = i;
    std::vector<int> lam;
    while (j < n && t[j].same_spaces(t[i])) lam.push_back(t[j++].lambda);
    for (int v : typical_sequence(lam)) out.stats.push_back({t[i].left, t[i].right, v});
    i = j;
  }
  return out;
}

bool is_compact(const Trajectory& t) { return compactify(t) == t; }

std::optional<LatticePath> dominance_path(const Trajectory& a, const Trajectory& b) {
  int p = a.size(), q = b.size();
  if (p == 0 || q == 0) return std::nullopt;
  std::vector<char> ok(std::size_t(p) * q), reach(std::size_t(p) * q, 0);
  auto idx = [q](int x, int y) { return std::size_t(x) * q + y; };
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < q; ++y) ok[idx(x, y)] = a[x].lambda <= b[y].lambda && a[x].same_spaces(b[y]);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < q; ++y) {
      if (!ok[idx(x, y)]) continue;
      if (x == 0 && y == 0)
        reach[idx(x, y)] = 1;
      else
        reach[idx(x, y)] = (x > 0 && reach[idx(x - 1, y)]) || (y > 0 && reach[idx(x, y - 1)]) ||
                           (x > 0 && y > 0 && reach[idx(x - 1, y - 1)]);
    }
  if (!reach[idx(p - 1, q - 1)]) return std::nullopt;
  LatticePath path;
  int x = p - 1, y = q - 1;
  path.push_back({x, y});
  while (x > 0 || y > 0) {
    if (x > 0 && y > 0 && reach[idx(x - 1, y - 1)])
      --x, --y;
    else if (x > 0 && reach[idx(x - 1, y)])
      --x;
    else
      --y;
    path.push_back({x, y});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool precedes(const Trajectory& a, const Trajectory& b) { return dominance_path(a, b).has_value(); }

Trajectory project(const Trajectory& t, const Subspace& small) {
  Trajectory out;
  out.stats.reserve(t.stats.size());
  for (const auto& s : t.stats) {
    Subspace lr = intersection(s.left, s.right);
    int drop = lr.dim() - intersection_dim(lr, small);
    out.stats.push_back({relative_to(intersection(s.left, small), small),
                         relative_to(intersection(s.right, small), small), s.lambda + drop});
  }
  return out;
}

Trajectory transform(const Trajectory& t, const Mat& map) {
  Trajectory out;
  out.stats.reserve(t.stats.size());
  for (const auto& s : t.stats) out.stats.push_back({image(map, s.left), image(map, s.right), s.lambda});
  return out;
}

Trajectory sum_along(const Trajectory& a, const Trajectory& b, const LatticePath& path) {
  if (path.empty() || path.front() != std::pair{0, 0} || path.back() != std::pair{a.size() - 1, b.size() - 1} ||
      int(path.size()) != a.size() + b.size() - 1)
    throw std::invalid_argument("path does not join the corners");
  int base = intersection_dim(a[0].right, b[0].right);
  Trajectory out;
  out.stats.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    auto [x, y] = path[i];
    if (i > 0 && (x - path[i - 1].first) + (y - path[i - 1].second) != 1) throw std::invalid_argument("path is not plain");
    const Statistic& s = a[x];
    const Statistic& u = b[y];
    int overlap = intersection_dim(sum(s.left, s.right), sum(u.left, u.right));
    out.stats.push_back({sum(s.left, u.left), sum(s.right, u.right), s.lambda + u.lambda + base - overlap});
  }
  return out;
}

void for_each_plain_path(int p, int q, const std::function<void(const LatticePath&)>& visit) {
  LatticePath path{{0, 0}};
  std::function<void(int, int)> go = [&](int x, int y) {
    if (x == p - 1 && y == q - 1) {
      visit(path);
      return;
    }
    if (x + 1 < p) {
      path.push_back({x + 1, y});
      go(x + 1, y);
      path.pop_back();
    }
    if (y + 1 < q) {
      path.push_back({x, y + 1});
      go(x, y + 1);
      path.pop_back();
    }
  };
  go(0, 0);
}

std::vector<Trajectory> sum_set(const Trajectory& a, const Trajectory& b) {
  std::vector<Trajectory> out;
  for_each_plain_path(a.size(), b.size(), [&](const LatticePath& p) { out.push_back(sum_along(a, b, p)); });
  return out;
}

Trajectory canonical_trajectory(const Arrangement& a, const LinearLayout& l, const Subspace& b) {
  validate_layout(a, l);
  int n = a.num_parts();
  Trajectory out;
  for (int i = 0; i <= n; ++i) {
    std::span<const int> pre = std::span(l.order).first(i), suf = std::span(l.order).subspan(i);
    Subspace ps = Subspace::span(a.matrix().select_columns(a.columns_of(pre)));
    Subspace ss = Subspace::span(a.matrix().select_columns(a.columns_of(suf)));
    Subspace cut = intersection(ps, ss);
    out.stats.push_back({relative_to(intersection(ps, b), b), relative_to(intersection(ss, b), b),
                         cut.dim() - intersection_dim(cut, b)});
  }
  return out;
}

Trajectory leaf_trajectory(Field f, int d) {
  Subspace z = Subspace::zero(f, d), w = Subspace::whole(f, d);
  if (d == 0) return Trajectory{{{z, z, 0}}};
  return Trajectory{{{z, w, 0}, {w, z, 0}}};
}

std::vector<std::vector<int>> enumerate_typical(int k) {
  if (k < 0) throw std::invalid_argument("negative width");
  std::vector<std::vector<int>> out;
  const int cap = 4 * k + 8;
  std::vector<int> cur;
  std::function<void()> go = [&] {
    out.push_back(cur);
    if (int(cur.size()) >= cap) throw std::logic_error("typical sequence longer than expected");
    for (int v = 0; v <= k; ++v) {
      cur.push_back(v);
      if (is_typical(cur)) go();
      cur.pop_back();
    }
  };
  for (int v = 0; v <= k; ++v) {
    cur = {v};
    go();
  }
  return out;
}

namespace {

std::vector<Subspace> all_subspaces(Field f, int d) {
  std::vector<Subspace> out{Subspace::zero(f, d)};
  std::unordered_set<Subspace, SubspaceHash> seen{out[0]};
  std::vector<std::vector<Elem>> vectors;
  std::vector<Elem> v(d, 0);
  while (true) {
    int i = 0;
    while (i < d && ++v[i] == f.order()) v[i++] = 0;
    if (i == d) break;
    vectors.push_back(v);
  }
  for (std::size_t at = 0; at < out.size(); ++at) {
    for (const auto& x : vectors) {
      if (out[at].contains(x)) continue;
      Mat g(f, d, 1);
      for (int r = 0; r < d; ++r) g.at(r, 0) = x[r];
      Subspace s = sum(out[at], Subspace::span(g));
      if (seen.insert(s).second) out.push_back(s);
    }
  }
  return out;
}

}  // namespace

std::vector<Trajectory> enumerate_compact(Field f, int d, int k) {
  if (d < 0 || k < 0) throw std::invalid_argument("negative parameter");
  if (d > 2 || (d > 0 && k > 2)) throw std::invalid_argument("enumeration of compact trajectories is limited to dim <= 2, k <= 2");
  auto spaces = all_subspaces(f, d);
  auto typical = enumerate_typical(k);
  std::vector<std::pair<int, int>> pairs;
  for (int l = 0; l < int(spaces.size()); ++l)
    for (int r = 0; r < int(spaces.size()); ++r) pairs.push_back({l, r});
  auto step_ok = [&](std::pair<int, int> from, std::pair<int, int> to) {
    return from != to && is_subspace_of(spaces[from.first], spaces[to.first]) &&
           is_subspace_of(spaces[to.second], spaces[from.second]);
  };
  std::vector<Trajectory> out;
  std::vector<std::pair<int, int>> chain;
  std::function<void(std::size_t, Trajectory&)> fill = [&](std::size_t g, Trajectory& t) {
    if (g == chain.size()) {
      out.push_back(t);
      return;
    }
    for (const auto& seq : typical) {
      for (int v : seq) t.stats.push_back({spaces[chain[g].first], spaces[chain[g].second], v});
      fill(g + 1, t);
      t.stats.erase(t.stats.end() - std::ptrdiff_t(seq.size()), t.stats.end());
    }
  };
  std::function<void()> extend = [&] {
    if (chain.front().second == chain.back().first) {
      Trajectory t;
      fill(0, t);
    }
    for (auto p : pairs)
      if (step_ok(chain.back(), p)) {
        chain.push_back(p);
        extend();
        chain.pop_back();
      }
  };
  for (auto p : pairs) {
    chain = {p};
    extend();
  }
  return out;
}

}  // namespace spw
