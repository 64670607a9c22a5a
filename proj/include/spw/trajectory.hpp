#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spw/arrangement.hpp"

namespace spw {

// Integer sequences. A sequence is typical when neither reduction applies:
// dropping a repeated neighbour, or dropping the interior of a stretch that is
// monotonically bounded by its two ends.
std::vector<int> typical_sequence(std::span<const int> seq);
bool is_typical(std::span<const int> seq);

struct Statistic {
  Subspace left, right;
  int lambda = 0;
  bool operator==(const Statistic&) const = default;
  bool same_spaces(const Statistic& o) const { return left == o.left && right == o.right; }
};

// Sequence of statistics over a boundary space B = F^d (coordinates relative
// to a fixed basis of B).
struct Trajectory {
  std::vector<Statistic> stats;

  int size() const { return int(stats.size()); }
  const Statistic& operator[](int i) const { return stats[i]; }
  int boundary_dim() const { return stats.front().left.ambient_dim(); }
  bool operator==(const Trajectory&) const = default;
  std::size_t hash() const;
};

struct TrajectoryHash {
  std::size_t operator()(const Trajectory& t) const { return t.hash(); }
};

// Throws std::invalid_argument unless L grows, R shrinks and R(first) = L(last).
void validate_trajectory(const Trajectory& t);
int width(const Trajectory& t);
Trajectory compactify(const Trajectory& t);
bool is_compact(const Trajectory& t);

// Points (x, y) with 0-based coordinates.
using LatticePath = std::vector<std::pair<int, int>>;

// Path witnessing a ⪯ b: it moves by (1,0), (0,1) or (1,1) from (0,0) to
// (|a|-1, |b|-1) and every point (x, y) has a[x] <= b[y].
std::optional<LatticePath> dominance_path(const Trajectory& a, const Trajectory& b);
bool precedes(const Trajectory& a, const Trajectory& b);

// Restriction to a subspace `small` of B, re-expressed in the basis of `small`.
Trajectory project(const Trajectory& t, const Subspace& small);
// Maps every subspace through t : B -> B' (injective).
Trajectory transform(const Trajectory& t, const Mat& map);

// Sum along a plain lattice path (steps (1,0) or (0,1)).
Trajectory sum_along(const Trajectory& a, const Trajectory& b, const LatticePath& path);
// Calls `visit` with every plain lattice path from (0,0) to (p-1, q-1).
void for_each_plain_path(int p, int q, const std::function<void(const LatticePath&)>& visit);
std::vector<Trajectory> sum_set(const Trajectory& a, const Trajectory& b);

// Statistics of the layout restricted to B (a subspace of F^r).
Trajectory canonical_trajectory(const Arrangement& a, const LinearLayout& l, const Subspace& b);
// ({0}, B, 0), (B, {0}, 0), or the single statistic ({0}, {0}, 0) when B = {0}.
Trajectory leaf_trajectory(Field f, int d);
// Every compact trajectory over F^d of width at most k.
std::vector<Trajectory> enumerate_compact(Field f, int d, int k);
// Every typical sequence over {0..k}.
std::vector<std::vector<int>> enumerate_typical(int k);

}  // namespace spw
