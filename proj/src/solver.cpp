#include "spw/solver.hpp"

#include <stdexcept>

namespace spw {

namespace {

void check_width(const Arrangement& a, const LinearLayout& l, int k) {
  if (layout_width(a, l) > k) throw std::logic_error("constructed layout exceeds the width bound");
}

int floor_log2(int n) {
  int r = 0;
  while (n > 1) n >>= 1, ++r;
  return r;
}

}  // namespace

Decision decide_pathwidth(const Arrangement& input, int k) {
  if (k < 0) throw std::invalid_argument("negative width");
  Decision d;
  int n = input.num_parts();
  if (n <= 1) {
    d.layout = LinearLayout{};
    for (int i = 0; i < n; ++i) d.layout->order.push_back(i);
    return d;
  }
  // Every part meets the rest in at most 2k dimensions when the path-width is
  // at most k, so the parts can be cut down to those intersections.
  ColumnReduced cr = column_reduce(row_reduce(input).arrangement, 2 * k);
  if (!cr.arrangement) {
    d.wide_part = cr.wide_part;
    return d;
  }
  Arrangement a = row_reduce(*cr.arrangement).arrangement;

  std::vector<int> zero, nonzero;
  for (int i = 0; i < n; ++i) (a.is_zero_part(i) ? zero : nonzero).push_back(i);
  // layout of the first parts, in local indices
  std::vector<int> local;
  if (!nonzero.empty()) local.push_back(0);
  for (int len = 2; len <= int(nonzero.size()); ++len) {
    std::span<const int> parts = std::span(nonzero).first(len);
    Arrangement sub = a.restrict_to(parts);
    LinearLayout grown{local};
    grown.order.push_back(len - 1);
    BranchDecomposition bd = caterpillar(grown);
    DpRun run = run_dp(sub, bd, k);
    auto best = min_width_element(run.root());
    if (!best) {
      d.failed_prefix = len;
      return d;
    }
    LinearLayout next = backtrack(*best, bd, run.boundaries);
    check_width(sub, next, k);
    local = std::move(next.order);
  }
  LinearLayout out{zero};
  for (int i : local) out.order.push_back(nonzero[i]);
  check_width(input, out, k);
  d.layout = std::move(out);
  return d;
}

Decision decide_pathwidth_with_bd(const Arrangement& a, const BranchDecomposition& bd, int k) {
  if (k < 0) throw std::invalid_argument("negative width");
  Decision d;
  DpRun run = run_dp(a, bd, k);
  auto best = min_width_element(run.root());
  if (!best) {
    d.failed_prefix = a.num_parts();
    return d;
  }
  LinearLayout l = backtrack(*best, bd, run.boundaries);
  check_width(a, l, k);
  d.layout = std::move(l);
  return d;
}

ExactResult exact_pathwidth(const Arrangement& a) {
  for (int k = 0;; ++k) {
    Decision d = decide_pathwidth(a, k);
    if (d) return {layout_width(a, *d.layout), *d.layout};
  }
}

ExactResult exact_pathwidth(const Arrangement& a, const BranchDecomposition& bd) {
  int theta = bd_width(a, bd);
  int k = theta * floor_log2(a.num_parts());
  DpRun run = run_dp(a, bd, k);
  auto best = min_width_element(run.root());
  if (!best) throw std::logic_error("path-width exceeds the branch-width bound");
  LinearLayout l = backtrack(*best, bd, run.boundaries);
  int w = layout_width(a, l);
  if (w != width(best->traj)) throw std::logic_error("layout width differs from its trajectory");
  return {w, std::move(l)};
}

}  // namespace spw
