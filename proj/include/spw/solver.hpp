#pragma once

#include <optional>

#include "spw/fullset.hpp"

namespace spw {

struct Decision {
  std::optional<LinearLayout> layout;  // set exactly when the width is at most k
  // Why the answer is NO.
  int wide_part = -1;      // a part meeting the rest in more than 2k dimensions
  int failed_prefix = -1;  // number of nonzero parts at which the full set became empty
  explicit operator bool() const { return layout.has_value(); }
};

// Decides whether the path-width is at most k; a YES answer carries a layout
// of width <= k.
Decision decide_pathwidth(const Arrangement& a, int k);
// Same, with a branch-decomposition supplied; one dynamic programming pass.
Decision decide_pathwidth_with_bd(const Arrangement& a, const BranchDecomposition& bd, int k);

struct ExactResult {
  int width;
  LinearLayout layout;
};

// Exact path-width with an optimal layout. Given a branch-decomposition of
// width theta, one pass with the bound theta * floor(log2 n) suffices;
// otherwise k is increased from 0.
ExactResult exact_pathwidth(const Arrangement& a);
ExactResult exact_pathwidth(const Arrangement& a, const BranchDecomposition& bd);

}  // namespace spw
