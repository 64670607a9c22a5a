#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "spw/fullset.hpp"

namespace spw::testing {

using TrajectorySet = std::unordered_set<Trajectory, TrajectoryHash>;

// Whether U_k over F^d is small enough to enumerate and join literally.
bool literal_feasible(int d, int k);

// Compactified sums of a and b along every plain lattice path, keeping those
// of width <= k.
TrajectorySet compact_sums(const Trajectory& a, const Trajectory& b, int k);

// {Γ in U_k(F^d) : some m ⪯ Γ}
TrajectorySet up_closure(const std::vector<Trajectory>& from, Field f, int d, int k);
TrajectorySet up_closure(const FullSet& fs, Field f);

struct LiteralNode {
  TrajectorySet left, right, joined, result;
};

// Full sets computed on whole subsets of U_k at every node, without any
// minimality pruning. Nothing when some boundary is too large.
std::optional<std::vector<LiteralNode>> literal_dp(const Arrangement& a, const BranchDecomposition& bd, int k);

// Compact trajectories of width <= k dominating the canonical trajectory of
// some layout of the parts below v (all layouts enumerated).
TrajectorySet definitional_full_set(const BranchDecomposition& bd, const Boundaries& b, int v, int k);

}  // namespace spw::testing
