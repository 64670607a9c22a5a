#pragma once

#include <span>
#include <vector>

#include "spw/branch_decomposition.hpp"
#include "spw/solver.hpp"

namespace spw {

// Exhaustive reference implementations for small inputs.

// Dynamic programme over subsets of parts (n <= 20).
ExactResult pathwidth_subset_dp(const Arrangement& a);
// All n! layouts (n <= 9).
ExactResult pathwidth_permutations(const Arrangement& a);

struct BranchwidthResult {
  int width;
  BranchDecomposition bd;
};
// All branch-decompositions (2 <= n <= 9).
BranchwidthResult branchwidth_bruteforce(const Arrangement& a);

// Applies every available reduction in every order and returns the unique
// irreducible result (throws if it is not unique).
std::vector<int> typical_bruteforce(std::span<const int> seq);

}  // namespace spw
