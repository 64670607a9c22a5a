#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spw/arrangement.hpp"

namespace spw {

// Matroids are given by a representing matrix; element i is column i.

// r(X) + r(E - X) - r(E)
int matroid_connectivity(const Mat& m, std::span<const int> x);
int matroid_layout_width(const Mat& m, std::span<const int> order);
// Each column becomes its own part.
Arrangement column_arrangement(const Mat& m);

// An order of width <= k, or nothing. Loops come first, then coloops, both in
// input order, followed by the remaining elements.
std::optional<std::vector<int>> matroid_pathwidth_at_most(const Mat& m, int k);

struct MatroidLayout {
  int width;
  std::vector<int> order;
};
MatroidLayout matroid_pathwidth(const Mat& m);

// Trellis-width of a linear code is the path-width of the column matroid of
// its generator matrix.
std::optional<std::vector<int>> trellis_width_at_most(const Mat& generator, int k);
MatroidLayout trellis_width(const Mat& generator);

// Matroid known only through an independence oracle on subsets of 0..n-1.
using IndependenceOracle = std::function<bool(std::span<const int>)>;

class OracleInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleAnswer {
  // When false the matroid has path-width > k or is not binary.
  bool width_at_most_k;
  std::vector<int> order;
};

// Builds the binary matrix of fundamental circuits of a greedy basis, solves
// that, and checks the resulting order against the oracle rank function.
OracleAnswer oracle_binary_pathwidth(int n, const IndependenceOracle& independent, int k);
// Greedy rank through the oracle.
int oracle_rank(const IndependenceOracle& independent, std::span<const int> x);

}  // namespace spw
