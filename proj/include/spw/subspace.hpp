#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spw/matrix.hpp"

namespace spw {

// Subspace of F^d held as a basis in reduced column echelon form, so two
// subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  static Subspace zero(Field f, int ambient);
  static Subspace whole(Field f, int ambient);
  // span(e_0, ..., e_{k-1})
  static Subspace coordinate(Field f, int ambient, int k);
  // Column span of `generators`.
  static Subspace span(const Mat& generators);

  int ambient_dim() const { return basis_.rows(); }
  int dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }

  bool contains(std::span<const Elem> x) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  std::size_t hash() const;

 private:
  explicit Subspace(Mat basis, std::vector<int> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Mat basis_;
  std::vector<int> pivots_;  // pivot row of each basis column
};

bool is_subspace_of(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
int sum_dim(const Subspace& a, const Subspace& b);
int intersection_dim(const Subspace& a, const Subspace& b);
// t * S for a linear map t : F^d -> F^d'.
Subspace image(const Mat& t, const Subspace& s);
// Coordinates of s relative to the canonical basis of `parent`; s must lie in parent.
Subspace relative_to(const Subspace& s, const Subspace& parent);

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

}  // namespace spw
