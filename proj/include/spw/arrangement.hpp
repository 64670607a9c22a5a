#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spw/subspace.hpp"

namespace spw {

// Subspace arrangement V_0..V_{n-1} in F^r, given as an r x m matrix whose
// columns are partitioned into n parts. A part may have no columns, or columns
// spanning {0}; such parts are treated as zero parts.
class Arrangement {
 public:
  Arrangement(Mat matrix, std::vector<int> part_of_column, int num_parts);

  const Mat& matrix() const { return matrix_; }
  const Field& field() const { return matrix_.field(); }
  int ambient_dim() const { return matrix_.rows(); }
  int num_columns() const { return matrix_.cols(); }
  int num_parts() const { return int(columns_.size()); }
  const std::vector<int>& part_of_column() const { return part_of_; }
  const std::vector<int>& columns_of(int part) const { return columns_.at(part); }
  int part_dim(int part) const { return dims_.at(part); }
  bool is_zero_part(int part) const { return part_dim(part) == 0; }
  Subspace part_space(int part) const;
  int total_rank() const { return total_rank_; }

  // Columns belonging to the given parts, in column order.
  std::vector<int> columns_of(std::span<const int> parts) const;
  // Arrangement of the listed parts only; part parts[i] becomes part i.
  Arrangement restrict_to(std::span<const int> parts) const;

 private:
  Mat matrix_;
  std::vector<int> part_of_;
  std::vector<std::vector<int>> columns_;
  std::vector<int> dims_;
  int total_rank_;
};

// dim(span(X) ∩ span(rest)) for the set X of parts.
int connectivity(const Arrangement& a, std::span<const int> parts);
// span(X) ∩ span(rest) in F^r.
Subspace boundary_space(const Arrangement& a, std::span<const int> parts);
std::vector<int> complement(int n, std::span<const int> parts);

struct LinearLayout {
  std::vector<int> order;
  bool operator==(const LinearLayout&) const = default;
};

void validate_layout(const Arrangement& a, const LinearLayout& l);
// Connectivity of each proper nonempty prefix (n-1 values).
std::vector<int> layout_cuts(const Arrangement& a, const LinearLayout& l);
int layout_width(const Arrangement& a, const LinearLayout& l);

// The first r' columns form the identity and there are no zero rows.
bool is_standard_form(const Arrangement& a);

struct RowReduced {
  Arrangement arrangement;
  std::vector<int> column_source;  // new column j came from old column column_source[j]
};
// Row operations to standard form; parts keep their indices.
RowReduced row_reduce(const Arrangement& a);

struct ColumnReduced {
  std::optional<Arrangement> arrangement;
  int wide_part = -1;  // set when some V_i ∩ span(rest) exceeds theta
};
// Replaces every part by a basis of V_i ∩ span(rest). Input must be in standard form.
ColumnReduced column_reduce(const Arrangement& a, int theta);

}  // namespace spw
