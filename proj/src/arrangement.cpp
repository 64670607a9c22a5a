#include "spw/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spw {

Arrangement::Arrangement(Mat matrix, std::vector<int> part_of_column, int num_parts)
    : matrix_(std::move(matrix)), part_of_(std::move(part_of_column)) {
  if (int(part_of_.size()) != matrix_.cols()) throw std::invalid_argument("partition size differs from column count");
  if (num_parts < 0) throw std::invalid_argument("negative part count");
  columns_.assign(num_parts, {});
  for (int c = 0; c < matrix_.cols(); ++c) {
    int p = part_of_[c];
    if (p < 0 || p >= num_parts) throw std::invalid_argument("column " + std::to_string(c) + " assigned to missing part");
    columns_[p].push_back(c);
  }
  dims_.resize(num_parts);
  for (int p = 0; p < num_parts; ++p) dims_[p] = rank(matrix_.select_columns(columns_[p]));
  total_rank_ = rank(matrix_);
}

Subspace Arrangement::part_space(int part) const { return Subspace::span(matrix_.select_columns(columns_of(part))); }

std::vector<int> Arrangement::columns_of(std::span<const int> parts) const {
  std::vector<int> cols;
  for (int p : parts) {
    const auto& c = columns_.at(p);
    cols.insert(cols.end(), c.begin(), c.end());
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

Arrangement Arrangement::restrict_to(std::span<const int> parts) const {
  std::vector<int> local(num_parts(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (local.at(parts[i]) >= 0) throw std::invalid_argument("repeated part");
    local[parts[i]] = int(i);
  }
  std::vector<int> cols = columns_of(parts);
  std::vector<int> assign;
  for (int c : cols) assign.push_back(local[part_of_[c]]);
  return Arrangement(matrix_.select_columns(cols), std::move(assign), int(parts.size()));
}

std::vector<int> complement(int n, std::span<const int> parts) {
  std::vector<char> in(n, 0);
  for (int p : parts) in.at(p) = 1;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!in[i]) rest.push_back(i);
  return rest;
}

int connectivity(const Arrangement& a, std::span<const int> parts) {
  std::vector<int> rest = complement(a.num_parts(), parts);
  int rx = rank(a.matrix().select_columns(a.columns_of(parts)));
  int ry = rank(a.matrix().select_columns(a.columns_of(rest)));
  return rx + ry - a.total_rank();
}

Subspace boundary_space(const Arrangement& a, std::span<const int> parts) {
  std::vector<int> rest = complement(a.num_parts(), parts);
  return intersection(Subspace::span(a.matrix().select_columns(a.columns_of(parts))),
                      Subspace::span(a.matrix().select_columns(a.columns_of(rest))));
}

void validate_layout(const Arrangement& a, const LinearLayout& l) {
  if (int(l.order.size()) != a.num_parts()) throw std::invalid_argument("layout has wrong length");
  std::vector<char> seen(a.num_parts(), 0);
  for (int p : l.order) {
    if (p < 0 || p >= a.num_parts() || seen[p]) throw std::invalid_argument("layout is not a permutation");
    seen[p] = 1;
  }
}

std::vector<int> layout_cuts(const Arrangement& a, const LinearLayout& l) {
  validate_layout(a, l);
  std::vector<int> cuts;
  for (int i = 1; i < a.num_parts(); ++i) cuts.push_back(connectivity(a, std::span(l.order).first(i)));
  return cuts;
}

int layout_width(const Arrangement& a, const LinearLayout& l) {
  auto cuts = layout_cuts(a, l);
  return cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
}

bool is_standard_form(const Arrangement& a) {
  const Mat& m = a.matrix();
  int r = m.rows();
  if (r > m.cols()) return false;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RowReduced row_reduce(const Arrangement& a) {
  Rref rr = rref(a.matrix());
  std::vector<int> source = rr.pivots;
  std::vector<char> is_pivot(a.num_columns(), 0);
  for (int p : rr.pivots) is_pivot[p] = 1;
  for (int c = 0; c < a.num_columns(); ++c)
    if (!is_pivot[c]) source.push_back(c);
  std::vector<int> rows(rr.rank());
  std::iota(rows.begin(), rows.end(), 0);
  Mat reduced = rr.reduced.select_rows(rows).select_columns(source);
  std::vector<int> assign;
  for (int c : source) assign.push_back(a.part_of_column()[c]);
  return {Arrangement(std::move(reduced), std::move(assign), a.num_parts()), std::move(source)};
}

ColumnReduced column_reduce(const Arrangement& a, int theta) {
  if (!is_standard_form(a)) throw std::invalid_argument("column reduction needs standard form");
  const Mat& m = a.matrix();
  const Field& f = a.field();
  int r = m.rows();
  std::vector<std::vector<Elem>> new_cols;
  std::vector<int> assign;
  for (int i = 0; i < a.num_parts(); ++i) {
    std::vector<int> rows_in, rows_out, cols_in, cols_out;
    for (int j = 0; j < r; ++j) (a.part_of_column()[j] == i ? rows_in : rows_out).push_back(j);
    for (int c = r; c < m.cols(); ++c) (a.part_of_column()[c] == i ? cols_in : cols_out).push_back(c);
    Mat bblock = m.select_rows(rows_in).select_columns(cols_out);
    Mat cblock = m.select_rows(rows_out).select_columns(cols_in);
    auto xs = column_basis(bblock);
    auto ys = column_basis(cblock);
    if (int(xs.size() + ys.size()) > theta) return {std::nullopt, i};
    for (int x : xs) {
      std::vector<Elem> v(r, 0);
      for (std::size_t t = 0; t < rows_in.size(); ++t) v[rows_in[t]] = bblock(int(t), x);
      new_cols.push_back(std::move(v));
      assign.push_back(i);
    }
    for (int y : ys) {
      std::vector<Elem> v(r, 0);
      for (std::size_t t = 0; t < rows_out.size(); ++t) v[rows_out[t]] = cblock(int(t), y);
      new_cols.push_back(std::move(v));
      assign.push_back(i);
    }
  }
  Mat out(f, r, int(new_cols.size()));
  for (std::size_t c = 0; c < new_cols.size(); ++c)
    for (int j = 0; j < r; ++j) out.at(j, int(c)) = new_cols[c][j];
  return {Arrangement(std::move(out), std::move(assign), a.num_parts()), -1};
}

}  // namespace spw
