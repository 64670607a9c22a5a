#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spw/field.hpp"

namespace spw {

// Dense row-major matrix over a prime field. Zero rows or columns are allowed.
class Mat {
 public:
  Mat(Field f, int rows, int cols);
  static Mat identity(Field f, int n);
  // Entries are reduced mod q.
  static Mat from_rows(Field f, const std::vector<std::vector<long long>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Elem operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  Elem& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  std::span<const Elem> row(int r) const { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }
  std::vector<Elem> column(int c) const;

  Mat transpose() const;
  Mat select_columns(std::span<const int> cols) const;
  Mat select_rows(std::span<const int> rows) const;
  bool is_zero() const;

  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  const std::vector<Elem>& raw() const { return data_; }

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Elem> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat hconcat(const Mat& a, const Mat& b);
Mat vconcat(const Mat& a, const Mat& b);
std::vector<Elem> mat_vec(const Mat& a, std::span<const Elem> x);

struct Rref {
  Mat reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return int(pivots.size()); }
};

Rref rref(const Mat& a);
int rank(const Mat& a);
// Some X with a*X = b, or nothing.
std::optional<Mat> solve(const Mat& a, const Mat& b);
// Columns form a basis of {x : a*x = 0}.
Mat kernel_basis(const Mat& a);
// Indices of a maximal independent set of columns, scanning `prefer` first and
// then the remaining columns left to right. Returned in scan order.
std::vector<int> column_basis(const Mat& a, std::span<const int> prefer = {});

}  // namespace spw
