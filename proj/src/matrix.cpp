#include "spw/matrix.hpp"

#include <stdexcept>

namespace spw {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

Mat::Mat(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  data_.assign(std::size_t(rows) * cols, 0);
}

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<long long>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : int(rows[0].size());
  Mat m(f, int(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (int(rows[r].size()) != cols) throw std::invalid_argument("ragged rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = f.from_int(rows[r][c]);
  }
  return m;
}

std::vector<Elem> Mat::column(int c) const {
  std::vector<Elem> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::select_columns(std::span<const int> cols) const {
  Mat s(field_, rows_, int(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(r, int(j)) = (*this)(r, cols[j]);
  return s;
}

Mat Mat::select_rows(std::span<const int> rows) const {
  Mat s(field_, int(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < cols_; ++c) s.at(int(i), c) = (*this)(rows[i], c);
  return s;
}

bool Mat::is_zero() const {
  for (Elem e : data_)
    if (e) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  const Field& f = a.field();
  Mat p(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      Elem x = a(i, l);
      if (!x) continue;
      for (int j = 0; j < b.cols(); ++j) p.at(i, j) = f.add(p(i, j), f.mul(x, b(l, j)));
    }
  return p;
}

Mat hconcat(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
  Mat m(a.field(), a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Mat vconcat(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat column mismatch");
  Mat m(a.field(), a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b(r, c);
  return m;
}

std::vector<Elem> mat_vec(const Mat& a, std::span<const Elem> x) {
  if (int(x.size()) != a.cols()) throw std::invalid_argument("vector length mismatch");
  const Field& f = a.field();
  std::vector<Elem> y(a.rows(), 0);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) y[r] = f.add(y[r], f.mul(a(r, c), x[c]));
  return y;
}

Rref rref(const Mat& a) {
  const Field& f = a.field();
  Rref out{a, {}};
  Mat& m = out.reduced;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Elem s = f.inv(m(row, c));
    for (int j = c; j < m.cols(); ++j) m.at(row, j) = f.mul(m(row, j), s);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      Elem x = m(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(r, j) = f.sub(m(r, j), f.mul(x, m(row, j)));
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

int rank(const Mat& a) { return rref(a).rank(); }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("solve row mismatch");
  Rref r = rref(hconcat(a, b));
  Mat x(a.field(), a.cols(), b.cols());
  for (int i = 0; i < r.rank(); ++i) {
    int p = r.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x.at(p, j) = r.reduced(i, a.cols() + j);
  }
  return x;
}

Mat kernel_basis(const Mat& a) {
  const Field& f = a.field();
  Rref r = rref(a);
  std::vector<int> is_pivot(a.cols(), -1);
  for (int i = 0; i < r.rank(); ++i) is_pivot[r.pivots[i]] = i;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (is_pivot[c] < 0) free_cols.push_back(c);
  Mat k(f, a.cols(), int(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, int(j)) = 1;
    for (int i = 0; i < r.rank(); ++i) k.at(r.pivots[i], int(j)) = f.neg(r.reduced(i, fc));
  }
  return k;
}

std::vector<int> column_basis(const Mat& a, std::span<const int> prefer) {
  const Field& f = a.field();
  std::vector<char> seen(a.cols(), 0);
  std::vector<int> order;
  for (int c : prefer) {
    if (c < 0 || c >= a.cols()) throw std::invalid_argument("prefer index out of range");
    if (!seen[c]) order.push_back(c), seen[c] = 1;
  }
  for (int c = 0; c < a.cols(); ++c)
    if (!seen[c]) order.push_back(c);

  // Incremental elimination: echelon rows indexed by their pivot coordinate.
  std::vector<std::vector<Elem>> echelon(a.rows());
  std::vector<char> has(a.rows(), 0);
  std::vector<int> chosen;
  for (int c : order) {
    std::vector<Elem> v = a.column(c);
    for (int p = 0; p < a.rows(); ++p) {
      if (!v[p]) continue;
      if (!has[p]) {
        Elem s = f.inv(v[p]);
        for (auto& e : v) e = f.mul(e, s);
        echelon[p] = std::move(v);
        has[p] = 1;
        chosen.push_back(c);
        break;
      }
      Elem x = v[p];
      for (int i = p; i < a.rows(); ++i) v[i] = f.sub(v[i], f.mul(x, echelon[p][i]));
    }
  }
  return chosen;
}

}  // namespace spw
