#include "spw/subspace.hpp"

#include <stdexcept>

namespace spw {

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspaces live in different spaces");
}

}  // namespace

Subspace Subspace::zero(Field f, int ambient) { return Subspace(Mat(f, ambient, 0), {}); }

Subspace Subspace::whole(Field f, int ambient) { return coordinate(f, ambient, ambient); }

Subspace Subspace::coordinate(Field f, int ambient, int k) {
  if (k < 0 || k > ambient) throw std::invalid_argument("coordinate subspace out of range");
  Mat b(f, ambient, k);
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) b.at(i, i) = 1, piv[i] = i;
  return Subspace(std::move(b), std::move(piv));
}

Subspace Subspace::span(const Mat& generators) {
  Rref r = rref(generators.transpose());
  Mat b(generators.field(), generators.rows(), r.rank());
  for (int j = 0; j < r.rank(); ++j)
    for (int i = 0; i < generators.rows(); ++i) b.at(i, j) = r.reduced(j, i);
  return Subspace(std::move(b), std::move(r.pivots));
}

bool Subspace::contains(std::span<const Elem> x) const {
  if (int(x.size()) != ambient_dim()) throw std::invalid_argument("vector length mismatch");
  const Field& f = field();
  std::vector<Elem> v(x.begin(), x.end());
  for (int j = 0; j < dim(); ++j) {
    Elem c = v[pivots_[j]];
    if (!c) continue;
    for (int i = 0; i < ambient_dim(); ++i) v[i] = f.sub(v[i], f.mul(c, basis_(i, j)));
  }
  for (Elem e : v)
    if (e) return false;
  return true;
}

std::size_t Subspace::hash() const {
  std::size_t h = std::size_t(basis_.rows()) * 1000003u + basis_.cols();
  for (Elem e : basis_.raw()) h = h * 131 + e;
  return h;
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() > b.dim()) return false;
  for (int j = 0; j < a.dim(); ++j)
    if (!b.contains(a.basis().column(j))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span(hconcat(a.basis(), b.basis()));
}

int sum_dim(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0) return b.dim();
  if (b.dim() == 0) return a.dim();
  return rank(hconcat(a.basis(), b.basis()));
}

int intersection_dim(const Subspace& a, const Subspace& b) { return a.dim() + b.dim() - sum_dim(a, b); }

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const Field& f = a.field();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, a.ambient_dim());
  Mat nb = b.basis();
  for (int i = 0; i < nb.rows(); ++i)
    for (int j = 0; j < nb.cols(); ++j) nb.at(i, j) = f.neg(nb(i, j));
  Mat k = kernel_basis(hconcat(a.basis(), nb));
  std::vector<int> top(a.dim());
  for (int i = 0; i < a.dim(); ++i) top[i] = i;
  return Subspace::span(a.basis() * k.select_rows(top));
}

Subspace image(const Mat& t, const Subspace& s) {
  if (t.cols() != s.ambient_dim()) throw std::invalid_argument("linear map does not fit subspace");
  return Subspace::span(t * s.basis());
}

Subspace relative_to(const Subspace& s, const Subspace& parent) {
  require_compatible(s, parent);
  auto x = solve(parent.basis(), s.basis());
  if (!x) throw std::invalid_argument("subspace is not contained in parent");
  return Subspace::span(*x);
}

}  // namespace spw
