#include "spw/trellis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "spw/subspace.hpp"

namespace spw {

namespace {

constexpr long long kMaxEnumeration = 1LL << 24;

long long power(int q, int e) {
  long long p = 1;
  for (int i = 0; i < e; ++i) {
    p *= q;
    if (p > kMaxEnumeration) throw std::length_error("trellis too large to enumerate");
  }
  return p;
}

int encode(std::span<const Elem> v, int q) {
  long long id = 0;
  for (std::size_t i = v.size(); i-- > 0;) id = id * q + v[i];
  return int(id);
}

// Row basis of the code.
Mat row_basis(const Mat& g) {
  Rref r = rref(g);
  std::vector<int> rows(r.rank());
  std::iota(rows.begin(), rows.end(), 0);
  return r.reduced.select_rows(rows);
}

}  // namespace

long long Trellis::layer_size(int i) const { return power(q, state_dims.at(i)); }

long long Trellis::max_layer_size() const {
  long long m = 0;
  for (int i = 0; i < int(state_dims.size()); ++i) m = std::max(m, layer_size(i));
  return m;
}

Trellis build_trellis(const Mat& generator, std::span<const int> order) {
  Mat g = row_basis(generator);
  const Field& f = g.field();
  int n = g.cols();
  std::vector<char> seen(n, 0);
  if (int(order.size()) != n) throw std::invalid_argument("order has wrong length");
  for (int c : order) {
    if (c < 0 || c >= n || seen[c]) throw std::invalid_argument("order is not a permutation");
    seen[c] = 1;
  }
  Trellis t{f.order(), std::vector<int>(order.begin(), order.end()), {}, {}};
  // Functionals describing the state at each cut, one per row.
  std::vector<Mat> state_maps;
  for (int i = 0; i <= n; ++i) {
    Subspace pre = Subspace::span(g.select_columns(order.first(i)));
    Subspace suf = Subspace::span(g.select_columns(order.subspan(i)));
    Mat s = intersection(pre, suf).basis().transpose();
    t.state_dims.push_back(s.rows());
    state_maps.push_back(std::move(s));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> col{order[i]};
    Mat label = g.select_columns(col).transpose();
    Mat m = vconcat(vconcat(state_maps[i], label), state_maps[i + 1]);
    // Edges are exactly the image of u -> (state before, label, state after).
    Mat img = m.select_columns(column_basis(m));
    long long count = power(f.order(), img.cols());
    int w0 = state_maps[i].rows();
    std::vector<Elem> coef(img.cols(), 0);
    auto& sec = t.sections.emplace_back();
    for (long long e = 0; e < count; ++e) {
      std::vector<Elem> v = mat_vec(img, coef);
      std::span<const Elem> sv(v);
      sec.push_back({encode(sv.first(w0), f.order()), encode(sv.subspan(w0 + 1), f.order()), v[w0]});
      for (std::size_t j = 0; j < coef.size() && ++coef[j] == f.order(); ++j) coef[j] = 0;
    }
  }
  return t;
}

std::vector<Elem> viterbi_decode(const Trellis& t, std::span<const Elem> received) {
  int n = int(t.sections.size());
  if (int(received.size()) != n) throw std::invalid_argument("received word has wrong length");
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> cost{0};
  std::vector<std::vector<int>> back(n);
  for (int i = 0; i < n; ++i) {
    std::vector<long long> next(t.layer_size(i + 1), inf);
    back[i].assign(next.size(), -1);
    const auto& sec = t.sections[i];
    Elem r = received[t.order[i]];
    for (int e = 0; e < int(sec.size()); ++e) {
      const auto& ed = sec[e];
      if (cost[ed.from] >= inf) continue;
      long long c = cost[ed.from] + (ed.label != r);
      if (c < next[ed.to]) next[ed.to] = c, back[i][ed.to] = e;
    }
    cost = std::move(next);
  }
  std::vector<Elem> word(n, 0);
  int state = 0;
  for (int i = n - 1; i >= 0; --i) {
    const auto& ed = t.sections[i][back[i][state]];
    word[t.order[i]] = ed.label;
    state = ed.from;
  }
  return word;
}

std::vector<std::vector<Elem>> codewords(const Mat& generator) {
  Mat g = row_basis(generator);
  const Field& f = g.field();
  long long count = power(f.order(), g.rows());
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> u(g.rows(), 0);
  Mat gt = g.transpose();
  for (long long e = 0; e < count; ++e) {
    out.push_back(mat_vec(gt, u));
    for (std::size_t j = 0; j < u.size() && ++u[j] == f.order(); ++j) u[j] = 0;
  }
  return out;
}

}  // namespace spw
