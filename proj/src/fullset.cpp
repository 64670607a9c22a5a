#include "spw/fullset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spw {

namespace {

CertificatePtr make_cert(Certificate::Leaf n, int length) {
  return std::make_shared<const Certificate>(Certificate{n, length});
}

// Certificate for `parent`, which dominates `child` (described by child_cert).
CertificatePtr lift(const Trajectory& child, CertificatePtr child_cert, const Trajectory& parent) {
  if (child == parent) return child_cert;
  auto path = dominance_path(child, parent);
  if (!path) throw std::logic_error("compaction does not dominate its source");
  std::vector<int> ext(parent.size(), -1);
  for (auto [x, y] : *path)
    if (ext[y] < 0) ext[y] = x;
  ext.back() = child.size() - 1;
  return std::make_shared<const Certificate>(
      Certificate{Certificate::Up{std::move(child_cert), std::move(ext)}, parent.size()});
}

}  // namespace

void insert_minimal(std::vector<CertifiedTrajectory>& antichain, CertifiedTrajectory c) {
  for (const auto& e : antichain)
    if (precedes(e.traj, c.traj)) return;
  std::erase_if(antichain, [&](const CertifiedTrajectory& e) { return precedes(c.traj, e.traj); });
  antichain.push_back(std::move(c));
}

FullSet init_leaf(int part, Field f, int boundary_dim, int k) {
  Trajectory t = leaf_trajectory(f, boundary_dim);
  int len = t.size();
  FullSet fs{boundary_dim, k, {}};
  fs.elems.push_back({std::move(t), make_cert(Certificate::Leaf{part}, len)});
  return fs;
}

FullSet expand(const FullSet& fs, const Mat& map) {
  if (map.cols() != fs.boundary_dim) throw std::invalid_argument("expansion map does not fit the boundary");
  // Positions are unchanged, so the certificates carry over as they are.
  FullSet out{map.rows(), fs.k, {}};
  out.elems.reserve(fs.elems.size());
  for (const auto& e : fs.elems) out.elems.push_back({transform(e.traj, map), e.cert});
  return out;
}

FullSet join(const FullSet& a, const FullSet& b) {
  if (a.boundary_dim != b.boundary_dim || a.k != b.k) throw std::invalid_argument("joining incompatible full sets");
  const int k = a.k;
  FullSet out{a.boundary_dim, k, {}};
  for (const auto& e1 : a.elems)
    for (const auto& e2 : b.elems) {
      const Trajectory &t1 = e1.traj, &t2 = e2.traj;
      int p = t1.size(), q = t2.size();
      int base = intersection_dim(t1[0].right, t2[0].right);
      std::vector<Statistic> cells;
      cells.reserve(std::size_t(p) * q);
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < q; ++y) {
          const Statistic &s = t1[x], &u = t2[y];
          int overlap = intersection_dim(sum(s.left, s.right), sum(u.left, u.right));
          cells.push_back({sum(s.left, u.left), sum(s.right, u.right), s.lambda + u.lambda + base - overlap});
        }
      auto cell = [&](int x, int y) -> const Statistic& { return cells[std::size_t(x) * q + y]; };
      if (cell(0, 0).lambda > k) continue;
      LatticePath path{{0, 0}};
      Trajectory raw;
      raw.stats.push_back(cell(0, 0));
      std::function<void(int, int)> walk = [&](int x, int y) {
        if (x == p - 1 && y == q - 1) {
          Trajectory c = compactify(raw);
          for (const auto& e : out.elems)
            if (precedes(e.traj, c)) return;
          auto jc = std::make_shared<const Certificate>(Certificate{Certificate::Join{e1.cert, e2.cert, path}, raw.size()});
          CertificatePtr cert = lift(raw, std::move(jc), c);
          insert_minimal(out.elems, {std::move(c), std::move(cert)});
          return;
        }
        for (auto [nx, ny] : {std::pair{x + 1, y}, std::pair{x, y + 1}}) {
          if (nx >= p || ny >= q || cell(nx, ny).lambda > k) continue;
          path.push_back({nx, ny});
          raw.stats.push_back(cell(nx, ny));
          walk(nx, ny);
          raw.stats.pop_back();
          path.pop_back();
        }
      };
      walk(0, 0);
    }
  return out;
}

FullSet shrink(const FullSet& fs, const Subspace& small) {
  if (small.ambient_dim() != fs.boundary_dim) throw std::invalid_argument("shrink target is not inside the boundary");
  FullSet out{small.dim(), fs.k, {}};
  for (const auto& e : fs.elems) {
    Trajectory p = project(e.traj, small);
    if (width(p) > fs.k) continue;
    Trajectory c = compactify(p);
    auto sc = std::make_shared<const Certificate>(Certificate{Certificate::Shrink{e.cert}, p.size()});
    CertificatePtr cert = lift(p, std::move(sc), c);
    insert_minimal(out.elems, {std::move(c), std::move(cert)});
  }
  return out;
}

const FullSet& DpRun::root() const { return nodes.at(root_index).result; }

DpRun run_dp(const Arrangement& a, const BranchDecomposition& bd, int k) {
  if (k < 0) throw std::invalid_argument("negative width");
  DpRun run{compute_boundaries(a, bd), std::vector<NodeSets>(bd.nodes().size()), bd.root()};
  const Field& f = a.field();
  for (int v : bd.bottom_up_order()) {
    const BdNode& nd = bd.node(v);
    const NodeBoundary& nb = run.boundaries.nodes[v];
    NodeSets& ns = run.nodes[v];
    if (nd.is_leaf()) {
      ns.result = init_leaf(nd.part, f, nb.basis.cols(), k);
      continue;
    }
    ns.left = expand(run.nodes[nd.children[0]].result, nb.transition[0]);
    ns.right = expand(run.nodes[nd.children[1]].result, nb.transition[1]);
    ns.joined = join(ns.left, ns.right);
    ns.result = shrink(ns.joined, Subspace::coordinate(f, nb.ext_basis.cols(), nb.basis.cols()));
  }
  return run;
}

std::optional<CertifiedTrajectory> min_width_element(const FullSet& fs) {
  const CertifiedTrajectory* best = nullptr;
  auto key = [](const Trajectory& t) {
    std::vector<int> lam;
    for (const auto& s : t.stats) lam.push_back(s.lambda);
    return std::tuple(width(t), t.size(), lam);
  };
  for (const auto& e : fs.elems)
    if (!best || key(e.traj) < key(best->traj)) best = &e;
  if (!best) return std::nullopt;
  return *best;
}

namespace {

// Appends the parts placed in gap i (between positions i and i+1).
void emit(const Certificate& c, int i, std::vector<int>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Certificate::Leaf>) {
          if (i == 0) out.push_back(n.part);
        } else if constexpr (std::is_same_v<T, Certificate::Up>) {
          for (int j = n.ext_map[i]; j < n.ext_map[i + 1]; ++j) emit(*n.child, j, out);
        } else if constexpr (std::is_same_v<T, Certificate::Join>) {
          auto [x0, y0] = n.path[i];
          auto [x1, y1] = n.path[i + 1];
          if (x1 > x0)
            emit(*n.left, x0, out);
          else
            emit(*n.right, y0, out);
        } else {
          emit(*n.child, i, out);
        }
      },
      c.node);
}

}  // namespace

LinearLayout backtrack(const CertifiedTrajectory& root_elem, const BranchDecomposition& bd, const Boundaries& b) {
  LinearLayout l;
  // Parts with no boundary leave every canonical trajectory unchanged.
  for (int p = 0; p < bd.num_parts(); ++p)
    if (b.nodes[bd.leaf_of(p)].basis.cols() == 0) l.order.push_back(p);
  for (int i = 0; i + 1 < root_elem.cert->length; ++i) emit(*root_elem.cert, i, l.order);
  std::vector<char> seen(bd.num_parts(), 0);
  for (int p : l.order) {
    if (seen[p]) throw std::logic_error("backtracking placed a part twice");
    seen[p] = 1;
  }
  if (int(l.order.size()) != bd.num_parts()) throw std::logic_error("backtracking missed a part");
  return l;
}

}  // namespace spw
