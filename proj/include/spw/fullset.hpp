#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "spw/branch_decomposition.hpp"
#include "spw/trajectory.hpp"

namespace spw {

// How a trajectory in a full set was derived; shared between trajectories.
struct Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

struct Certificate {
  struct Leaf {
    int part;
  };
  // The trajectory dominates the child's; ext_map[j] is the child position
  // matched with position j, nondecreasing from 0 to child length - 1.
  struct Up {
    CertificatePtr child;
    std::vector<int> ext_map;
  };
  struct Join {
    CertificatePtr left, right;
    LatticePath path;
  };
  struct Shrink {
    CertificatePtr child;
  };
  std::variant<Leaf, Up, Join, Shrink> node;
  int length;
};

struct CertifiedTrajectory {
  Trajectory traj;
  CertificatePtr cert;
};

// Antichain of ⪯-minimal compact trajectories of width <= k whose upward
// closure is the full set at one node.
struct FullSet {
  int boundary_dim = 0;
  int k = 0;
  std::vector<CertifiedTrajectory> elems;
  bool empty() const { return elems.empty(); }
};

FullSet init_leaf(int part, Field f, int boundary_dim, int k);
// Re-expresses the set over a larger boundary through an injective map.
FullSet expand(const FullSet& fs, const Mat& map);
FullSet join(const FullSet& a, const FullSet& b);
// Restriction to `small` inside the current boundary.
FullSet shrink(const FullSet& fs, const Subspace& small);

// Inserts `c` unless it is dominated; drops elements it dominates.
void insert_minimal(std::vector<CertifiedTrajectory>& antichain, CertifiedTrajectory c);

struct NodeSets {
  FullSet left, right;  // children after expansion
  FullSet joined;
  FullSet result;       // the full set at the node
};

struct DpRun {
  Boundaries boundaries;
  std::vector<NodeSets> nodes;
  const FullSet& root() const;
  int root_index;
};

DpRun run_dp(const Arrangement& a, const BranchDecomposition& bd, int k);

// Smallest width, then shortest, then lexicographically smallest lambdas.
std::optional<CertifiedTrajectory> min_width_element(const FullSet& fs);

// Layout of the arrangement read off the certificate of a root element.
LinearLayout backtrack(const CertifiedTrajectory& root_elem, const BranchDecomposition& bd, const Boundaries& b);

}  // namespace spw
