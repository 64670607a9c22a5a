#pragma once

#include <array>
#include <string>
#include <vector>

#include "spw/arrangement.hpp"

namespace spw {

struct BdNode {
  int parent = -1;
  std::array<int, 2> children{-1, -1};
  int part = -1;  // leaves only
  bool is_leaf() const { return part >= 0; }
};

// Rooted binary tree whose leaves are the parts of an arrangement (n >= 2).
class BranchDecomposition {
 public:
  BranchDecomposition(std::vector<BdNode> nodes, int root, int num_parts);

  const std::vector<BdNode>& nodes() const { return nodes_; }
  const BdNode& node(int v) const { return nodes_.at(v); }
  int root() const { return root_; }
  int num_parts() const { return num_parts_; }
  int leaf_of(int part) const { return leaf_of_.at(part); }
  const std::vector<int>& parts_below(int v) const { return below_.at(v); }
  // Children before parents; deeper nodes first, ties by node index.
  const std::vector<int>& bottom_up_order() const { return order_; }

 private:
  std::vector<BdNode> nodes_;
  int root_, num_parts_;
  std::vector<int> leaf_of_;
  std::vector<std::vector<int>> below_;
  std::vector<int> order_;
};

// Roots an unrooted tree with leaves labelled by parts (leaf_part[v] < 0 for
// inner vertices) by subdividing the edge at the leaf of the lowest part.
BranchDecomposition root_tree(const std::vector<std::vector<int>>& adj, const std::vector<int>& leaf_part);

// Caterpillar whose leaves follow the layout. Its spine edges are the cuts of
// the layout, its pendant edges the single parts.
BranchDecomposition caterpillar(const LinearLayout& l);

int bd_width(const Arrangement& a, const BranchDecomposition& bd);

// Nested binary term over 1-based part numbers, e.g. "((1 2) (3 4))".
BranchDecomposition parse_bd(const std::string& text, int num_parts);
std::string format_bd(const BranchDecomposition& bd);

// Boundary data for the dynamic programme, expressed in the coordinates of
// the standard-form row reduction of the arrangement.
struct NodeBoundary {
  Mat basis;      // B_v, r' x dim B_v
  Mat ext_basis;  // B'_v = B_{w1} + B_{w2} with B_v as a prefix of its basis
  std::array<Mat, 2> transition;  // ext_basis * transition[i] = child i's basis
};

struct Boundaries {
  Arrangement standard;
  std::vector<NodeBoundary> nodes;
};

Boundaries compute_boundaries(const Arrangement& a, const BranchDecomposition& bd);

}  // namespace spw
