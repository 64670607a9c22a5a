#pragma once

#include <span>
#include <vector>

#include "spw/matrix.hpp"

namespace spw {

// Minimal trellis of a linear code for a fixed coordinate order. The state
// at cut i is the restriction of the message functional to
// span(columns before i) ∩ span(columns from i on), so layer i has q^{dim} states.
struct Trellis {
  struct Edge {
    int from, to;
    Elem label;
  };
  int q;
  std::vector<int> order;       // coordinate read in section i
  std::vector<int> state_dims;  // per layer, n + 1 entries
  std::vector<std::vector<Edge>> sections;

  long long layer_size(int i) const;
  long long max_layer_size() const;
};

Trellis build_trellis(const Mat& generator, std::span<const int> order);
// Codeword (in original coordinate order) nearest to `received` in Hamming distance.
std::vector<Elem> viterbi_decode(const Trellis& t, std::span<const Elem> received);

// All codewords, for checking small codes.
std::vector<std::vector<Elem>> codewords(const Mat& generator);

}  // namespace spw
