#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "spw/arrangement.hpp"

namespace spw {

class Graph;

class InputError : public std::runtime_error {
 public:
  InputError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// "q r m n", then m part numbers in 1..n, then r rows of m entries.
Arrangement read_arrangement(std::istream& in);
// "q k n", then k rows of n entries.
Mat read_generator(std::istream& in);
// "n m", then m edges "u v" with 1-based vertices.
Graph read_graph(std::istream& in);

std::string write_arrangement(const Arrangement& a);

}  // namespace spw
