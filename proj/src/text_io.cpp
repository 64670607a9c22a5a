#include "spw/text_io.hpp"

#include <sstream>

#include "spw/graph.hpp"

namespace spw {

namespace {

// Whitespace separated integers; lines starting with '#' are skipped.
class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  long long next(const char* what) {
    while (true) {
      std::string tok;
      if (cur_ >> tok) {
        try {
          std::size_t used = 0;
          long long v = std::stoll(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          return v;
        } catch (const std::exception&) {
          throw InputError(line_, std::string("expected ") + what + ", got '" + tok + "'");
        }
      }
      std::string text;
      if (!std::getline(in_, text)) throw InputError(line_, std::string("unexpected end of input, expected ") + what);
      ++line_;
      std::size_t first = text.find_first_not_of(" \t\r");
      if (first != std::string::npos && text[first] == '#') text.clear();
      cur_ = std::istringstream(text);
    }
  }

  void expect_end() {
    std::string tok;
    while (true) {
      if (cur_ >> tok) throw InputError(line_, "unexpected trailing data '" + tok + "'");
      std::string text;
      if (!std::getline(in_, text)) return;
      ++line_;
      std::size_t first = text.find_first_not_of(" \t\r");
      if (first != std::string::npos && text[first] == '#') text.clear();
      cur_ = std::istringstream(text);
    }
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  std::istringstream cur_;
  int line_ = 0;
};

Field read_field(Tokens& t) {
  long long q = t.next("field order");
  if (q < 2 || q > Field::kMaxOrder || !is_prime(int(q))) throw InputError(t.line(), "field order must be a prime <= 251");
  return Field(int(q));
}

int read_count(Tokens& t, const char* what, long long lo, long long hi) {
  long long v = t.next(what);
  if (v < lo || v > hi) throw InputError(t.line(), std::string(what) + " out of range");
  return int(v);
}

Mat read_rows(Tokens& t, Field f, int rows, int cols) {
  Mat m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      long long v = t.next("matrix entry");
      if (v < 0 || v >= f.order()) throw InputError(t.line(), "matrix entry outside [0, q)");
      m.at(r, c) = Elem(v);
    }
  return m;
}

}  // namespace

Arrangement read_arrangement(std::istream& in) {
  Tokens t(in);
  Field f = read_field(t);
  int r = read_count(t, "row count", 0, 1 << 16);
  int m = read_count(t, "column count", 0, 1 << 16);
  int n = read_count(t, "part count", 0, 1 << 16);
  std::vector<int> assign(m);
  for (int c = 0; c < m; ++c) assign[c] = read_count(t, "part number", 1, n) - 1;
  Mat mat = read_rows(t, f, r, m);
  t.expect_end();
  return Arrangement(std::move(mat), std::move(assign), n);
}

Mat read_generator(std::istream& in) {
  Tokens t(in);
  Field f = read_field(t);
  int k = read_count(t, "dimension", 0, 1 << 16);
  int n = read_count(t, "length", 0, 1 << 16);
  Mat g = read_rows(t, f, k, n);
  t.expect_end();
  return g;
}

Graph read_graph(std::istream& in) {
  Tokens t(in);
  int n = read_count(t, "vertex count", 0, 1 << 16);
  int m = read_count(t, "edge count", 0, 1 << 24);
  Graph g(n);
  for (int e = 0; e < m; ++e) {
    int u = read_count(t, "vertex", 1, n) - 1;
    int v = read_count(t, "vertex", 1, n) - 1;
    if (u == v) throw InputError(t.line(), "self-loop");
    g.add_edge(u, v);
  }
  t.expect_end();
  return g;
}

std::string write_arrangement(const Arrangement& a) {
  std::ostringstream out;
  out << a.field().order() << ' ' << a.ambient_dim() << ' ' << a.num_columns() << ' ' << a.num_parts() << '\n';
  for (int c = 0; c < a.num_columns(); ++c) out << (c ? " " : "") << a.part_of_column()[c] + 1;
  out << '\n';
  for (int r = 0; r < a.ambient_dim(); ++r) {
    for (int c = 0; c < a.num_columns(); ++c) out << (c ? " " : "") << int(a.matrix()(r, c));
    out << '\n';
  }
  return out.str();
}

}  // namespace spw
