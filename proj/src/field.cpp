#include "spw/field.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace spw {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

namespace {

using InverseTable = std::array<Elem, 256>;

const InverseTable* inverse_table(unsigned q) {
  static const auto tables = [] {
    std::array<std::unique_ptr<InverseTable>, Field::kMaxOrder + 1> t;
    for (int p = 2; p <= Field::kMaxOrder; ++p) {
      if (!is_prime(p)) continue;
      auto table = std::make_unique<InverseTable>();
      table->fill(0);
      for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
          if (a * b % p == 1) {
            (*table)[a] = Elem(b);
            break;
          }
      t[p] = std::move(table);
    }
    return t;
  }();
  return tables[q].get();
}

}  // namespace

Field::Field(int q) {
  if (q < 2 || q > kMaxOrder || !is_prime(q))
    throw std::invalid_argument("field order must be a prime <= 251, got " + std::to_string(q));
  q_ = unsigned(q);
  inv_ = inverse_table(q_);
  for (unsigned a = 1; a < q_; ++a)
    if (unsigned((*inv_)[a]) * a % q_ != 1) throw std::logic_error("broken inverse table");
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return (*inv_)[a];
}

Elem Field::from_int(long long v) const {
  long long r = v % (long long)q_;
  if (r < 0) r += q_;
  return Elem(r);
}

}  // namespace spw
