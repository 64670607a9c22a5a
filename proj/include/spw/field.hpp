#pragma once

#include <array>
#include <cstdint>

namespace spw {

using Elem = std::uint8_t;

// Prime field GF(q), q <= 251. Cheap to copy.
class Field {
 public:
  static constexpr int kMaxOrder = 251;

  explicit Field(int q);

  int order() const { return q_; }

  Elem add(Elem a, Elem b) const {
    unsigned s = unsigned(a) + b;
    return Elem(s >= q_ ? s - q_ : s);
  }
  Elem sub(Elem a, Elem b) const { return Elem(a >= b ? a - b : a + q_ - b); }
  Elem neg(Elem a) const { return Elem(a == 0 ? 0 : q_ - a); }
  Elem mul(Elem a, Elem b) const { return Elem(unsigned(a) * b % q_); }
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // Reduces an arbitrary integer into [0, q).
  Elem from_int(long long v) const;

  bool operator==(const Field& o) const { return q_ == o.q_; }

 private:
  unsigned q_;
  const std::array<Elem, 256>* inv_;
};

bool is_prime(int q);

}  // namespace spw
