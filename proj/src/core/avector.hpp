#pragma once

#include <array>
#include <string>

#include "core/rational.hpp"

namespace gl3tf {

// Element of a0 = R^3 in the basis e1,e2,e3, with exact rational coordinates.
// The invariant bilinear form is the standard dot product; every root and
// weight pairing goes through pair().
struct AVector {
  std::array<Rat, 3> c{};

  AVector() = default;
  AVector(Rat a, Rat b, Rat d) : c{std::move(a), std::move(b), std::move(d)} {}
  static AVector of_ints(long a, long b, long d) { return {Rat(a), Rat(b), Rat(d)}; }

  Rat& operator[](int i) { return c[i]; }
  const Rat& operator[](int i) const { return c[i]; }

  bool operator==(const AVector& o) const { return c == o.c; }

  AVector operator+(const AVector& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
  AVector operator-(const AVector& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
  AVector operator-() const { return {-c[0], -c[1], -c[2]}; }

  Rat coord_sum() const { return c[0] + c[1] + c[2]; }

  // Orthogonal projection onto the sum-zero plane a0^G.
  AVector sum_zero_part() const {
    Rat m = coord_sum() / 3;
    return {c[0] - m, c[1] - m, c[2] - m};
  }

  std::string str() const {
    return "(" + to_string(c[0]) + "," + to_string(c[1]) + "," + to_string(c[2]) + ")";
  }
};

inline AVector operator*(const Rat& s, const AVector& v) {
  return {s * v.c[0], s * v.c[1], s * v.c[2]};
}

// The fixed Omega-invariant form <.,.>.
inline Rat pair(const AVector& a, const AVector& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

// Parses "a,b,c" with rational components.
AVector parse_avector(const std::string& s);

}  // namespace gl3tf
