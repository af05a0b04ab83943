#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace gl3tf {

// 3x3 matrix over Q, row-major, exact arithmetic throughout.
struct RationalMatrix3 {
  std::array<Rat, 9> a{};

  static RationalMatrix3 identity();
  static RationalMatrix3 scalar(const Rat& z);
  // z * n(v12, v13, v23): z times upper unitriangular.
  static RationalMatrix3 z_times_unipotent(const Rat& z, const Rat& v12, const Rat& v13,
                                           const Rat& v23);
  static RationalMatrix3 diag(const Rat& x, const Rat& y, const Rat& z);
  // Companion matrix of x^3 + c2 x^2 + c1 x + c0.
  static RationalMatrix3 companion(const Rat& c0, const Rat& c1, const Rat& c2);

  Rat& at(int i, int j) { return a[3 * i + j]; }
  const Rat& at(int i, int j) const { return a[3 * i + j]; }
  bool operator==(const RationalMatrix3& o) const { return a == o.a; }

  RationalMatrix3 operator*(const RationalMatrix3& o) const;
  RationalMatrix3 operator+(const RationalMatrix3& o) const;
  RationalMatrix3 operator-(const RationalMatrix3& o) const;

  Rat det() const;
  Rat trace() const;
  RationalMatrix3 inverse() const;  // throws std::domain_error if singular
  int rank() const;
  std::string str() const;
};

RationalMatrix3 operator*(const Rat& s, const RationalMatrix3& m);

// Parses nine comma-separated rationals, row-major.
RationalMatrix3 parse_matrix3(const std::string& s);

// Monic polynomial over Q, coeffs[k] multiplies x^k; leading coeff 1 is
// stored explicitly.
struct RatPoly {
  std::vector<Rat> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat eval(const Rat& x) const;
  RationalMatrix3 eval(const RationalMatrix3& m) const;
  RatPoly derivative() const;
  std::string str() const;
  bool operator==(const RatPoly& o) const { return coeffs == o.coeffs; }
};

// det(xI - m), monic cubic.  Throws std::domain_error when m is singular
// (not an element of GL(3,Q)).
RatPoly char_poly(const RationalMatrix3& m);

struct PolyFactor {
  RatPoly factor;  // monic irreducible over Q
  int multiplicity;
};

// Factorization of a monic cubic into monic irreducibles over Q.  Rational
// roots are found exactly through the rational-root bound on the primitive
// integral rescaling; a quadratic remainder is irreducible iff its
// discriminant is not a rational square.
std::vector<PolyFactor> factor_cubic(const RatPoly& p);

// Multiplicative Jordan decomposition gamma = s * u with s semisimple
// (squarefree minimal polynomial), u unipotent, s and u commuting; both are
// polynomials in gamma, computed by the squarefree-kernel Newton iteration.
struct JordanPair {
  RationalMatrix3 semisimple;
  RationalMatrix3 unipotent;
};
JordanPair jordan_decompose(const RationalMatrix3& m);

RatPoly minimal_polynomial(const RationalMatrix3& m);

enum class OrbitKind { EllipticG, Elliptic21, SplitRegular, TwoEqual, Central };
enum class UnipotentSubtype { None, Tri, Min, Reg };

std::string name(OrbitKind k);
std::string name(UnipotentSubtype s);

struct OrbitClass {
  OrbitKind kind;
  std::vector<std::pair<Rat, int>> eigenvalues;  // rational ones, with multiplicity
  UnipotentSubtype subtype = UnipotentSubtype::None;
  bool ramified = false;
};

// Five-way orbit taxonomy from the characteristic-polynomial factorization:
//   irreducible cubic            -> EllipticG      (unramified)
//   linear x irreducible quad    -> Elliptic21     (unramified)
//   three distinct rational      -> SplitRegular   (unramified)
//   double + simple rational     -> TwoEqual       (ramified)
//   triple rational z            -> Central        (ramified), subtype by
//                                   rank(gamma - zI) in {0,1,2}.
OrbitClass classify(const RationalMatrix3& m);

enum class ProbeResult { Equivalent, Inequivalent, Unknown };

// Orbit equivalence (conjugacy of semisimple parts over Q).  Complete for
// GL(3): within each kind the semisimple class is determined by the
// characteristic polynomial of the semisimple part, so Unknown is never
// returned; search_bound is kept for interface stability and ignored.
ProbeResult conjugacy_probe(const RationalMatrix3& m1, const RationalMatrix3& m2,
                            long search_bound = 0);

}  // namespace gl3tf
