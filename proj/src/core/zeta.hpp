#pragma once

#include <string>
#include <vector>

#include "core/rational.hpp"

namespace gl3tf {

// Finite set of places: the archimedean one plus distinct finite primes.
struct PrimeSet {
  std::vector<long> finite;  // sorted, distinct, each prime

  static PrimeSet parse(const std::string& csv);  // "2,3,5"; "" = {infinity}
  static PrimeSet of(std::vector<long> primes);
  std::string str() const;
};

// zeta(s) * prod_{p in S} (1 - p^{-s}): the partial zeta with the Euler
// factors at S removed.  Real s > 0, s != 1; throws at the pole.
double zeta_partial(double s, const PrimeSet& s_set, double precision = 1e-12);
double zeta_partial_derivative(double s, const PrimeSet& s_set, double precision = 1e-12);

// Laurent data of (s-1) L^S(s) at s = 1:
//   c0 = residue of L^S at 1, c1 = lim d/ds (s-1)L^S, c2 = 1/2 lim d^2/ds^2.
struct ZetaLaurent {
  double c0 = 0, c1 = 0, c2 = 0;
};
ZetaLaurent laurent_at_one(const PrimeSet& s_set);

// Independent route to the same Laurent data: even/odd finite-difference
// stencils of (s-1) L^S(s) at s = 1 +- h over a Richardson ladder h, h/2,
// h/4.  Shares only the point evaluations with laurent_at_one.
ZetaLaurent laurent_fd_oracle(const PrimeSet& s_set, double h0 = 5e-3);

// Integral over the p-adic unit square of the log of the max-norm:
// closed form -ln(p) / (p^2 - 1), with a residue-class enumeration companion.
struct LocalLogNormIntegral {
  long p = 2;
  double closed_form = 0;
  std::string closed_form_expr;  // "-log(p)/(p^2-1)" with p substituted
  double enumeration = 0;        // truncated at the requested depth
  int depth = 0;
  double difference = 0;
};
LocalLogNormIntegral local_log_norm_integral(long p, int oracle_depth = 10);

// Valuation-counted enumeration sum at depth k (exposed for the oracle).
double local_log_norm_enumeration(long p, int depth);

enum class Ln2Placement { Outside, Inside };

struct CoefficientConfig {
  double vol_m0 = 1.0;
  double vol_m21 = 1.0;
  double vol_g = 1.0;
  double c_q = 1.0;  // vol(Q \ A^1); measure normalization, not computed here
  double constant_c = 0.0;
  Ln2Placement ln2_placement = Ln2Placement::Outside;
};

// The unipotent-class coefficients built from partial zeta data:
//   a_m21_min = vol_M0 / (2 c_Q) * (c1 - c_Q^S ln 2)
//   a_g_min   = vol_M21 * zeta'^S(2)/zeta^S(2) - ln 2        (Outside)
//             = vol_M21 * (zeta'^S(2)/zeta^S(2) - ln 2)      (Inside)
//   a_g_reg   = vol_M0 / (3 c_Q^2) * (c1^2 + c2 c_Q^S + C)
// with c_Q^S = c_Q * c0.
struct CoefficientSet {
  double a_m0_1 = 1, a_m21_1 = 1, a_g_1 = 1;  // configured volumes
  double a_m21_min = 0;
  double a_g_min = 0;
  double a_g_reg = 0;
  double a_g_reg_c_slope = 0;  // d a_g_reg / d C = vol_M0 / (3 c_Q^2)
  ZetaLaurent laurent;
  double zeta2 = 0, zeta2_deriv = 0;
  CoefficientConfig config;
};
CoefficientSet assemble_coefficients(const PrimeSet& s_set, const CoefficientConfig& config);

// vol_G * f(z).
double trivial_class_term(double f_value_at_z, double vol_g);

}  // namespace gl3tf
