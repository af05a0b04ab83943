#include "core/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/eulermac.hpp"

namespace gl3tf {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void validate_precision(double precision) {
  if (!(precision > 0) || precision < 1e-14)
    throw std::invalid_argument("precision must be in [1e-14, inf)");
}

}  // namespace

PrimeSet PrimeSet::parse(const std::string& csv) {
  std::vector<long> primes;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    primes.push_back(std::stol(cur));
    cur.clear();
  };
  for (char ch : csv) {
    if (ch == ',') flush();
    else if (!isspace(static_cast<unsigned char>(ch))) cur += ch;
  }
  flush();
  return of(std::move(primes));
}

PrimeSet PrimeSet::of(std::vector<long> primes) {
  std::sort(primes.begin(), primes.end());
  for (size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      throw std::invalid_argument("not prime: " + std::to_string(primes[i]));
    if (i > 0 && primes[i] == primes[i - 1])
      throw std::invalid_argument("duplicate prime: " + std::to_string(primes[i]));
  }
  return PrimeSet{std::move(primes)};
}

std::string PrimeSet::str() const {
  std::string s = "{inf";
  for (long p : finite) s += "," + std::to_string(p);
  return s + "}";
}

double zeta_partial(double s, const PrimeSet& s_set, double precision) {
  validate_precision(precision);
  if (s == 1.0) throw std::domain_error("zeta_partial: pole at s = 1");
  double v = zeta_em(s, precision);
  for (long p : s_set.finite) v *= 1.0 - std::pow(static_cast<double>(p), -s);
  return v;
}

double zeta_partial_derivative(double s, const PrimeSet& s_set, double precision) {
  validate_precision(precision);
  if (s == 1.0) throw std::domain_error("zeta_partial_derivative: pole at s = 1");
  // Product rule over zeta and the removed Euler factors.
  double z = zeta_em(s, precision);
  double zp = zeta_em_derivative(s, precision);
  double prod = 1.0, logsum = 0.0;
  for (long p : s_set.finite) {
    double ps = std::pow(static_cast<double>(p), -s);
    prod *= 1.0 - ps;
    logsum += std::log(static_cast<double>(p)) * ps / (1.0 - ps);
  }
  // d/ds prod (1 - p^{-s}) = prod * sum ln(p) p^{-s} / (1 - p^{-s}).
  return zp * prod + z * prod * logsum;
}

ZetaLaurent laurent_at_one(const PrimeSet& s_set) {
  // (s-1) L^S(s) = [(s-1) zeta(s)] * E(s), E(s) = prod (1 - p^{-s}).
  // (s-1) zeta(s) = 1 + g0 (s-1) - g1 (s-1)^2 + ...
  const double g0 = stieltjes_gamma0();
  const double g1 = stieltjes_gamma1();
  double e = 1.0, dlog = 0.0, d2log = 0.0;
  for (long pl : s_set.finite) {
    double p = static_cast<double>(pl);
    double lp = std::log(p);
    e *= 1.0 - 1.0 / p;
    dlog += lp / (p - 1.0);
    d2log += -lp * lp * p / ((p - 1.0) * (p - 1.0));
  }
  double ep = e * dlog;                    // E'(1)
  double epp = e * (dlog * dlog + d2log);  // E''(1)
  ZetaLaurent out;
  out.c0 = e;
  out.c1 = g0 * e + ep;
  out.c2 = -g1 * e + g0 * ep + 0.5 * epp;
  return out;
}

ZetaLaurent laurent_fd_oracle(const PrimeSet& s_set, double h0) {
  if (!(h0 > 0) || h0 >= 0.5) throw std::invalid_argument("laurent_fd_oracle: bad step");
  auto g = [&](double s) { return (s - 1.0) * zeta_partial(s, s_set, 1e-14); };
  double h[3] = {h0, h0 / 2, h0 / 4};
  double even[3], odd[3];
  for (int i = 0; i < 3; ++i) {
    double gp = g(1.0 + h[i]), gm = g(1.0 - h[i]);
    even[i] = 0.5 * (gp + gm);
    odd[i] = 0.5 * (gp - gm) / h[i];
  }
  // even(h) = c0 + c2 h^2 + c4 h^4; odd(h) = c1 + c3 h^2 + c5 h^4.
  // Solve the 3x3 Vandermonde in h^2 for both stencils.
  double x[3] = {h[0] * h[0], h[1] * h[1], h[2] * h[2]};
  auto solve3 = [&](const double* y, double out[3]) {
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
      m[i][0] = 1.0;
      m[i][1] = x[i];
      m[i][2] = x[i] * x[i];
      m[i][3] = y[i];
    }
    for (int c = 0; c < 3; ++c) {
      int piv = c;
      for (int r = c + 1; r < 3; ++r)
        if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
      std::swap(m[c], m[piv]);
      for (int r = 0; r < 3; ++r) {
        if (r == c) continue;
        double f = m[r][c] / m[c][c];
        for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
      }
    }
    for (int i = 0; i < 3; ++i) out[i] = m[i][3] / m[i][i];
  };
  double ce[3], co[3];
  solve3(even, ce);
  solve3(odd, co);
  ZetaLaurent out;
  out.c0 = ce[0];
  out.c1 = co[0];
  out.c2 = ce[1];
  return out;
}

double local_log_norm_enumeration(long p, int depth) {
  // Pairs in (Z_p)^2 grouped by the minimum valuation j: measure
  // p^{-2j}(1 - p^{-2}) and max-norm p^{-j}; classes congruent to (0,0)
  // mod p^depth keep the truncated value.
  const double lp = std::log(static_cast<double>(p));
  const double q2 = 1.0 / (static_cast<double>(p) * p);
  double sum = 0.0, mass = 1.0;
  for (int j = 0; j < depth; ++j) {
    sum += -j * lp * mass * (1.0 - q2);
    mass *= q2;
  }
  sum += -depth * lp * mass;
  return sum;
}

LocalLogNormIntegral local_log_norm_integral(long p, int oracle_depth) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (oracle_depth < 1) throw std::invalid_argument("oracle depth must be >= 1");
  LocalLogNormIntegral r;
  r.p = p;
  r.depth = oracle_depth;
  r.closed_form = -std::log(static_cast<double>(p)) / (static_cast<double>(p) * p - 1.0);
  r.closed_form_expr = "-log(" + std::to_string(p) + ")/(" + std::to_string(p * p - 1) + ")";
  r.enumeration = local_log_norm_enumeration(p, oracle_depth);
  r.difference = std::abs(r.closed_form - r.enumeration);
  return r;
}

CoefficientSet assemble_coefficients(const PrimeSet& s_set, const CoefficientConfig& config) {
  if (!(config.vol_m0 > 0) || !(config.vol_m21 > 0) || !(config.vol_g > 0) || !(config.c_q > 0))
    throw std::invalid_argument("volumes and c_Q must be positive");
  CoefficientSet out;
  out.config = config;
  out.a_m0_1 = config.vol_m0;
  out.a_m21_1 = config.vol_m21;
  out.a_g_1 = config.vol_g;
  out.laurent = laurent_at_one(s_set);
  out.zeta2 = zeta_partial(2.0, s_set);
  out.zeta2_deriv = zeta_partial_derivative(2.0, s_set);

  const double ln2 = std::log(2.0);
  const double c_q_s = config.c_q * out.laurent.c0;
  out.a_m21_min = config.vol_m0 / (2.0 * config.c_q) * (out.laurent.c1 - c_q_s * ln2);
  double ratio = out.zeta2_deriv / out.zeta2;
  out.a_g_min = (config.ln2_placement == Ln2Placement::Outside)
                    ? config.vol_m21 * ratio - ln2
                    : config.vol_m21 * (ratio - ln2);
  out.a_g_reg_c_slope = config.vol_m0 / (3.0 * config.c_q * config.c_q);
  out.a_g_reg = out.a_g_reg_c_slope *
                (out.laurent.c1 * out.laurent.c1 + out.laurent.c2 * c_q_s + config.constant_c);
  return out;
}

double trivial_class_term(double f_value_at_z, double vol_g) { return vol_g * f_value_at_z; }

}  // namespace gl3tf
