#include "core/suite.hpp"

#include <chrono>
#include <cmath>
#include <json.hpp>

#include "core/cones.hpp"
#include "core/eulermac.hpp"
#include "core/hull.hpp"
#include "core/ratmat.hpp"
#include "core/testfn.hpp"
#include "core/woi.hpp"

namespace gl3tf {

namespace {

using nlohmann::json;

struct Criterion {
  int id;
  std::string title;
  bool pass;
  double budget_seconds;  // 0 = none
  json detail;
};

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(splitmix64(seed ^ 0xc0ffee)) {}
  int uniform(int lo, int hi) {  // inclusive
    state_ = splitmix64(state_);
    return lo + static_cast<int>(state_ % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

RationalMatrix3 random_invertible(Rng& rng) {
  for (;;) {
    RationalMatrix3 m;
    for (int i = 0; i < 9; ++i) {
      m.a[i] = Rat(rng.uniform(-4, 4), rng.uniform(1, 3));
      m.a[i].canonicalize();
    }
    if (m.det() != 0) return m;
  }
}

RationalMatrix3 random_unimodular(Rng& rng) {
  RationalMatrix3 g = RationalMatrix3::identity();
  for (int step = 0; step < 8; ++step) {
    int kind = rng.uniform(0, 3);
    int i = rng.uniform(0, 2), j = rng.uniform(0, 2);
    if (i == j) j = (j + 1) % 3;
    if (kind == 3) {  // signed swap keeps det = +-1
      for (int k = 0; k < 3; ++k) std::swap(g.at(i, k), g.at(j, k));
      for (int k = 0; k < 3; ++k) g.at(i, k) = -g.at(i, k);
    } else {
      Rat c(rng.uniform(-2, 2));
      for (int k = 0; k < 3; ++k) g.at(i, k) += c * g.at(j, k);
    }
  }
  return g;
}

bool same_class(const OrbitClass& a, const OrbitClass& b) {
  if (a.kind != b.kind || a.subtype != b.subtype || a.ramified != b.ramified) return false;
  auto key = [](const OrbitClass& c) {
    std::vector<std::pair<std::string, int>> v;
    for (const auto& [r, m] : c.eigenvalues) v.emplace_back(to_string(r), m);
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(a) == key(b);
}

// ----- criteria ------------------------------------------------------------

Criterion c1_sigma_equivalence(const SuiteConfig& cfg) {
  VerifyReport rep = verify_sigma_equivalence(cfg.samples, cfg.seed, true);
  json d;
  d["samples"] = rep.samples;
  d["wall_points"] = rep.wall_points;
  d["failures"] = rep.failures.size();
  bool pass = rep.pass() && rep.samples >= 10000 && rep.wall_points >= 1000;
  return {1, "sigma alternating sum matches its cone characterization", pass, 5.0, d};
}

Criterion c2_truncation_identity(const SuiteConfig& cfg) {
  json d;
  bool pass = true;
  for (Parabolic p : {Parabolic::P0, Parabolic::P21, Parabolic::P12}) {
    VerifyReport rep = verify_truncation_identity(p, cfg.samples, cfg.seed);
    d[name(p)] = {{"samples", rep.samples}, {"failures", rep.failures.size()}};
    pass = pass && rep.pass() && rep.samples >= 10000;
  }
  return {2, "tau-hat-prime truncation identity", pass, 0, d};
}

Criterion c3_moebius(const SuiteConfig&) {
  VerifyReport rep = verify_parabolic_moebius();
  json d;
  d["pairs"] = rep.samples;
  d["failures"] = rep.failures.size();
  return {3, "parabolic alternating-sum identity", rep.pass(), 0, d};
}

Criterion c4_hull(const SuiteConfig& cfg) {
  const double target = 3.0 * std::sqrt(3.0);
  HullSpec hex = HullSpec::orbit_of(AVector::of_ints(1, 0, -1));
  double direct = hull_volume_direct(hex);
  double limit = hull_volume_limit(hex);
  double hex_err_direct = std::abs(direct - target);
  double hex_err_limit = std::abs(limit - target);
  double max_diff = 0.0;
  for (long i = 0; i < cfg.hull_specs; ++i) {
    HullSpec spec = random_orthogonal_spec(cfg.seed, i);
    double dd = hull_volume_direct(spec);
    double ll = hull_volume_limit(spec);
    max_diff = std::max(max_diff, std::abs(dd - ll));
  }
  json d;
  d["hexagon_direct_error"] = hex_err_direct;
  d["hexagon_limit_error"] = hex_err_limit;
  d["random_specs"] = cfg.hull_specs;
  d["max_cross_difference"] = max_diff;
  bool pass = hex_err_direct <= 1e-9 && hex_err_limit <= 1e-9 && max_diff <= 1e-8 &&
              cfg.hull_specs >= 1000;
  return {4, "convex-hull weight cross-oracle", pass, 30.0, d};
}

bool jordan_postconditions(const RationalMatrix3& m) {
  JordanPair jp = jordan_decompose(m);
  if (!(jp.semisimple * jp.unipotent == m)) return false;
  if (!(jp.semisimple * jp.unipotent == jp.unipotent * jp.semisimple)) return false;
  for (const auto& f : factor_cubic(minimal_polynomial(jp.semisimple)))
    if (f.multiplicity != 1) return false;
  RationalMatrix3 n = jp.unipotent - RationalMatrix3::identity();
  RationalMatrix3 zero;
  return n * n * n == zero;
}

struct Labeled {
  RationalMatrix3 m;
  OrbitKind kind;
  UnipotentSubtype subtype;
};

std::vector<Labeled> curated_corpus(uint64_t seed) {
  using RM = RationalMatrix3;
  using OK = OrbitKind;
  using US = UnipotentSubtype;
  std::vector<Labeled> base;
  // EllipticG: irreducible cubics (no rational root by the root bound).
  base.push_back({RM::companion(Rat(-2), Rat(0), Rat(0)), OK::EllipticG, US::None});   // x^3-2
  base.push_back({RM::companion(Rat(-3), Rat(0), Rat(0)), OK::EllipticG, US::None});   // x^3-3
  base.push_back({RM::companion(Rat(1), Rat(1), Rat(0)), OK::EllipticG, US::None});    // x^3+x+1
  base.push_back({RM::companion(Rat(-2), Rat(-2), Rat(0)), OK::EllipticG, US::None});  // x^3-2x-2
  base.push_back({RM::companion(Rat(3), Rat(3), Rat(0)), OK::EllipticG, US::None});    // x^3+3x+3
  // Elliptic21: negative-discriminant quadratic block + rational eigenvalue.
  auto block = [](Rat b, Rat c, Rat r) {
    RM m;
    m.at(0, 1) = -c;
    m.at(1, 0) = 1;
    m.at(1, 1) = -b;
    m.at(2, 2) = r;
    return m;
  };
  base.push_back({block(Rat(0), Rat(1), Rat(2)), OK::Elliptic21, US::None});   // x^2+1
  base.push_back({block(Rat(-1), Rat(1), Rat(3)), OK::Elliptic21, US::None});  // x^2-x+1
  base.push_back({block(Rat(0), Rat(2), Rat(1)), OK::Elliptic21, US::None});   // x^2+2
  base.push_back({block(Rat(-2), Rat(3), Rat(5)), OK::Elliptic21, US::None});  // x^2-2x+3
  base.push_back({block(Rat(1), Rat(5), Rat(-2)), OK::Elliptic21, US::None});  // x^2+x+5
  // SplitRegular.
  base.push_back({RM::diag(Rat(1), Rat(2), Rat(3)), OK::SplitRegular, US::None});
  base.push_back({RM::diag(Rat(-1), Rat(2), Rat(5)), OK::SplitRegular, US::None});
  base.push_back({RM::diag(Rat(1, 2), Rat(3), Rat(-4)), OK::SplitRegular, US::None});
  base.push_back({RM::companion(Rat(-6), Rat(11), Rat(-6)), OK::SplitRegular, US::None});
  base.push_back({RM::diag(Rat(7), Rat(-7), Rat(1)), OK::SplitRegular, US::None});
  // TwoEqual, both semisimple and not.
  base.push_back({RM::diag(Rat(1), Rat(1), Rat(2)), OK::TwoEqual, US::None});
  base.push_back({RM::diag(Rat(3), Rat(-1), Rat(3)), OK::TwoEqual, US::None});
  base.push_back({RM::diag(Rat(1, 2), Rat(1, 2), Rat(5)), OK::TwoEqual, US::None});
  {
    RM m = RM::diag(Rat(1), Rat(1), Rat(2));
    m.at(0, 1) = 1;  // non-diagonalizable double eigenvalue
    base.push_back({m, OK::TwoEqual, US::None});
  }
  {
    RM m = RM::diag(Rat(-2), Rat(5), Rat(5));
    m.at(1, 2) = 3;
    base.push_back({m, OK::TwoEqual, US::None});
  }
  // Central with the three unipotent subtypes.
  base.push_back({RM::scalar(Rat(2)), OK::Central, US::Tri});
  base.push_back({RM::scalar(Rat(-3)), OK::Central, US::Tri});
  base.push_back({RM::scalar(Rat(1, 2)), OK::Central, US::Tri});
  base.push_back({RM::z_times_unipotent(Rat(2), Rat(0), Rat(1), Rat(0)), OK::Central, US::Min});
  base.push_back({RM::z_times_unipotent(Rat(1), Rat(1), Rat(0), Rat(0)), OK::Central, US::Min});
  base.push_back({RM::z_times_unipotent(Rat(-1), Rat(0), Rat(5), Rat(0)), OK::Central, US::Min});
  base.push_back({RM::z_times_unipotent(Rat(3), Rat(1), Rat(0), Rat(1)), OK::Central, US::Reg});
  base.push_back({RM::z_times_unipotent(Rat(1), Rat(1), Rat(1), Rat(1)), OK::Central, US::Reg});
  base.push_back({RM::z_times_unipotent(Rat(1, 3), Rat(2), Rat(0), Rat(-1)), OK::Central, US::Reg});

  // Conjugated copies: the labels are conjugation invariants.
  Rng rng(seed ^ 0x5151);
  std::vector<Labeled> corpus = base;
  size_t i = 0;
  while (corpus.size() < 50) {
    RationalMatrix3 g = random_unimodular(rng);
    const Labeled& src = base[i % base.size()];
    corpus.push_back({g * src.m * g.inverse(), src.kind, src.subtype});
    ++i;
  }
  return corpus;
}

Criterion c5_orbit(const SuiteConfig& cfg) {
  Rng rng(cfg.seed ^ 0x0b17);
  long conj_fail = 0, jordan_fail = 0;
  for (long t = 0; t < cfg.conjugation_trials; ++t) {
    RationalMatrix3 m = random_invertible(rng);
    RationalMatrix3 g = random_unimodular(rng);
    OrbitClass a = classify(m);
    OrbitClass b = classify(g * m * g.inverse());
    if (!same_class(a, b)) ++conj_fail;
    if (!jordan_postconditions(m)) ++jordan_fail;
  }
  long corpus_fail = 0;
  auto corpus = curated_corpus(cfg.seed);
  for (const Labeled& l : corpus) {
    OrbitClass c = classify(l.m);
    if (c.kind != l.kind || c.subtype != l.subtype) ++corpus_fail;
    if (!jordan_postconditions(l.m)) ++jordan_fail;
  }
  json d;
  d["conjugation_trials"] = cfg.conjugation_trials;
  d["conjugation_failures"] = conj_fail;
  d["jordan_failures"] = jordan_fail;
  d["corpus_size"] = corpus.size();
  d["corpus_failures"] = corpus_fail;
  bool pass = conj_fail == 0 && jordan_fail == 0 && corpus_fail == 0 && corpus.size() >= 50 &&
              cfg.conjugation_trials >= 500;
  return {5, "orbit classifier invariance and taxonomy", pass, 0, d};
}

Criterion c6_local_integral(const SuiteConfig&) {
  json d;
  bool pass = true;
  for (long p : {2L, 3L, 5L, 7L}) {
    LocalLogNormIntegral r = local_log_norm_integral(p, 10);
    d["p" + std::to_string(p)] = {{"closed_form", r.closed_form},
                                  {"enumeration", r.enumeration},
                                  {"difference", r.difference}};
    pass = pass && r.difference <= 1e-5;
  }
  double p2 = local_log_norm_integral(2, 10).closed_form;
  double p2_err = std::abs(p2 - (-std::log(2.0) / 3.0));
  d["p2_formula_error"] = p2_err;
  pass = pass && p2_err <= 1e-9;
  return {6, "p-adic log-norm integral vs enumeration", pass, 0, d};
}

Criterion c7_zeta(const SuiteConfig&) {
  PrimeSet inf = PrimeSet::of({});
  double z2 = zeta_partial(2.0, inf);
  double z2_err = std::abs(z2 - M_PI * M_PI / 6.0);
  ZetaLaurent series = laurent_at_one(inf);
  ZetaLaurent fd = laurent_fd_oracle(inf);
  const double euler_gamma = 0.57721566490153286061;
  double c1_err = std::abs(series.c1 - euler_gamma);
  double c1_route_diff = std::abs(series.c1 - fd.c1);
  bool euler_ok = true;
  json factors;
  for (long p : {2L, 3L, 5L}) {
    for (double s : {2.0, 3.0}) {
      double with_p = zeta_partial(s, PrimeSet::of({p}));
      double composed = zeta_partial(s, inf) * (1.0 - std::pow(static_cast<double>(p), -s));
      double diff = std::abs(with_p - composed);
      factors["p" + std::to_string(p) + "_s" + std::to_string(static_cast<int>(s))] = diff;
      euler_ok = euler_ok && diff <= 1e-13;
    }
  }
  json d;
  d["zeta2_error"] = z2_err;
  d["c1_vs_gamma"] = c1_err;
  d["c1_route_difference"] = c1_route_diff;
  d["euler_factor_differences"] = factors;
  bool pass = z2_err <= 1e-10 && c1_err <= 1e-9 && c1_route_diff <= 1e-9 && euler_ok;
  return {7, "partial zeta and Laurent data", pass, 0, d};
}

Criterion c8_coefficients(const SuiteConfig&) {
  CoefficientConfig cc;  // volumes = c_Q = 1, C = 0
  PrimeSet inf = PrimeSet::of({});
  CoefficientSet cs = assemble_coefficients(inf, cc);
  // Independently composed targets.
  const double euler_gamma = 0.57721566490153286061;
  const double zeta2_deriv = -0.93754825431584375370;
  const double zeta2 = M_PI * M_PI / 6.0;
  const double ln2 = std::log(2.0);
  double m21_err = std::abs(cs.a_m21_min - (euler_gamma - ln2) / 2.0);
  double gmin_err = std::abs(cs.a_g_min - (zeta2_deriv / zeta2 - ln2));
  bool slope_exact = cs.a_g_reg_c_slope == 1.0 / 3.0;
  CoefficientConfig cc3 = cc;
  cc3.constant_c = 3.0;
  double fd_slope = (assemble_coefficients(inf, cc3).a_g_reg - cs.a_g_reg) / 3.0;
  double slope_fd_err = std::abs(fd_slope - cs.a_g_reg_c_slope);
  json d;
  d["a_m21_min_error"] = m21_err;
  d["a_g_min_error"] = gmin_err;
  d["c_slope_exact_third"] = slope_exact;
  d["c_slope_fd_error"] = slope_fd_err;
  bool pass = m21_err <= 1e-9 && gmin_err <= 1e-9 && slope_exact && slope_fd_err <= 1e-12;
  return {8, "unipotent coefficient assembly", pass, 0, d};
}

Criterion c9_woi(const SuiteConfig& cfg) {
  TestFunction f = TestFunction::gaussian_frobenius(RationalMatrix3::identity(), 1.0);
  QuadratureSpec spec = cfg.quad;
  QuadratureSpec fine = spec;
  fine.refine = spec.refine + 1;
  WeightParams w0;            // T = 0, DropO1
  WeightParams wt;
  wt.t1 = 0.5;
  wt.t2 = 0.25;
  const Rat one(1);

  json d;
  bool pass = true;
  auto selfconv = [&](const char* key, auto&& call) {
    double coarse = call(spec).value;
    double refined = call(fine).value;
    double diff = std::abs(coarse - refined);
    d[key] = {{"value", refined}, {"refinement_delta", diff}};
    pass = pass && diff < 1e-6;
    return refined;
  };
  selfconv("j_m0", [&](const QuadratureSpec& q) { return j_m0(f, q, w0); });
  selfconv("j_m21", [&](const QuadratureSpec& q) { return j_m21(f, q); });
  selfconv("j_m0_T", [&](const QuadratureSpec& q) { return j_m0_T(one, f, q, wt); });
  selfconv("j_m21_T", [&](const QuadratureSpec& q) { return j_m21_T(one, f, q, wt, false); });
  selfconv("j_m21_T_u", [&](const QuadratureSpec& q) { return j_m21_T(one, f, q, wt, true); });

  QuadratureSpec tight = spec;
  tight.abs_tol = 1e-9;
  double gmin = j_g_unipotent(one, UnipotentSubtype::Min, f, tight).value;
  double greg = j_g_unipotent(one, UnipotentSubtype::Reg, f, tight).value;
  double gmin_err = std::abs(gmin - 2.0 * M_PI);
  double greg_err = std::abs(greg - std::pow(2.0 * M_PI, 1.5));
  d["j_g_min_error"] = gmin_err;
  d["j_g_reg_error"] = greg_err;
  pass = pass && gmin_err <= 1e-8 && greg_err <= 1e-8;

  // T-polynomial structure of j_m0_T: least-squares quadratic over a 3x3
  // grid of T values, coefficients against (-3/2, -3/2, 6) * integral of f.
  QuadratureSpec fitspec = spec;
  fitspec.abs_tol = 1e-8;
  std::vector<std::array<double, 2>> tpts;
  for (double t1 : {0.0, 0.5, 1.0})
    for (double t2 : {0.0, 0.5, 1.0}) tpts.push_back({t1, t2});
  std::vector<double> vals;
  for (auto [t1, t2] : tpts) {
    WeightParams wp;
    wp.t1 = t1;
    wp.t2 = t2;
    vals.push_back(j_m0_T(one, f, fitspec, wp).value);
  }
  // Fit a0 + a1 T1 + a2 T2 + a3 T1^2 + a4 T2^2 + a5 T1 T2.
  double ata[6][6] = {};
  double atb[6] = {};
  auto basis = [](double t1, double t2, double* row) {
    row[0] = 1;
    row[1] = t1;
    row[2] = t2;
    row[3] = t1 * t1;
    row[4] = t2 * t2;
    row[5] = t1 * t2;
  };
  for (size_t i = 0; i < tpts.size(); ++i) {
    double row[6];
    basis(tpts[i][0], tpts[i][1], row);
    for (int r = 0; r < 6; ++r) {
      atb[r] += row[r] * vals[i];
      for (int c = 0; c < 6; ++c) ata[r][c] += row[r] * row[c];
    }
  }
  double coef[6];
  {  // gaussian elimination with partial pivoting
    double m[6][7];
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) m[r][c] = ata[r][c];
      m[r][6] = atb[r];
    }
    for (int c = 0; c < 6; ++c) {
      int piv = c;
      for (int r = c + 1; r < 6; ++r)
        if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
      for (int k = 0; k < 7; ++k) std::swap(m[c][k], m[piv][k]);
      for (int r = 0; r < 6; ++r) {
        if (r == c) continue;
        double fpiv = m[r][c] / m[c][c];
        for (int k = c; k < 7; ++k) m[r][k] -= fpiv * m[c][k];
      }
    }
    for (int r = 0; r < 6; ++r) coef[r] = m[r][6] / m[r][r];
  }
  double residual = 0;
  for (size_t i = 0; i < tpts.size(); ++i) {
    double row[6], model = 0;
    basis(tpts[i][0], tpts[i][1], row);
    for (int r = 0; r < 6; ++r) model += row[r] * coef[r];
    residual = std::max(residual, std::abs(model - vals[i]));
  }
  double intf = greg;  // integral of f over N0 is the Reg class integral
  double e_t1sq = std::abs(coef[3] - (-1.5) * intf);
  double e_t2sq = std::abs(coef[4] - (-1.5) * intf);
  double e_t1t2 = std::abs(coef[5] - 6.0 * intf);
  d["t_fit"] = {{"residual", residual},
                {"t1sq_error", e_t1sq},
                {"t2sq_error", e_t2sq},
                {"t1t2_error", e_t1t2}};
  pass = pass && residual < 1e-6 && e_t1sq <= 1e-4 && e_t2sq <= 1e-4 && e_t1t2 <= 1e-4;
  return {9, "weighted orbital integrals", pass, 120.0, d};
}

std::vector<Criterion> run_battery(const SuiteConfig& cfg, std::string* timing_log) {
  std::vector<Criterion> out;
  auto timed = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Criterion c = fn(cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) c.pass = false;
    if (timing_log)
      *timing_log += "criterion " + std::to_string(c.id) + ": " + std::to_string(secs) + " s\n";
    out.push_back(std::move(c));
  };
  timed(c1_sigma_equivalence);
  timed(c2_truncation_identity);
  timed(c3_moebius);
  timed(c4_hull);
  timed(c5_orbit);
  timed(c6_local_integral);
  timed(c7_zeta);
  timed(c8_coefficients);
  timed(c9_woi);
  return out;
}

json battery_json(const std::vector<Criterion>& crits) {
  json arr = json::array();
  for (const Criterion& c : crits) {
    json e;
    e["id"] = c.id;
    e["title"] = c.title;
    e["pass"] = c.pass;
    if (c.budget_seconds > 0) e["runtime_budget_seconds"] = c.budget_seconds;
    e["detail"] = c.detail;
    arr.push_back(e);
  }
  return arr;
}

}  // namespace

SuiteOutcome run_suite(const SuiteConfig& cfg, std::string* timing_log, int json_indent) {
  auto pass_a = run_battery(cfg, timing_log);
  auto pass_b = run_battery(cfg, nullptr);
  json ja = battery_json(pass_a), jb = battery_json(pass_b);
  bool identical = ja.dump() == jb.dump();

  json crit10;
  crit10["id"] = 10;
  crit10["title"] = "determinism: repeated run byte-identical";
  crit10["pass"] = identical;
  crit10["detail"] = {{"reruns", 2}, {"identical", identical}};
  ja.push_back(crit10);

  bool all = identical;
  for (const Criterion& c : pass_a) all = all && c.pass;

  json report;
  report["criteria"] = ja;
  report["pass"] = all;
  report["config"] = {
      {"C", cfg.coeff.constant_c},
      {"c_Q", cfg.coeff.c_q},
      {"hull_specs", cfg.hull_specs},
      {"ln2_placement", cfg.coeff.ln2_placement == Ln2Placement::Outside ? "outside" : "inside"},
      {"precision", cfg.precision},
      {"quad_abs_tol", cfg.quad.abs_tol},
      {"samples", cfg.samples},
      {"seed", cfg.seed},
      {"vol_G", cfg.coeff.vol_g},
      {"vol_M0", cfg.coeff.vol_m0},
      {"vol_M21", cfg.coeff.vol_m21},
  };
  report["provenance"] = {{"volumes", "configured"},
                          {"c_Q", "configured"},
                          {"C", "configured"},
                          {"zeta_data", "computed (euler-maclaurin)"}};
  SuiteOutcome out;
  out.pass = all;
  out.json_text = json_indent > 0 ? report.dump(json_indent) : report.dump();
  return out;
}

}  // namespace gl3tf
