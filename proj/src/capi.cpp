#include "gl3tf.h"

#include <cstring>
#include <fstream>
#include <json.hpp>

#include "core/cones.hpp"
#include "core/hull.hpp"
#include "core/ratmat.hpp"
#include "core/rootdata.hpp"
#include "core/suite.hpp"
#include "core/testfn.hpp"
#include "core/woi.hpp"
#include "core/zeta.hpp"

using nlohmann::json;

struct gl3tf_session {
  gl3tf::SuiteConfig cfg;
  gl3tf::ConstantMode constant_mode = gl3tf::ConstantMode::DropO1;
  int json_indent = 2;
  std::string last_error;
};

struct gl3tf_matrix {
  gl3tf::RationalMatrix3 m;
};

struct gl3tf_testfn {
  gl3tf::TestFunction f;
};

namespace {

std::string dump_with(const json& j, int indent) {
  return indent > 0 ? j.dump(indent) : j.dump();
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
gl3tf_status guarded(gl3tf_session* s, Fn&& fn) {
  if (!s) return GL3TF_ERR_ARGUMENT;
  try {
    return fn();
  } catch (const gl3tf::ToleranceError& e) {
    s->last_error = e.what();
    return GL3TF_ERR_TOLERANCE;
  } catch (const std::invalid_argument& e) {
    s->last_error = e.what();
    return GL3TF_ERR_ARGUMENT;
  } catch (const std::domain_error& e) {
    s->last_error = e.what();
    return GL3TF_ERR_DOMAIN;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return GL3TF_ERR_INTERNAL;
  }
}

std::string rational_json(const gl3tf::Rat& r) { return gl3tf::to_string(r); }

json avector_json(const gl3tf::AVector& v) {
  return json::array({rational_json(v.c[0]), rational_json(v.c[1]), rational_json(v.c[2])});
}

gl3tf::PrimeSet prime_set(const long* primes, int n) {
  std::vector<long> v;
  for (int i = 0; i < n; ++i) v.push_back(primes[i]);
  return gl3tf::PrimeSet::of(std::move(v));
}

}  // namespace

extern "C" {

gl3tf_session* gl3tf_session_new(void) { return new gl3tf_session(); }

void gl3tf_session_free(gl3tf_session* s) { delete s; }

const char* gl3tf_last_error(const gl3tf_session* s) {
  return s ? s->last_error.c_str() : "null session";
}

unsigned long long gl3tf_session_seed(const gl3tf_session* s) { return s ? s->cfg.seed : 0; }

void gl3tf_string_free(char* s) { std::free(s); }

gl3tf_status gl3tf_session_set(gl3tf_session* s, const char* key, const char* value) {
  return guarded(s, [&]() -> gl3tf_status {
    if (!key || !value) throw std::invalid_argument("null key/value");
    std::string k = key, v = value;
    auto num = [&] { return std::stod(v); };
    if (k == "vol_M0") s->cfg.coeff.vol_m0 = num();
    else if (k == "vol_M21") s->cfg.coeff.vol_m21 = num();
    else if (k == "vol_G") s->cfg.coeff.vol_g = num();
    else if (k == "c_Q") s->cfg.coeff.c_q = num();
    else if (k == "C") s->cfg.coeff.constant_c = num();
    else if (k == "precision") s->cfg.precision = num();
    else if (k == "quad_tol") s->cfg.quad.abs_tol = s->cfg.quad.rel_tol = num();
    else if (k == "quad_refine") s->cfg.quad.refine = static_cast<int>(num());
    else if (k == "seed") s->cfg.seed = static_cast<uint64_t>(std::stoull(v));
    else if (k == "samples") s->cfg.samples = std::stol(v);
    else if (k == "hull_specs") s->cfg.hull_specs = std::stol(v);
    else if (k == "json_indent") s->json_indent = static_cast<int>(num());
    else if (k == "ln2_placement") {
      if (v == "outside") s->cfg.coeff.ln2_placement = gl3tf::Ln2Placement::Outside;
      else if (v == "inside") s->cfg.coeff.ln2_placement = gl3tf::Ln2Placement::Inside;
      else throw std::invalid_argument("ln2_placement must be outside|inside");
    } else if (k == "constant_mode") {
      if (v == "drop") s->constant_mode = gl3tf::ConstantMode::DropO1;
      else if (v == "user") s->constant_mode = gl3tf::ConstantMode::UserConstant;
      else throw std::invalid_argument("constant_mode must be drop|user");
    } else {
      throw std::invalid_argument("unknown config key: " + k);
    }
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_session_load_config(gl3tf_session* s, const char* path) {
  return guarded(s, [&]() -> gl3tf_status {
    if (!path) throw std::invalid_argument("null path");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("cannot open config: ") + path);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string t) {
        while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        return t;
      };
      std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
      if (k.empty()) continue;
      gl3tf_status st = gl3tf_session_set(s, k.c_str(), v.c_str());
      if (st != GL3TF_OK) return st;
    }
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_rootdata_json(gl3tf_session* s, char** out_json) {
  return guarded(s, [&]() -> gl3tf_status {
    using namespace gl3tf;
    json out;
    auto [a, b] = simple_roots();
    out["simple_roots"] = {{a.label, avector_json(a.v)}, {b.label, avector_json(b.v)}};
    auto [wa, wb] = dual_weights();
    out["dual_weights"] = {{"varpi_alpha", avector_json(wa)}, {"varpi_beta", avector_json(wb)}};
    json paras;
    for (Parabolic p : kParabolics) {
      json jp;
      jp["rho"] = avector_json(rho(p));
      jp["corank"] = corank(p);
      json dh = json::array();
      for (const AVector& w : delta_hat(p)) dh.push_back(avector_json(w));
      jp["delta_hat"] = dh;
      json df = json::array();
      for (const AVector& r : delta_full(p)) df.push_back(avector_json(r));
      jp["delta"] = df;
      if (p != Parabolic::G) jp["gram_constant"] = gram_constant(p);
      paras[name(p)] = jp;
    }
    out["parabolics"] = paras;
    json wg = json::array();
    for (const WeylElement& w : weyl_group()) wg.push_back(w.str());
    out["weyl_group"] = wg;
    json om;
    for (Parabolic src : {Parabolic::P0, Parabolic::P21, Parabolic::P12}) {
      json row;
      for (Parabolic c : kParabolics)
        row[name(c)] = omega_restricted(src, c).size();
      om[name(src)] = row;
    }
    out["omega_restricted_sizes"] = om;
    *out_json = dup_string(dump_with(out, s->json_indent));
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_gram_constant(gl3tf_session* s, const char* parabolic, double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    *out = gl3tf::gram_constant(gl3tf::parabolic_from_name(parabolic));
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_verify_lemmas(gl3tf_session* s, const char* which, long samples,
                                 unsigned long long seed, char** out_json) {
  return guarded(s, [&]() -> gl3tf_status {
    using namespace gl3tf;
    if (!which) throw std::invalid_argument("null which");
    std::string w = which;
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    std::vector<VerifyReport> reps;
    if (w == "6.3" || w == "all") reps.push_back(verify_sigma_equivalence(samples, seed));
    if (w == "7.1" || w == "all") {
      for (Parabolic p : {Parabolic::P0, Parabolic::P21, Parabolic::P12})
        reps.push_back(verify_truncation_identity(p, samples, seed));
    }
    if (w == "moebius" || w == "all") reps.push_back(verify_parabolic_moebius());
    if (reps.empty()) throw std::invalid_argument("which must be 6.3|7.1|moebius|all");
    json out;
    json arr = json::array();
    bool pass = true;
    for (const VerifyReport& r : reps) {
      json e;
      e["identity"] = r.identity;
      e["samples"] = r.samples;
      if (r.wall_points > 0) e["wall_points"] = r.wall_points;
      e["failures"] = r.failures;
      arr.push_back(e);
      pass = pass && r.pass();
    }
    out["reports"] = arr;
    out["pass"] = pass;
    out["seed"] = seed;
    *out_json = dup_string(dump_with(out, s->json_indent));
    if (!pass) {
      s->last_error = "verification failures recorded in report";
      return GL3TF_ERR_VERIFY;
    }
    return GL3TF_OK;
  });
}

namespace {

gl3tf_status hull_common(const gl3tf::HullSpec& spec, const char* method, double* out) {
  std::string m = method ? method : "direct";
  if (m == "direct") *out = gl3tf::hull_volume_direct(spec);
  else if (m == "limit") *out = gl3tf::hull_volume_limit(spec);
  else throw std::invalid_argument("method must be direct|limit");
  return GL3TF_OK;
}

}  // namespace

gl3tf_status gl3tf_hull_volume(gl3tf_session* s, const double* vertices18, const char* method,
                               double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    if (!vertices18) throw std::invalid_argument("null vertices");
    gl3tf::HullSpec spec;
    for (int i = 0; i < 6; ++i) {
      // Doubles in, exact-rational storage: dyadic rationals are exact.
      gl3tf::AVector v;
      for (int k = 0; k < 3; ++k) {
        mpq_class q(vertices18[3 * i + k]);
        q.canonicalize();
        v.c[k] = q;
      }
      gl3tf::Rat sum = v.coord_sum();
      if (sum != 0) {
        // Project tiny float noise away; reject genuinely non-sum-zero input.
        if (std::abs(gl3tf::to_double(sum)) > 1e-9)
          throw std::invalid_argument("hull vertices must have coordinate sum 0");
        v = v.sum_zero_part();
      }
      spec.vertices[i] = v;
    }
    return hull_common(spec, method, out);
  });
}

gl3tf_status gl3tf_hull_volume_spec(gl3tf_session* s, const char* t_csv, const char* h_family,
                                    const char* method, double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    gl3tf::AVector t = gl3tf::parse_avector(t_csv);
    gl3tf::HullSpec spec =
        gl3tf::HullSpec::from_t_and_h(t, h_family ? std::string(h_family) : std::string());
    return hull_common(spec, method, out);
  });
}

gl3tf_status gl3tf_cm0_weight(gl3tf_session* s, double n1, double n2, double n3, double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    *out = gl3tf::c_m0_weight(n1, n2, n3);
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_interval_weight(gl3tf_session* s, const char* hm, const char* hn_flip,
                                   const char* t, double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    *out = gl3tf::interval_weight_m21(gl3tf::parse_avector(hm), gl3tf::parse_avector(hn_flip),
                                      gl3tf::parse_avector(t));
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_matrix_parse(gl3tf_session* s, const char* csv, gl3tf_matrix** out) {
  return guarded(s, [&]() -> gl3tf_status {
    if (!csv || !out) throw std::invalid_argument("null argument");
    auto m = gl3tf::parse_matrix3(csv);
    *out = new gl3tf_matrix{std::move(m)};
    return GL3TF_OK;
  });
}

void gl3tf_matrix_free(gl3tf_matrix* m) { delete m; }

gl3tf_status gl3tf_orbit_classify(gl3tf_session* s, const gl3tf_matrix* m, char** out_json) {
  return guarded(s, [&]() -> gl3tf_status {
    if (!m) throw std::invalid_argument("null matrix");
    gl3tf::OrbitClass oc = gl3tf::classify(m->m);
    gl3tf::JordanPair jp = gl3tf::jordan_decompose(m->m);
    json out;
    out["kind"] = gl3tf::name(oc.kind);
    out["ramified"] = oc.ramified;
    out["unipotent_subtype"] = gl3tf::name(oc.subtype);
    json ev = json::array();
    for (const auto& [r, mult] : oc.eigenvalues)
      ev.push_back({{"value", rational_json(r)}, {"multiplicity", mult}});
    out["eigenvalues"] = ev;
    out["char_poly"] = gl3tf::char_poly(m->m).str();
    out["jordan"] = {{"semisimple", jp.semisimple.str()}, {"unipotent", jp.unipotent.str()}};
    *out_json = dup_string(dump_with(out, s->json_indent));
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_conjugacy_probe(gl3tf_session* s, const gl3tf_matrix* a, const gl3tf_matrix* b,
                                   long search_bound, int* out) {
  return guarded(s, [&]() -> gl3tf_status {
    if (!a || !b) throw std::invalid_argument("null matrix");
    *out = gl3tf::conjugacy_probe(a->m, b->m, search_bound) == gl3tf::ProbeResult::Equivalent;
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_testfn_gaussian(gl3tf_session* s, const char* center_csv, double sigma,
                                   gl3tf_testfn** out) {
  return guarded(s, [&]() -> gl3tf_status {
    auto center = gl3tf::parse_matrix3(center_csv);
    *out = new gl3tf_testfn{gl3tf::TestFunction::gaussian_frobenius(center, sigma)};
    return GL3TF_OK;
  });
}

void gl3tf_testfn_free(gl3tf_testfn* f) { delete f; }

gl3tf_status gl3tf_woi(gl3tf_session* s, const char* kind, const gl3tf_testfn* f, const char* z,
                       double t1, double t2, double constant, int use_constant, double* out_value,
                       double* out_error) {
  return guarded(s, [&]() -> gl3tf_status {
    using namespace gl3tf;
    if (!kind || !f) throw std::invalid_argument("null argument");
    Rat zq = z ? parse_rational(z) : Rat(1);
    WeightParams wp;
    wp.t1 = t1;
    wp.t2 = t2;
    wp.mode = use_constant ? ConstantMode::UserConstant : s->constant_mode;
    wp.constant = constant;
    std::string k = kind;
    auto dispatch = [&]() -> WoiResult {
      if (k == "jm0") return j_m0(f->f, s->cfg.quad, wp);
      if (k == "jm21") return j_m21(f->f, s->cfg.quad);
      if (k == "jm0T") return j_m0_T(zq, f->f, s->cfg.quad, wp);
      if (k == "jm21T") return j_m21_T(zq, f->f, s->cfg.quad, wp, false);
      if (k == "jm21Tu") return j_m21_T(zq, f->f, s->cfg.quad, wp, true);
      if (k == "jgmin") return j_g_unipotent(zq, UnipotentSubtype::Min, f->f, s->cfg.quad);
      if (k == "jgreg") return j_g_unipotent(zq, UnipotentSubtype::Reg, f->f, s->cfg.quad);
      throw std::invalid_argument("unknown woi kind: " + k);
    };
    try {
      WoiResult r = dispatch();
      *out_value = r.value;
      if (out_error) *out_error = r.error;
    } catch (const ToleranceError& e) {
      // Best-effort value still comes back to the caller.
      *out_value = e.best.value;
      if (out_error) *out_error = e.best.error;
      s->last_error = "quadrature tolerance not met; best estimate attached";
      return GL3TF_ERR_TOLERANCE;
    }
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_zeta_partial(gl3tf_session* s, double svalue, const long* primes, int n,
                                double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    *out = gl3tf::zeta_partial(svalue, prime_set(primes, n), s->cfg.precision);
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_zeta_partial_derivative(gl3tf_session* s, double svalue, const long* primes,
                                           int n, double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    *out = gl3tf::zeta_partial_derivative(svalue, prime_set(primes, n), s->cfg.precision);
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_laurent_at_one(gl3tf_session* s, const long* primes, int n, double out_c[3]) {
  return guarded(s, [&]() -> gl3tf_status {
    gl3tf::ZetaLaurent l = gl3tf::laurent_at_one(prime_set(primes, n));
    out_c[0] = l.c0;
    out_c[1] = l.c1;
    out_c[2] = l.c2;
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_local_log_norm_integral(gl3tf_session* s, long p, int oracle_depth,
                                           char** out_json) {
  return guarded(s, [&]() -> gl3tf_status {
    gl3tf::LocalLogNormIntegral r = gl3tf::local_log_norm_integral(p, oracle_depth);
    json out;
    out["p"] = r.p;
    out["closed_form"] = r.closed_form;
    out["closed_form_expr"] = r.closed_form_expr;
    out["oracle"] = r.enumeration;
    out["oracle_depth"] = r.depth;
    out["difference"] = r.difference;
    *out_json = dup_string(dump_with(out, s->json_indent));
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_coefficients(gl3tf_session* s, const long* primes, int n, char** out_json) {
  return guarded(s, [&]() -> gl3tf_status {
    using namespace gl3tf;
    CoefficientSet cs = assemble_coefficients(prime_set(primes, n), s->cfg.coeff);
    json out;
    out["a_M0_1"] = cs.a_m0_1;
    out["a_M21_1"] = cs.a_m21_1;
    out["a_G_1"] = cs.a_g_1;
    out["a_M21_min"] = cs.a_m21_min;
    out["a_G_min"] = cs.a_g_min;
    out["a_G_reg"] = cs.a_g_reg;
    out["a_G_reg_C_slope"] = cs.a_g_reg_c_slope;
    out["laurent"] = {{"c0", cs.laurent.c0}, {"c1", cs.laurent.c1}, {"c2", cs.laurent.c2}};
    out["zeta_S_2"] = cs.zeta2;
    out["zeta_S_2_derivative"] = cs.zeta2_deriv;
    out["config"] = {
        {"vol_M0", cs.config.vol_m0},
        {"vol_M21", cs.config.vol_m21},
        {"vol_G", cs.config.vol_g},
        {"c_Q", cs.config.c_q},
        {"C", cs.config.constant_c},
        {"ln2_placement",
         cs.config.ln2_placement == Ln2Placement::Outside ? "outside" : "inside"},
    };
    out["provenance"] = {{"volumes", "configured"},
                         {"c_Q", "configured"},
                         {"C", "configured"},
                         {"laurent", "computed (euler-maclaurin + stieltjes)"},
                         {"zeta_S_2", "computed (euler-maclaurin)"}};
    *out_json = dup_string(dump_with(out, s->json_indent));
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_trivial_class_term(gl3tf_session* s, double f_at_z, double vol_g, double* out) {
  return guarded(s, [&]() -> gl3tf_status {
    *out = gl3tf::trivial_class_term(f_at_z, vol_g);
    return GL3TF_OK;
  });
}

gl3tf_status gl3tf_suite(gl3tf_session* s, char** out_json) {
  return guarded(s, [&]() -> gl3tf_status {
    gl3tf::SuiteOutcome outcome = gl3tf::run_suite(s->cfg, nullptr, s->json_indent);
    *out_json = dup_string(outcome.json_text);
    if (!outcome.pass) {
      s->last_error = "one or more acceptance criteria failed";
      return GL3TF_ERR_VERIFY;
    }
    return GL3TF_OK;
  });
}

}  // extern "C"
