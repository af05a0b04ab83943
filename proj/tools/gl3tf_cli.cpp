// Command-line front end for the gl3tf shared library.  Everything goes
// through the public C API; output is JSON on stdout.
//
// Exit codes: 0 ok, 1 domain error, 2 usage/parse error, 3 verification or
// acceptance failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "gl3tf.h"

using nlohmann::json;

namespace {

struct SessionDeleter {
  void operator()(gl3tf_session* s) const { gl3tf_session_free(s); }
};
using Session = std::unique_ptr<gl3tf_session, SessionDeleter>;

struct StringOut {
  char* p = nullptr;
  ~StringOut() { gl3tf_string_free(p); }
};

int status_to_exit(gl3tf_status st) {
  switch (st) {
    case GL3TF_OK: return 0;
    case GL3TF_ERR_ARGUMENT: return 2;
    case GL3TF_ERR_VERIFY: return 3;
    default: return 1;
  }
}

int fail(const Session& s, gl3tf_status st) {
  std::cerr << "error: " << gl3tf_last_error(s.get()) << "\n";
  return status_to_exit(st);
}

std::vector<long> parse_primes(const std::string& csv) {
  std::vector<long> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stol(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::stol(cur));
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const json& j, int indent) {
  std::cout << (indent > 0 ? j.dump(indent) : j.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric-side computations for the GL(3) trace formula"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  int json_indent = 2;
  unsigned long long seed = 42;
  app.add_option("--config", config_path, "key=value configuration file");
  auto* indent_opt = app.add_option("--json-indent", json_indent, "JSON indent (0 = compact)");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed for sampling commands");

  // rootdata dump
  auto* rootdata = app.add_subcommand("rootdata", "root and parabolic data");
  rootdata->add_subcommand("dump", "dump roots, weights, rho, Weyl group as JSON");

  // verify lemmas
  auto* verify = app.add_subcommand("verify", "machine verification of identities");
  auto* lemmas = verify->add_subcommand("lemmas", "cone-indicator identities");
  std::string which = "all";
  long samples = 10000;
  lemmas->add_option("--which", which, "6.3|7.1|moebius|all")->capture_default_str();
  lemmas->add_option("--samples", samples, "sample count")->capture_default_str();

  // weight hull / cm0 / interval
  auto* weight = app.add_subcommand("weight", "convex-hull weight functions");
  auto* hull = weight->add_subcommand("hull", "hull volume from (T, H) data");
  std::string hull_t, hull_h, hull_method = "direct";
  hull->add_option("--T", hull_t, "truncation point, three rationals a,b,c")->required();
  hull->add_option("--H", hull_h, "per-chamber H data '123:a,b,c;213:...'");
  hull->add_option("--method", hull_method, "direct|limit")->capture_default_str();
  auto* cm0 = weight->add_subcommand("cm0", "norm-expression weight c_{M0}(n)");
  std::vector<double> cm0_n;
  cm0->add_option("--n", cm0_n, "n1,n2,n3")->delimiter(',')->expected(3)->required();
  auto* interval = weight->add_subcommand("interval", "interval weight for the M21 hull");
  std::string int_hm = "0,0,0", int_hn = "0,0,0", int_t = "0,0,0";
  interval->add_option("--Hm", int_hm, "H0(m), three rationals")->capture_default_str();
  interval->add_option("--Hnflip", int_hn, "H0(w_s n), three rationals")->capture_default_str();
  interval->add_option("--T", int_t, "truncation point")->capture_default_str();

  // orbit classify
  auto* orbit = app.add_subcommand("orbit", "orbit classification of GL(3,Q) elements");
  auto* classify = orbit->add_subcommand("classify", "classify one matrix or a batch file");
  std::string matrix_csv, batch_path;
  classify->add_option("--matrix", matrix_csv, "nine rationals, row-major");
  classify->add_option("--file", batch_path, "batch mode: one matrix per line");

  // woi
  auto* woi = app.add_subcommand("woi", "archimedean weighted orbital integrals");
  std::string woi_kind, woi_z = "1";
  double woi_sigma = 1.0, woi_t1 = 0.0, woi_t2 = 0.0, woi_tol = 1e-8, woi_c = 0.0;
  bool woi_use_c = false;
  woi->add_option("kind", woi_kind, "jm0|jm21|jm0T|jm21T|jm21Tu|jgmin|jgreg")->required();
  woi->add_option("--z", woi_z, "central eigenvalue (rational)")->capture_default_str();
  woi->add_option("--sigma", woi_sigma, "Gaussian width")->capture_default_str();
  woi->add_option("--T1", woi_t1, "truncation T1")->capture_default_str();
  woi->add_option("--T2", woi_t2, "truncation T2")->capture_default_str();
  auto* tol_opt = woi->add_option("--tol", woi_tol, "quadrature tolerance")->capture_default_str();
  auto* copt = woi->add_option("--constant", woi_c, "additive constant (default: dropped)");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "partial zeta values");
  double zeta_s = 2.0;
  std::string zeta_primes;
  bool zeta_deriv = false;
  zeta->add_option("--s", zeta_s, "evaluation point (real, != 1)")->capture_default_str();
  zeta->add_option("--S", zeta_primes, "finite primes of S, e.g. 2,3");
  zeta->add_flag("--derivative", zeta_deriv, "d/ds of the partial zeta");

  // coeff
  auto* coeff = app.add_subcommand("coeff", "unipotent coefficients from partial zeta data");
  std::string coeff_primes;
  double prec = 1e-10, vol_m0 = 1, vol_m21 = 1, vol_g = 1, c_q = 1, big_c = 0;
  std::string ln2_placement = "outside";
  coeff->add_option("--S", coeff_primes, "finite primes of S");
  std::vector<std::pair<CLI::Option*, std::function<std::string()>>> coeff_sets;
  auto coeff_opt = [&](const char* flag, auto& var, const char* key, const char* help) {
    CLI::Option* o = coeff->add_option(flag, var, help)->capture_default_str();
    coeff_sets.emplace_back(o, [key, &var] {
      return std::string(key) + "=" + fmt(var);
    });
    return o;
  };
  coeff_opt("--prec", prec, "precision", "target precision");
  coeff_opt("--volM0", vol_m0, "vol_M0", "vol(M0(Q)\\M0(A)^1)");
  coeff_opt("--volM21", vol_m21, "vol_M21", "vol(M21(Q)\\M21(A)^1)");
  coeff_opt("--volG", vol_g, "vol_G", "vol(G(Q)\\G(A)^1)");
  coeff_opt("--cQ", c_q, "c_Q", "vol(Q\\A^1)");
  coeff_opt("--C", big_c, "C", "undetermined constant C");
  auto* ln2_opt =
      coeff->add_option("--ln2-placement", ln2_placement, "outside|inside")->capture_default_str();

  // locint
  auto* locint = app.add_subcommand("locint", "p-adic log-norm integral");
  long loc_p = 2;
  int loc_depth = 10;
  locint->add_option("--p", loc_p, "prime")->required();
  locint->add_option("--oracle-depth", loc_depth, "enumeration depth k")->capture_default_str();

  // suite
  app.add_subcommand("suite", "run the full acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Session session(gl3tf_session_new());
  if (!config_path.empty()) {
    gl3tf_status st = gl3tf_session_load_config(session.get(), config_path.c_str());
    if (st != GL3TF_OK) return fail(session, st);
  }
  // Precedence: built-in defaults < config file < explicitly passed flags.
  if (indent_opt->count() > 0 || config_path.empty())
    gl3tf_session_set(session.get(), "json_indent", std::to_string(json_indent).c_str());
  if (seed_opt->count() > 0)
    gl3tf_session_set(session.get(), "seed", std::to_string(seed).c_str());
  seed = gl3tf_session_seed(session.get());

  if (rootdata->parsed()) {
    StringOut out;
    gl3tf_status st = gl3tf_rootdata_json(session.get(), &out.p);
    if (st != GL3TF_OK) return fail(session, st);
    std::cout << out.p << "\n";
    return 0;
  }

  if (lemmas->parsed()) {
    StringOut out;
    gl3tf_status st = gl3tf_verify_lemmas(session.get(), which.c_str(), samples, seed, &out.p);
    if (out.p) std::cout << out.p << "\n";
    if (st != GL3TF_OK && st != GL3TF_ERR_VERIFY) return fail(session, st);
    return status_to_exit(st);
  }

  if (hull->parsed()) {
    double v = 0;
    gl3tf_status st = gl3tf_hull_volume_spec(session.get(), hull_t.c_str(),
                                             hull_h.empty() ? nullptr : hull_h.c_str(),
                                             hull_method.c_str(), &v);
    if (st != GL3TF_OK) return fail(session, st);
    emit(json{{"volume", v}, {"provenance", std::string("computed (") + hull_method + ")"}},
         json_indent);
    return 0;
  }

  if (cm0->parsed()) {
    double v = 0;
    gl3tf_status st = gl3tf_cm0_weight(session.get(), cm0_n[0], cm0_n[1], cm0_n[2], &v);
    if (st != GL3TF_OK) return fail(session, st);
    emit(json{{"c_m0", v}, {"provenance", "computed (closed form, double)"}}, json_indent);
    return 0;
  }

  if (interval->parsed()) {
    double v = 0;
    gl3tf_status st = gl3tf_interval_weight(session.get(), int_hm.c_str(), int_hn.c_str(),
                                            int_t.c_str(), &v);
    if (st != GL3TF_OK) return fail(session, st);
    emit(json{{"interval_length", v}, {"provenance", "computed (exact endpoints)"}},
         json_indent);
    return 0;
  }

  if (classify->parsed()) {
    std::vector<std::string> inputs;
    if (!matrix_csv.empty()) inputs.push_back(matrix_csv);
    if (!batch_path.empty()) {
      std::ifstream in(batch_path);
      if (!in) {
        std::cerr << "error: cannot open " << batch_path << "\n";
        return 2;
      }
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) inputs.push_back(line);
    }
    if (inputs.empty()) {
      std::cerr << "error: need --matrix or --file\n";
      return 2;
    }
    for (const std::string& text : inputs) {
      gl3tf_matrix* m = nullptr;
      gl3tf_status st = gl3tf_matrix_parse(session.get(), text.c_str(), &m);
      if (st != GL3TF_OK) return fail(session, st);
      StringOut out;
      st = gl3tf_orbit_classify(session.get(), m, &out.p);
      gl3tf_matrix_free(m);
      if (st != GL3TF_OK) return fail(session, st);
      std::cout << out.p << "\n";
    }
    return 0;
  }

  if (woi->parsed()) {
    if (tol_opt->count() > 0) gl3tf_session_set(session.get(), "quad_tol", fmt(woi_tol).c_str());
    std::string center = woi_z + ",0,0,0," + woi_z + ",0,0,0," + woi_z;
    gl3tf_testfn* f = nullptr;
    gl3tf_status st = gl3tf_testfn_gaussian(session.get(), center.c_str(), woi_sigma, &f);
    if (st != GL3TF_OK) return fail(session, st);
    double value = 0, err = 0;
    st = gl3tf_woi(session.get(), woi_kind.c_str(), f, woi_z.c_str(), woi_t1, woi_t2, woi_c,
                   copt->count() > 0 ? 1 : 0, &value, &err);
    woi_use_c = copt->count() > 0;
    gl3tf_testfn_free(f);
    if (st != GL3TF_OK && st != GL3TF_ERR_TOLERANCE) return fail(session, st);
    json out;
    out["value"] = value;
    out["error_estimate"] = err;
    if (st == GL3TF_ERR_TOLERANCE) out["converged"] = false;
    out["spec_echo"] = {{"T1", woi_t1},
                        {"T2", woi_t2},
                        {"constant", woi_use_c ? woi_c : 0.0},
                        {"constant_mode", woi_use_c ? "user" : "drop"},
                        {"kind", woi_kind},
                        {"sigma", woi_sigma},
                        {"tol", woi_tol},
                        {"z", woi_z}};
    emit(out, json_indent);
    return st == GL3TF_OK ? 0 : 1;
  }

  if (zeta->parsed()) {
    auto primes = parse_primes(zeta_primes);
    double v = 0;
    gl3tf_status st =
        zeta_deriv
            ? gl3tf_zeta_partial_derivative(session.get(), zeta_s, primes.data(),
                                            static_cast<int>(primes.size()), &v)
            : gl3tf_zeta_partial(session.get(), zeta_s, primes.data(),
                                 static_cast<int>(primes.size()), &v);
    if (st != GL3TF_OK) return fail(session, st);
    emit(json{{zeta_deriv ? "zeta_S_derivative" : "zeta_S", v},
              {"provenance", "computed (euler-maclaurin)"}},
         json_indent);
    return 0;
  }

  if (coeff->parsed()) {
    for (auto& [opt, render] : coeff_sets) {
      if (opt->count() == 0) continue;
      std::string kv = render();
      auto eq = kv.find('=');
      gl3tf_session_set(session.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    }
    if (ln2_opt->count() > 0 &&
        gl3tf_session_set(session.get(), "ln2_placement", ln2_placement.c_str()) != GL3TF_OK)
      return fail(session, GL3TF_ERR_ARGUMENT);
    auto primes = parse_primes(coeff_primes);
    StringOut out;
    gl3tf_status st = gl3tf_coefficients(session.get(), primes.data(),
                                         static_cast<int>(primes.size()), &out.p);
    if (st != GL3TF_OK) return fail(session, st);
    std::cout << out.p << "\n";
    return 0;
  }

  if (locint->parsed()) {
    StringOut out;
    gl3tf_status st = gl3tf_local_log_norm_integral(session.get(), loc_p, loc_depth, &out.p);
    if (st != GL3TF_OK) return fail(session, st);
    std::cout << out.p << "\n";
    return 0;
  }

  if (app.get_subcommand("suite")->parsed()) {
    StringOut out;
    gl3tf_status st = gl3tf_suite(session.get(), &out.p);
    if (out.p) std::cout << out.p << "\n";
    if (st != GL3TF_OK && st != GL3TF_ERR_VERIFY) return fail(session, st);
    return status_to_exit(st);
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
