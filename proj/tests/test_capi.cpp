#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "gl3tf.h"

using nlohmann::json;

namespace {

struct Sess {
  gl3tf_session* p = gl3tf_session_new();
  ~Sess() { gl3tf_session_free(p); }
};

std::string take(char*& s) {
  std::string out = s ? s : "";
  gl3tf_string_free(s);
  s = nullptr;
  return out;
}

}  // namespace

TEST_CASE("session configuration and errors") {
  Sess s;
  CHECK(gl3tf_session_set(s.p, "vol_M0", "2.0") == GL3TF_OK);
  CHECK(gl3tf_session_set(s.p, "ln2_placement", "inside") == GL3TF_OK);
  CHECK(gl3tf_session_set(s.p, "nonsense", "1") == GL3TF_ERR_ARGUMENT);
  CHECK(std::strlen(gl3tf_last_error(s.p)) > 0);
}

TEST_CASE("rootdata dump") {
  Sess s;
  char* out = nullptr;
  REQUIRE(gl3tf_rootdata_json(s.p, &out) == GL3TF_OK);
  json j = json::parse(take(out));
  CHECK(j["simple_roots"]["alpha"] == json::array({"1", "-1", "0"}));
  CHECK(j["parabolics"]["P21"]["corank"] == 1);
  CHECK(j["parabolics"]["P0"]["gram_constant"].get<double>() ==
        doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(j["weyl_group"].size() == 6);
  CHECK(j["omega_restricted_sizes"]["P0"]["G"] == 1);
  double g = 0;
  CHECK(gl3tf_gram_constant(s.p, "P21", &g) == GL3TF_OK);
  CHECK(g == doctest::Approx(std::sqrt(2.0 / 3)));
  CHECK(gl3tf_gram_constant(s.p, "G", &g) == GL3TF_ERR_DOMAIN);
  CHECK(gl3tf_gram_constant(s.p, "P7", &g) == GL3TF_ERR_ARGUMENT);
}

TEST_CASE("verify lemmas through the C surface") {
  Sess s;
  char* out = nullptr;
  REQUIRE(gl3tf_verify_lemmas(s.p, "moebius", 1, 1, &out) == GL3TF_OK);
  json j = json::parse(take(out));
  CHECK(j["pass"] == true);
  REQUIRE(gl3tf_verify_lemmas(s.p, "all", 500, 7, &out) == GL3TF_OK);
  j = json::parse(take(out));
  CHECK(j["pass"] == true);
  CHECK(j["reports"].size() == 5);  // 6.3, three 7.1 parabolics, moebius
  CHECK(gl3tf_verify_lemmas(s.p, "bogus", 10, 1, &out) == GL3TF_ERR_ARGUMENT);
  CHECK(gl3tf_verify_lemmas(s.p, "all", 0, 1, &out) == GL3TF_ERR_ARGUMENT);
}

TEST_CASE("hull volume through the C surface") {
  Sess s;
  double v = 0;
  REQUIRE(gl3tf_hull_volume_spec(s.p, "1,0,-1", nullptr, "direct", &v) == GL3TF_OK);
  CHECK(v == doctest::Approx(3 * std::sqrt(3.0)).epsilon(1e-12));
  REQUIRE(gl3tf_hull_volume_spec(s.p, "1,0,-1", "", "limit", &v) == GL3TF_OK);
  CHECK(v == doctest::Approx(3 * std::sqrt(3.0)).epsilon(1e-9));
  CHECK(gl3tf_hull_volume_spec(s.p, "1,0,-1", nullptr, "wat", &v) == GL3TF_ERR_ARGUMENT);
  // Raw-vertex entry point: the same hexagon, embedded as doubles.
  double verts[18] = {1, 0, -1, 1, -1, 0, 0, 1, -1, -1, 1, 0, 0, -1, 1, -1, 0, 1};
  REQUIRE(gl3tf_hull_volume(s.p, verts, "direct", &v) == GL3TF_OK);
  CHECK(v == doctest::Approx(3 * std::sqrt(3.0)).epsilon(1e-12));

  REQUIRE(gl3tf_cm0_weight(s.p, 1, 2, 3, &v) == GL3TF_OK);
  CHECK(v == doctest::Approx(0.53237974451184477).epsilon(1e-12));
  REQUIRE(gl3tf_interval_weight(s.p, "0,0,0", "0,0,0", "1,0,-1", &v) == GL3TF_OK);
  CHECK(v == doctest::Approx(2.0));
}

TEST_CASE("orbit classification through the C surface") {
  Sess s;
  gl3tf_matrix* m = nullptr;
  REQUIRE(gl3tf_matrix_parse(s.p, "1,0,0,0,2,0,0,0,3", &m) == GL3TF_OK);
  char* out = nullptr;
  REQUIRE(gl3tf_orbit_classify(s.p, m, &out) == GL3TF_OK);
  json j = json::parse(take(out));
  CHECK(j["kind"] == "SplitRegular");
  CHECK(j["ramified"] == false);
  CHECK(j["unipotent_subtype"] == "None");
  gl3tf_matrix_free(m);

  // Rationals with slashes, a central regular element.
  REQUIRE(gl3tf_matrix_parse(s.p, "1/2,1/2,0,0,1/2,1/2,0,0,1/2", &m) == GL3TF_OK);
  REQUIRE(gl3tf_orbit_classify(s.p, m, &out) == GL3TF_OK);
  j = json::parse(take(out));
  CHECK(j["kind"] == "Central");
  CHECK(j["unipotent_subtype"] == "Reg");
  CHECK(j["ramified"] == true);
  gl3tf_matrix_free(m);

  CHECK(gl3tf_matrix_parse(s.p, "1,2,3", &m) == GL3TF_ERR_ARGUMENT);
  CHECK(gl3tf_matrix_parse(s.p, "1,0,0,0,1,0,0,0,1/0", &m) == GL3TF_ERR_ARGUMENT);
  // Singular matrix: parse fine, classify refuses.
  REQUIRE(gl3tf_matrix_parse(s.p, "0,0,0,0,0,0,0,0,0", &m) == GL3TF_OK);
  CHECK(gl3tf_orbit_classify(s.p, m, &out) == GL3TF_ERR_DOMAIN);
  gl3tf_matrix_free(m);

  gl3tf_matrix *a = nullptr, *b = nullptr;
  REQUIRE(gl3tf_matrix_parse(s.p, "1,0,0,0,2,0,0,0,3", &a) == GL3TF_OK);
  REQUIRE(gl3tf_matrix_parse(s.p, "2,0,0,0,1,0,0,0,3", &b) == GL3TF_OK);
  int eq = 0;
  REQUIRE(gl3tf_conjugacy_probe(s.p, a, b, 0, &eq) == GL3TF_OK);
  CHECK(eq == 1);
  gl3tf_matrix_free(a);
  gl3tf_matrix_free(b);
}

TEST_CASE("weighted orbital integrals through the C surface") {
  Sess s;
  gl3tf_testfn* f = nullptr;
  REQUIRE(gl3tf_testfn_gaussian(s.p, "1,0,0,0,1,0,0,0,1", 1.0, &f) == GL3TF_OK);
  double v = 0, e = 0;
  REQUIRE(gl3tf_woi(s.p, "jgmin", f, "1", 0, 0, 0, 0, &v, &e) == GL3TF_OK);
  CHECK(v == doctest::Approx(2 * M_PI).epsilon(1e-7));
  REQUIRE(gl3tf_woi(s.p, "jm21", f, "1", 0, 0, 0, 0, &v, &e) == GL3TF_OK);
  CHECK(v == doctest::Approx(4.7193817785192029).epsilon(1e-6));
  CHECK(e > 0);
  CHECK(gl3tf_woi(s.p, "nope", f, "1", 0, 0, 0, 0, &v, &e) == GL3TF_ERR_ARGUMENT);
  CHECK(gl3tf_woi(s.p, "jm0T", f, "0", 0, 0, 0, 0, &v, &e) == GL3TF_ERR_ARGUMENT);
  gl3tf_testfn_free(f);
  CHECK(gl3tf_testfn_gaussian(s.p, "1,0,0,0,1,0,0,0,1", -1.0, &f) == GL3TF_ERR_ARGUMENT);
}

TEST_CASE("zeta endpoints through the C surface") {
  Sess s;
  double v = 0;
  REQUIRE(gl3tf_zeta_partial(s.p, 2.0, nullptr, 0, &v) == GL3TF_OK);
  CHECK(v == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-13));
  long p2 = 2;
  REQUIRE(gl3tf_zeta_partial(s.p, 2.0, &p2, 1, &v) == GL3TF_OK);
  CHECK(v == doctest::Approx(M_PI * M_PI / 8).epsilon(1e-13));
  CHECK(gl3tf_zeta_partial(s.p, 1.0, nullptr, 0, &v) == GL3TF_ERR_DOMAIN);
  double c[3] = {0, 0, 0};
  REQUIRE(gl3tf_laurent_at_one(s.p, nullptr, 0, c) == GL3TF_OK);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(0.57721566490153286).epsilon(1e-12));

  char* out = nullptr;
  REQUIRE(gl3tf_local_log_norm_integral(s.p, 2, 10, &out) == GL3TF_OK);
  json j = json::parse(take(out));
  CHECK(j["closed_form"].get<double>() == doctest::Approx(-std::log(2.0) / 3));
  CHECK(j["difference"].get<double>() < 1e-5);

  REQUIRE(gl3tf_coefficients(s.p, nullptr, 0, &out) == GL3TF_OK);
  j = json::parse(take(out));
  CHECK(j["a_M21_min"].get<double>() == doctest::Approx(-0.057965757829206224).epsilon(1e-10));
  CHECK(j["config"]["ln2_placement"] == "outside");
  CHECK(j["provenance"]["c_Q"] == "configured");

  REQUIRE(gl3tf_trivial_class_term(s.p, 2.0, 1.5, &v) == GL3TF_OK);
  CHECK(v == 3.0);
}

TEST_CASE("deterministic JSON for identical inputs") {
  Sess s;
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(gl3tf_verify_lemmas(s.p, "6.3", 300, 99, &a) == GL3TF_OK);
  REQUIRE(gl3tf_verify_lemmas(s.p, "6.3", 300, 99, &b) == GL3TF_OK);
  std::string sa = take(a), sb = take(b);
  CHECK(sa == sb);
}
