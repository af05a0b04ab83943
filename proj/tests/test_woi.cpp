#include <doctest.h>

#include <cmath>

#include "core/quadrature.hpp"
#include "core/testfn.hpp"
#include "core/woi.hpp"

using namespace gl3tf;

namespace {

const double kTwoPi = 6.2831853071795865;
const double kTwoPi32 = 15.749609945722420;  // (2 pi)^{3/2}

TestFunction std_gaussian() {
  return TestFunction::gaussian_frobenius(RationalMatrix3::identity(), 1.0);
}

QuadratureSpec tight() {
  QuadratureSpec s;
  s.abs_tol = s.rel_tol = 1e-9;
  return s;
}

}  // namespace

TEST_CASE("adaptive panel rule on elementary integrals") {
  auto r = adapt_segments([](double x) { return x * x; }, {0.0, 1.0}, 1e-12, 16, 0);
  CHECK(r.value == doctest::Approx(1.0 / 3).epsilon(1e-13));
  auto rexp =
      adapt_segments([](double x) { return std::exp(-x); }, {0.0, 4.0, 40.0}, 1e-12, 16, 0);
  CHECK(rexp.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("line integral handles log singularities") {
  // int_{-1}^{1} ln|v| dv = -2, extended by zero decay outside.
  QuadratureSpec spec;
  auto r = integrate_line(
      [](double v) { return std::abs(v) <= 1.0 ? std::log(std::abs(v)) : 0.0; }, 1.5, 1e-10, spec);
  CHECK(r.value == doctest::Approx(-2.0).epsilon(1e-9));
  // Gaussian with log^2 weight: frozen from the 1-D product oracle.
  auto r2 = integrate_line(
      [](double v) {
        double l = std::log(std::abs(v));
        return l * l * std::exp(-v * v / 2);
      },
      16.0, 1e-10, spec);
  CHECK(r2.value == doctest::Approx(4.1037414943110060).epsilon(1e-10));
}

TEST_CASE("gaussian integrals over R^n") {
  QuadratureSpec spec;
  auto g2 = integrate_rn(
      [](const double* v) { return std::exp(-(v[0] * v[0] + v[1] * v[1]) / 2); }, 2, 16.0, spec);
  CHECK(g2.value == doctest::Approx(kTwoPi).epsilon(1e-9));
  auto g3 = integrate_rn(
      [](const double* v) {
        return std::exp(-(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) / 2);
      },
      3, 16.0, spec);
  CHECK(g3.value == doctest::Approx(kTwoPi32).epsilon(1e-8));
}

TEST_CASE("zero test function short-circuits") {
  TestFunction z = TestFunction::zero();
  QuadratureSpec spec;
  WeightParams wp;
  CHECK(j_m0(z, spec, wp).value == 0.0);
  CHECK(j_m21(z, spec).value == 0.0);
  CHECK(j_m0_T(Rat(1), z, spec, wp).value == 0.0);
  CHECK(j_m21_T(Rat(1), z, spec, wp, false).value == 0.0);
  CHECK(j_m21_T(Rat(1), z, spec, wp, true).value == 0.0);
  CHECK(j_g_unipotent(Rat(1), UnipotentSubtype::Min, z, spec).value == 0.0);
}

TEST_CASE("j_g unipotent benchmarks") {
  TestFunction f = std_gaussian();
  CHECK(j_g_unipotent(Rat(1), UnipotentSubtype::Min, f, tight()).value ==
        doctest::Approx(kTwoPi).epsilon(1e-9));
  CHECK(j_g_unipotent(Rat(1), UnipotentSubtype::Reg, f, tight()).value ==
        doctest::Approx(kTwoPi32).epsilon(1e-9));
  CHECK_THROWS_AS(j_g_unipotent(Rat(1), UnipotentSubtype::Tri, f, tight()),
                  std::invalid_argument);
  CHECK_THROWS_AS(j_g_unipotent(Rat(0), UnipotentSubtype::Min, f, tight()),
                  std::invalid_argument);
}

TEST_CASE("coordinate substitution scaling of the Min integral") {
  // f with doubled width: the substitution v -> 2v scales the plain integral
  // by 2^2.
  TestFunction wide = TestFunction::gaussian_frobenius(RationalMatrix3::identity(), 2.0);
  double v1 = j_g_unipotent(Rat(1), UnipotentSubtype::Min, std_gaussian(), tight()).value;
  double v2 = j_g_unipotent(Rat(1), UnipotentSubtype::Min, wide, tight()).value;
  CHECK(v2 == doctest::Approx(4.0 * v1).epsilon(1e-8));
}

TEST_CASE("j_m0 against the separable product oracle") {
  // For the scalar-center Gaussian the double integral splits into 1-D
  // factors; the frozen value comes from that independent route.
  TestFunction f = std_gaussian();
  WeightParams wp;  // DropO1
  WoiResult r = j_m0(f, tight(), wp);
  CHECK(r.value == doctest::Approx(-1.2414217273931042).epsilon(2e-8));
  CHECK(r.error < 1e-6);
  // UserConstant shifts by c * (integral of f over the plane).
  WeightParams wc;
  wc.mode = ConstantMode::UserConstant;
  wc.constant = 0.75;
  WoiResult rc = j_m0(f, tight(), wc);
  CHECK(rc.value - r.value == doctest::Approx(0.75 * kTwoPi).epsilon(1e-7));
}

TEST_CASE("j_m0 weight is symmetric under swapping the two coordinates") {
  // Integrating h(v1,v3) g(v1,v3) and h(v3,v1) g(v1,v3) must agree for any
  // profile h, because g is (v1 <-> v3)-symmetric.
  QuadratureSpec spec;
  const double ln2 = std::log(2.0);
  auto weighted = [&](bool swapped) {
    return integrate_rn(
               [&](const double* v) {
                 double a = swapped ? v[1] : v[0];
                 double b = swapped ? v[0] : v[1];
                 double h = std::exp(-(a - 0.5) * (a - 0.5) - b * b);
                 double l1 = std::log(std::abs(v[0])), l3 = std::log(std::abs(v[1]));
                 double g = 0.5 * (l1 * l1 + l3 * l3) + 2 * l1 * l3 + 3 * ln2 * (l1 + l3);
                 return h * g;
               },
               2, 12.0, spec)
        .value;
  };
  CHECK(weighted(false) == doctest::Approx(weighted(true)).epsilon(1e-8));
}

TEST_CASE("j_m21 against the polar oracle") {
  TestFunction f = std_gaussian();
  WoiResult r = j_m21(f, tight());
  CHECK(r.value == doctest::Approx(4.7193817785192029).epsilon(1e-9));
}

TEST_CASE("j_m0_T frozen values and T structure") {
  TestFunction f = std_gaussian();
  QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-8;
  WeightParams w0;
  double j00 = j_m0_T(Rat(1), f, spec, w0).value;
  CHECK(j00 == doctest::Approx(11.220335145338774).epsilon(2e-7));
  WeightParams w10;
  w10.t1 = 1.0;
  double j10 = j_m0_T(Rat(1), f, spec, w10).value;
  // + 3 T1 (ln2 + L23)-terms - 3/2 T1^2 * int f.
  CHECK(j10 == doctest::Approx(-9.6652655451902451).epsilon(2e-6));
  // UserConstant(c) shifts by exactly c * (integral of f over N0).
  WeightParams wc;
  wc.mode = ConstantMode::UserConstant;
  wc.constant = 2.0;
  double jc = j_m0_T(Rat(1), f, spec, wc).value;
  CHECK(jc - j00 == doctest::Approx(2.0 * kTwoPi32).epsilon(1e-7));
}

TEST_CASE("j_m21_T norm weight is bounded below by ln2 on |v| >= 1") {
  // For a nonnegative profile supported on r >= 1 the weighted integral
  // dominates ln2 times the plain one.
  QuadratureSpec spec;
  auto h = [](double r2) { return r2 >= 1.0 ? (r2 - 1.0) * std::exp(-r2) : 0.0; };
  auto weighted = integrate_rn(
      [&](const double* v) {
        double r2 = v[0] * v[0] + v[1] * v[1];
        return h(r2) * (0.5 * std::log(r2) + std::log(2.0));
      },
      2, 12.0, spec);
  auto plain = integrate_rn(
      [&](const double* v) { return h(v[0] * v[0] + v[1] * v[1]); }, 2, 12.0, spec);
  CHECK(weighted.value >= std::log(2.0) * plain.value - 1e-9);
}

TEST_CASE("j_m21_T linearity in T") {
  TestFunction f = std_gaussian();
  QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-8;
  WeightParams w0;
  WeightParams wt;
  wt.t1 = 0.3;
  wt.t2 = 0.4;
  double base = j_m21_T(Rat(1), f, spec, w0, false).value;
  double shifted = j_m21_T(Rat(1), f, spec, wt, false).value;
  CHECK(shifted - base == doctest::Approx(0.7 * kTwoPi).epsilon(1e-8));
  // with_u = false at T = 0 coincides with j_m21: both weights are ln(2r).
  CHECK(base == doctest::Approx(4.7193817785192029).epsilon(1e-7));
  // with_u route is linear in T as well.
  double ubase = j_m21_T(Rat(1), f, spec, w0, true).value;
  double ushift = j_m21_T(Rat(1), f, spec, wt, true).value;
  CHECK(ubase == doctest::Approx(1.8258761520364071).epsilon(2e-6));
  CHECK(ushift - ubase == doctest::Approx(0.7 * kTwoPi32).epsilon(1e-5));
}

TEST_CASE("linearity in the test function") {
  TestFunction f1 = std_gaussian();
  TestFunction f2 = TestFunction::gaussian_frobenius(RationalMatrix3::scalar(Rat(1)), 0.5);
  QuadratureSpec spec;
  double a = j_m21(f1, spec).value;
  double b = j_m21(f2, spec).value;
  // The family is not closed under addition, so check linearity through the
  // integral: J(f1) + J(f2) computed separately must match integrating the
  // pointwise sum.
  auto sum = [&](const double* v) {
    Matrix3d x = Matrix3d::z_times_unipotent(1.0, 0.0, v[0], v[1]);
    return (f1(x) + f2(x)) * 0.5 * std::log(4.0 * (v[0] * v[0] + v[1] * v[1]));
  };
  QuadResult r = integrate_rn(sum, 2, f1.coordinate_cutoff(1.0), spec);
  CHECK(r.value == doctest::Approx(a + b).epsilon(1e-7));
}

TEST_CASE("refinement convergence") {
  TestFunction f = std_gaussian();
  QuadratureSpec coarse;
  coarse.abs_tol = coarse.rel_tol = 1e-7;
  QuadratureSpec fine = coarse;
  fine.refine = 1;
  WeightParams wp;
  CHECK(std::abs(j_m0(f, coarse, wp).value - j_m0(f, fine, wp).value) < 1e-6);
  CHECK(std::abs(j_m21(f, coarse).value - j_m21(f, fine).value) < 1e-6);
}

TEST_CASE("K-averaged evaluations are conjugation invariant") {
  TestFunction f = TestFunction::gaussian_frobenius(
      RationalMatrix3::z_times_unipotent(Rat(1), Rat(1), Rat(0), Rat(0)), 1.0);
  REQUIRE(f.averaged());
  Matrix3d x = Matrix3d::z_times_unipotent(1.0, 0.4, -0.2, 0.9);
  // Rotation by a quarter turn in the (1,2)-plane.
  Matrix3d k;
  k.at(0, 1) = -1;
  k.at(1, 0) = 1;
  k.at(2, 2) = 1;
  Matrix3d kt;
  kt.at(0, 1) = 1;
  kt.at(1, 0) = -1;
  kt.at(2, 2) = 1;
  CHECK(f(kt * x * k) == doctest::Approx(f(x)).epsilon(1e-6));
}

TEST_CASE("tolerance failure carries the best estimate") {
  TestFunction f = std_gaussian();
  QuadratureSpec hopeless;
  hopeless.abs_tol = hopeless.rel_tol = 1e-30;
  hopeless.max_depth = 3;
  WeightParams wp;
  CHECK_THROWS_AS(j_m0(f, hopeless, wp), ToleranceError);
  try {
    j_m0(f, hopeless, wp);
  } catch (const ToleranceError& e) {
    CHECK(std::abs(e.best.value - (-1.2414217273931042)) < 1e-2);
    CHECK(e.best.error > 0);
  }
  // The evaluation cap ends unreachable-tolerance runs in bounded work even
  // at full depth.
  QuadratureSpec capped;
  capped.abs_tol = capped.rel_tol = 1e-30;
  capped.max_evals = 200000;
  CHECK_THROWS_AS(j_m0_T(Rat(1), f, capped, wp), ToleranceError);
}
