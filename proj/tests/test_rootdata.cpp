#include <doctest.h>

#include <cmath>

#include "core/cones.hpp"
#include "core/rootdata.hpp"

using namespace gl3tf;

TEST_CASE("simple roots and coroot normalization") {
  auto [a, b] = simple_roots();
  CHECK(a.v == AVector::of_ints(1, -1, 0));
  CHECK(b.v == AVector::of_ints(0, 1, -1));
  CHECK(pair(a.v, b.v) == Rat(-1));
  // alpha(alpha^vee) = 2 for every root (coroot = root under the fixed form).
  for (const AVector& r : {a.v, b.v, a.v + b.v}) CHECK(pair(r, r) == Rat(2));
}

TEST_CASE("dual weights pair to the Kronecker delta") {
  auto [wa, wb] = dual_weights();
  CHECK(wa == AVector(Rat(2, 3), Rat(-1, 3), Rat(-1, 3)));
  CHECK(wb == AVector(Rat(1, 3), Rat(1, 3), Rat(-2, 3)));
  auto [a, b] = simple_roots();
  CHECK(pair(wa, a.v) == Rat(1));
  CHECK(pair(wa, b.v) == Rat(0));
  CHECK(pair(wb, b.v) == Rat(1));
  CHECK(pair(wb, a.v) == Rat(0));
}

TEST_CASE("rho of the standard parabolics") {
  CHECK(rho(Parabolic::P0) == AVector::of_ints(1, 0, -1));
  CHECK(rho(Parabolic::G) == AVector::of_ints(0, 0, 0));
  CHECK(rho(Parabolic::P21) == AVector(Rat(1, 2), Rat(1, 2), Rat(-1)));
  CHECK(rho(Parabolic::P12) == AVector(Rat(1), Rat(-1, 2), Rat(-1, 2)));
  // 2 rho_{P0} is the sum of the three positive roots.
  auto [a, b] = simple_roots();
  CHECK(Rat(2) * rho(Parabolic::P0) == a.v + b.v + (a.v + b.v));
}

TEST_CASE("gram constants") {
  CHECK(gram_constant(Parabolic::P0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(gram_constant(Parabolic::P21) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK(gram_constant(Parabolic::P12) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(gram_constant(Parabolic::G), std::domain_error);
}

TEST_CASE("weyl group: closure, identity, action") {
  const auto& w = weyl_group();
  REQUIRE(w.size() == 6);
  CHECK(w[0].is_identity());
  AVector h = AVector::of_ints(1, 0, -1);
  CHECK(w[0].apply(h) == h);
  // (13) swaps the first and last coordinates.
  WeylElement w13{{2, 1, 0}};
  CHECK(w13.apply(h) == AVector::of_ints(-1, 0, 1));
  for (const auto& s : w) {
    for (const auto& t : w) {
      WeylElement st = s.compose(t);
      bool found = false;
      for (const auto& u : w) found = found || u == st;
      CHECK(found);
    }
    CHECK(s.compose(s.inverse()).is_identity());
  }
}

TEST_CASE("weyl action preserves the pairing") {
  GenericSampler sampler(2024);
  for (int i = 0; i < 200; ++i) {
    AVector h1 = sampler.next(), h2 = sampler.next();
    for (const auto& s : weyl_group()) CHECK(pair(s.apply(h1), s.apply(h2)) == pair(h1, h2));
  }
}

TEST_CASE("projection onto a0^P + a_P") {
  // (1,-1,0) is orthogonal to a_{P21} = {a=b}.
  auto [up, ap] = project(AVector::of_ints(1, -1, 0), Parabolic::P21);
  CHECK(ap == AVector::of_ints(0, 0, 0));
  CHECK(up == AVector::of_ints(1, -1, 0));
  // (1,1,-2) already lies in a_{P21}.
  auto [up2, ap2] = project(AVector::of_ints(1, 1, -2), Parabolic::P21);
  CHECK(up2 == AVector::of_ints(0, 0, 0));
  CHECK(ap2 == AVector::of_ints(1, 1, -2));
  // Sum-zero vectors have no a_G component.
  auto [up3, ap3] = project(AVector::of_ints(1, 0, -1), Parabolic::G);
  CHECK(ap3 == AVector::of_ints(0, 0, 0));
}

TEST_CASE("projection reconstructs exactly and kills Delta_0^P") {
  GenericSampler sampler(7);
  const AVector a = alpha_root(), b = beta_root();
  for (int i = 0; i < 200; ++i) {
    AVector h = sampler.next();
    for (Parabolic p : kParabolics) {
      auto [up, ap] = project(h, p);
      CHECK(up + ap == h);
      // alpha(H_{a_P}) = 0 for alpha in Delta_0^P.
      if (p == Parabolic::P21 || p == Parabolic::G) CHECK(pair(a, ap) == Rat(0));
      if (p == Parabolic::P12 || p == Parabolic::G) CHECK(pair(b, ap) == Rat(0));
    }
  }
}

TEST_CASE("omega_restricted cardinalities follow the Weyl-group ratios") {
  // |Omega(a0; P)| = |S3| / |W(M_P)|: 6, 3, 3, 1.
  CHECK(omega_restricted(Parabolic::P0, Parabolic::P0).size() == 6);
  CHECK(omega_restricted(Parabolic::P0, Parabolic::P21).size() == 3);
  CHECK(omega_restricted(Parabolic::P0, Parabolic::P12).size() == 3);
  CHECK(omega_restricted(Parabolic::P0, Parabolic::G).size() == 1);
  // From a_{P21}: only the identity restriction survives any constraint that
  // contains P21.
  auto id21 = omega_restricted(Parabolic::P21, Parabolic::P21);
  REQUIRE(id21.size() == 1);
  CHECK(id21[0].is_identity());
  CHECK(omega_restricted(Parabolic::P21, Parabolic::G).size() == 1);
  CHECK(omega_restricted(Parabolic::P12, Parabolic::G).size() == 1);
  // Constraint P12 from source P21: the flip restriction s(13).
  auto flip = omega_restricted(Parabolic::P21, Parabolic::P12);
  REQUIRE(flip.size() == 1);
  CHECK(flip[0].apply(AVector::of_ints(1, 1, -2)) == AVector::of_ints(-2, 1, 1));
  CHECK_THROWS_AS(omega_restricted(Parabolic::G, Parabolic::G), std::invalid_argument);
}

TEST_CASE("omega_restricted positivity filter") {
  // Each member of Omega(a0; P21) must pull alpha back to a positive root.
  AVector dominant = AVector::of_ints(2, 0, -2);
  for (const auto& s : omega_restricted(Parabolic::P0, Parabolic::P21))
    CHECK(pair(s.inverse().apply(alpha_root()), dominant) > 0);
}
