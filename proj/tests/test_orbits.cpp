#include <doctest.h>

#include "core/ratmat.hpp"

using namespace gl3tf;
using RM = RationalMatrix3;

namespace {

uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Rng {
  uint64_t s;
  int uniform(int lo, int hi) {
    s = mix(s);
    return lo + static_cast<int>(s % static_cast<uint64_t>(hi - lo + 1));
  }
};

RM random_invertible(Rng& rng) {
  for (;;) {
    RM m;
    for (int i = 0; i < 9; ++i) {
      m.a[i] = Rat(rng.uniform(-4, 4), rng.uniform(1, 3));
      m.a[i].canonicalize();
    }
    if (m.det() != 0) return m;
  }
}

RM random_unimodular(Rng& rng) {
  RM g = RM::identity();
  for (int step = 0; step < 8; ++step) {
    int i = rng.uniform(0, 2), j = rng.uniform(0, 2);
    if (i == j) j = (j + 1) % 3;
    Rat c(rng.uniform(-2, 2));
    for (int k = 0; k < 3; ++k) g.at(i, k) += c * g.at(j, k);
  }
  return g;
}

}  // namespace

TEST_CASE("char_poly basics") {
  RatPoly p = char_poly(RM::diag(Rat(1), Rat(2), Rat(3)));
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  CHECK(p.coeffs == std::vector<Rat>{Rat(-6), Rat(11), Rat(-6), Rat(1)});
  CHECK(char_poly(RM::companion(Rat(-2), Rat(0), Rat(0))).coeffs ==
        std::vector<Rat>{Rat(-2), Rat(0), Rat(0), Rat(1)});
  CHECK(char_poly(RM::identity()).coeffs == std::vector<Rat>{Rat(-1), Rat(3), Rat(-3), Rat(1)});
  RM singular;  // zero matrix
  CHECK_THROWS_AS(char_poly(singular), std::domain_error);
}

TEST_CASE("factor_cubic patterns") {
  // x^3 - 2: irreducible.
  auto f1 = factor_cubic(RatPoly{{Rat(-2), Rat(0), Rat(0), Rat(1)}});
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].factor.degree() == 3);
  CHECK(f1[0].multiplicity == 1);
  // (x-2)(x^2+1) = x^3 - 2x^2 + x - 2.
  auto f2 = factor_cubic(RatPoly{{Rat(-2), Rat(1), Rat(-2), Rat(1)}});
  REQUIRE(f2.size() == 2);
  bool saw_linear = false, saw_quad = false;
  for (const auto& f : f2) {
    if (f.factor.degree() == 1) {
      saw_linear = true;
      CHECK(f.factor.eval(Rat(2)) == 0);
    }
    if (f.factor.degree() == 2) {
      saw_quad = true;
      CHECK(f.factor.coeffs == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    }
  }
  CHECK(saw_linear);
  CHECK(saw_quad);
  // (x-1)^2 (x-5) = x^3 - 7x^2 + 11x - 5.
  auto f3 = factor_cubic(RatPoly{{Rat(-5), Rat(11), Rat(-7), Rat(1)}});
  REQUIRE(f3.size() == 2);
  for (const auto& f : f3) {
    if (f.factor.eval(Rat(1)) == 0) CHECK(f.multiplicity == 2);
    if (f.factor.eval(Rat(5)) == 0) CHECK(f.multiplicity == 1);
  }
  // Non-monic or wrong degree rejected.
  CHECK_THROWS_AS(factor_cubic(RatPoly{{Rat(1), Rat(2)}}), std::invalid_argument);
}

TEST_CASE("factor_cubic with non-integer rational roots") {
  // (x - 1/2)(x - 2/3)(x + 5) primitive-rescaling root search.
  RatPoly p{{Rat(1, 2) * Rat(2, 3) * Rat(5), Rat(0), Rat(0), Rat(1)}};
  p.coeffs[2] = -(Rat(1, 2) + Rat(2, 3) - Rat(5));
  p.coeffs[1] = Rat(1, 2) * Rat(2, 3) + Rat(1, 2) * Rat(-5) + Rat(2, 3) * Rat(-5);
  p.coeffs[0] = -Rat(1, 2) * Rat(2, 3) * Rat(-5);
  auto f = factor_cubic(p);
  REQUIRE(f.size() == 3);
  for (const auto& fac : f) CHECK(fac.multiplicity == 1);
}

TEST_CASE("jordan decomposition examples") {
  // Distinct eigenvalues: already semisimple.
  JordanPair j1 = jordan_decompose(RM::diag(Rat(1), Rat(2), Rat(3)));
  CHECK(j1.semisimple == RM::diag(Rat(1), Rat(2), Rat(3)));
  CHECK(j1.unipotent == RM::identity());
  // Scalar times unipotent is its own decomposition.
  RM zn = RM::z_times_unipotent(Rat(2), Rat(0), Rat(1), Rat(0));
  JordanPair j2 = jordan_decompose(zn);
  CHECK(j2.semisimple == RM::scalar(Rat(2)));
  CHECK(j2.unipotent == RM::z_times_unipotent(Rat(1), Rat(0), Rat(1), Rat(0)));
  // Mixed: [[1,1,0],[0,1,0],[0,0,2]].
  RM m = RM::diag(Rat(1), Rat(1), Rat(2));
  m.at(0, 1) = 1;
  JordanPair j3 = jordan_decompose(m);
  CHECK(j3.semisimple == RM::diag(Rat(1), Rat(1), Rat(2)));
  RM u = RM::identity();
  u.at(0, 1) = 1;
  CHECK(j3.unipotent == u);
}

TEST_CASE("jordan postconditions on random matrices") {
  Rng rng{2718};
  RM zero;
  for (int t = 0; t < 100; ++t) {
    RM m = random_invertible(rng);
    JordanPair jp = jordan_decompose(m);
    CHECK(jp.semisimple * jp.unipotent == m);
    CHECK(jp.semisimple * jp.unipotent == jp.unipotent * jp.semisimple);
    for (const auto& f : factor_cubic(minimal_polynomial(jp.semisimple)))
      CHECK(f.multiplicity == 1);
    RM n = jp.unipotent - RM::identity();
    CHECK(n * n * n == zero);
  }
}

TEST_CASE("classification of the five kinds") {
  OrbitClass c1 = classify(RM::companion(Rat(-2), Rat(0), Rat(0)));
  CHECK(c1.kind == OrbitKind::EllipticG);
  CHECK_FALSE(c1.ramified);
  CHECK(c1.eigenvalues.empty());

  RM rot;  // [[0,-1,0],[1,0,0],[0,0,2]]
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  rot.at(2, 2) = 2;
  OrbitClass c2 = classify(rot);
  CHECK(c2.kind == OrbitKind::Elliptic21);
  CHECK_FALSE(c2.ramified);
  REQUIRE(c2.eigenvalues.size() == 1);
  CHECK(c2.eigenvalues[0].first == Rat(2));

  OrbitClass c3 = classify(RM::diag(Rat(1), Rat(2), Rat(3)));
  CHECK(c3.kind == OrbitKind::SplitRegular);
  CHECK_FALSE(c3.ramified);

  OrbitClass c4 = classify(RM::diag(Rat(1), Rat(1), Rat(2)));
  CHECK(c4.kind == OrbitKind::TwoEqual);
  CHECK(c4.ramified);

  OrbitClass c5 = classify(RM::z_times_unipotent(Rat(3), Rat(1), Rat(0), Rat(1)));
  CHECK(c5.kind == OrbitKind::Central);
  CHECK(c5.subtype == UnipotentSubtype::Reg);
  CHECK(c5.ramified);
  CHECK(classify(RM::scalar(Rat(7))).subtype == UnipotentSubtype::Tri);
  CHECK(classify(RM::z_times_unipotent(Rat(2), Rat(0), Rat(1), Rat(0))).subtype ==
        UnipotentSubtype::Min);
}

TEST_CASE("conjugation invariance of classify") {
  Rng rng{31415};
  for (int t = 0; t < 100; ++t) {
    RM m = random_invertible(rng);
    RM g = random_unimodular(rng);
    OrbitClass a = classify(m);
    OrbitClass b = classify(g * m * g.inverse());
    CHECK(a.kind == b.kind);
    CHECK(a.subtype == b.subtype);
    CHECK(a.ramified == b.ramified);
  }
}

TEST_CASE("central subtype is scaling invariant") {
  for (const Rat& z : {Rat(2), Rat(-1), Rat(1, 3)}) {
    RM u_min = RM::z_times_unipotent(Rat(1), Rat(0), Rat(1), Rat(0));
    RM u_reg = RM::z_times_unipotent(Rat(1), Rat(1), Rat(0), Rat(1));
    CHECK(classify(z * u_min).subtype == UnipotentSubtype::Min);
    CHECK(classify(z * u_reg).subtype == UnipotentSubtype::Reg);
    CHECK(classify(z * RM::identity()).subtype == UnipotentSubtype::Tri);
  }
}

TEST_CASE("conjugacy probe") {
  CHECK(conjugacy_probe(RM::diag(Rat(1), Rat(2), Rat(3)), RM::diag(Rat(2), Rat(1), Rat(3))) ==
        ProbeResult::Equivalent);
  CHECK(conjugacy_probe(RM::companion(Rat(-2), Rat(0), Rat(0)),
                        RM::companion(Rat(-3), Rat(0), Rat(0))) == ProbeResult::Inequivalent);
  // Same semisimple part diag(1,1,2) with different unipotent parts: the
  // orbit relation only sees the semisimple part.
  RM m = RM::diag(Rat(1), Rat(1), Rat(2));
  RM mu = m;
  mu.at(0, 1) = 1;
  CHECK(conjugacy_probe(m, mu) == ProbeResult::Equivalent);
  CHECK(conjugacy_probe(m, RM::diag(Rat(1), Rat(2), Rat(2))) == ProbeResult::Inequivalent);
}

TEST_CASE("probe agrees with a bounded conjugator search") {
  // Exhaustive search over unimodular integer matrices with entries in
  // {-1,0,1} as an independent oracle on semisimple pairs.
  RM a = RM::diag(Rat(1), Rat(1), Rat(2));
  RM g;  // a specific unimodular conjugator
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  g.at(1, 1) = 1;
  g.at(2, 0) = 1;
  g.at(2, 2) = 1;
  RM b = g * a * g.inverse();
  REQUIRE(conjugacy_probe(a, b) == ProbeResult::Equivalent);
  bool found = false;
  RM cand;
  std::array<int, 9> e{};
  for (long code = 0; code < 19683 && !found; ++code) {
    long c = code;
    for (int i = 0; i < 9; ++i) {
      cand.a[i] = Rat(c % 3 - 1);
      c /= 3;
    }
    Rat d = cand.det();
    if (d != 1 && d != -1) continue;
    if (cand * a == b * cand) found = true;
  }
  CHECK(found);
}
