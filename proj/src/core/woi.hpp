#pragma once

#include "core/quadrature.hpp"
#include "core/ratmat.hpp"
#include "core/testfn.hpp"

namespace gl3tf {

enum class ConstantMode { DropO1, UserConstant };

struct WeightParams {
  double t1 = 0.0;
  double t2 = 0.0;
  ConstantMode mode = ConstantMode::DropO1;
  double constant = 0.0;  // used when mode == UserConstant

  double additive_constant() const { return mode == ConstantMode::UserConstant ? constant : 0.0; }
};

struct WoiResult {
  double value = 0.0;
  double error = 0.0;
  long evals = 0;
};

// J over N'(R) of f(n(v1,0,v3)) against
//   1/2 (ln^2|v1| + ln^2|v3|) + 2 ln|v1| ln|v3| + 3 ln2 ln|v1 v3| + const.
WoiResult j_m0(const TestFunction& f, const QuadratureSpec& spec, const WeightParams& params);

// J over (v2,v3) of f(n(0,v2,v3)) against 1/2 ln(4 (v2^2 + v3^2)).
WoiResult j_m21(const TestFunction& f, const QuadratureSpec& spec);

// J over N0(R) of f(z n(v12,v13,v23)) against
//   1/2 (L12^2 + L23^2 + 4 L12 L23) + 3 T2 (ln2 + L12) + 3 T1 (ln2 + L23)
//   + 3 (ln2 + L12 + L23) - 3/2 T1^2 - 3/2 T2^2 + 6 T1 T2 + const,
// with Lij = ln|vij|; v13 is unweighted.
WoiResult j_m0_T(const Rat& z, const TestFunction& f, const QuadratureSpec& spec,
                 const WeightParams& params);

// with_u = false: over (v13, v23) of f(z n(0,v13,v23)) against
//   ln|(v13,v23)| + ln2 + T1 + T2.
// with_u = true: over N0(R) of f(z n) against ln|v12 v23| + T1 + T2 + 2 ln2.
WoiResult j_m21_T(const Rat& z, const TestFunction& f, const QuadratureSpec& spec,
                  const WeightParams& params, bool with_u);

// Plain unipotent-class integrals: Min over (v13,v23), Reg over all of N0.
WoiResult j_g_unipotent(const Rat& z, UnipotentSubtype subtype, const TestFunction& f,
                        const QuadratureSpec& spec);

}  // namespace gl3tf
