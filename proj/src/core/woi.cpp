#include "core/woi.hpp"

#include <cmath>

namespace gl3tf {

namespace {

const double kLn2 = std::log(2.0);

WoiResult run(const TestFunction& f, const QuadratureSpec& spec, double entry_scale, int n,
              unsigned log_axis_mask, const std::function<double(const double*)>& integrand) {
  if (f.is_zero()) return {0.0, 0.0, 0};
  double cutoff = f.coordinate_cutoff(entry_scale);
  QuadResult r = integrate_rn(integrand, n, cutoff, spec, log_axis_mask);
  if (!r.converged) throw ToleranceError(r);
  return {r.value, r.error, r.evals};
}

}  // namespace

WoiResult j_m0(const TestFunction& f, const QuadratureSpec& spec, const WeightParams& params) {
  const double c = params.additive_constant();
  return run(f, spec, 1.0, 2, 0b11u, [&](const double* v) {
    Matrix3d x = Matrix3d::z_times_unipotent(1.0, v[0], 0.0, v[1]);
    double l1 = std::log(std::abs(v[0])), l3 = std::log(std::abs(v[1]));
    double g = 0.5 * (l1 * l1 + l3 * l3) + 2.0 * l1 * l3 + 3.0 * kLn2 * (l1 + l3) + c;
    return f(x) * g;
  });
}

WoiResult j_m21(const TestFunction& f, const QuadratureSpec& spec) {
  return run(f, spec, 1.0, 2, 0b11u, [&](const double* v) {
    Matrix3d x = Matrix3d::z_times_unipotent(1.0, 0.0, v[0], v[1]);
    double g = 0.5 * std::log(4.0 * (v[0] * v[0] + v[1] * v[1]));
    return f(x) * g;
  });
}

WoiResult j_m0_T(const Rat& z, const TestFunction& f, const QuadratureSpec& spec,
                 const WeightParams& params) {
  const double zd = to_double(z);
  if (zd == 0) throw std::invalid_argument("j_m0_T: z must be nonzero");
  const double t1 = params.t1, t2 = params.t2, c = params.additive_constant();
  const double tpoly = -1.5 * t1 * t1 - 1.5 * t2 * t2 + 6.0 * t1 * t2 + c;
  // v13 (innermost) carries no weight: no log collar on that axis.
  return run(f, spec, std::abs(zd), 3, 0b011u, [&](const double* v) {
    // axes: v[0]=v12, v[1]=v23 (weighted), v[2]=v13 (unweighted, innermost)
    Matrix3d x = Matrix3d::z_times_unipotent(zd, v[0], v[2], v[1]);
    double l12 = std::log(std::abs(v[0])), l23 = std::log(std::abs(v[1]));
    double g = 0.5 * (l12 * l12 + l23 * l23 + 4.0 * l12 * l23) + 3.0 * t2 * (kLn2 + l12) +
               3.0 * t1 * (kLn2 + l23) + 3.0 * (kLn2 + l12 + l23) + tpoly;
    return f(x) * g;
  });
}

WoiResult j_m21_T(const Rat& z, const TestFunction& f, const QuadratureSpec& spec,
                  const WeightParams& params, bool with_u) {
  const double zd = to_double(z);
  if (zd == 0) throw std::invalid_argument("j_m21_T: z must be nonzero");
  const double shift = params.t1 + params.t2;
  if (!with_u) {
    return run(f, spec, std::abs(zd), 2, 0b11u, [&](const double* v) {
      Matrix3d x = Matrix3d::z_times_unipotent(zd, 0.0, v[0], v[1]);
      double g = 0.5 * std::log(v[0] * v[0] + v[1] * v[1]) + kLn2 + shift;
      return f(x) * g;
    });
  }
  // c_S = 1 at the archimedean place.
  return run(f, spec, std::abs(zd), 3, 0b011u, [&](const double* v) {
    Matrix3d x = Matrix3d::z_times_unipotent(zd, v[0], v[2], v[1]);
    double g = std::log(std::abs(v[0] * v[1])) + shift + 2.0 * kLn2;
    return f(x) * g;
  });
}

WoiResult j_g_unipotent(const Rat& z, UnipotentSubtype subtype, const TestFunction& f,
                        const QuadratureSpec& spec) {
  const double zd = to_double(z);
  if (zd == 0) throw std::invalid_argument("j_g_unipotent: z must be nonzero");
  if (subtype == UnipotentSubtype::Min) {
    return run(f, spec, std::abs(zd), 2, 0u, [&](const double* v) {
      return f(Matrix3d::z_times_unipotent(zd, 0.0, v[0], v[1]));
    });
  }
  if (subtype == UnipotentSubtype::Reg) {
    return run(f, spec, std::abs(zd), 3, 0u, [&](const double* v) {
      return f(Matrix3d::z_times_unipotent(zd, v[0], v[2], v[1]));
    });
  }
  throw std::invalid_argument("j_g_unipotent: subtype must be Min or Reg");
}

}  // namespace gl3tf
