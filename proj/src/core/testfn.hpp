#pragma once

#include <vector>

#include "core/ratmat.hpp"

namespace gl3tf {

struct Matrix3d {
  std::array<double, 9> a{};

  static Matrix3d identity();
  // z * n(v12, v13, v23).
  static Matrix3d z_times_unipotent(double z, double v12, double v13, double v23);
  static Matrix3d from_rational(const RationalMatrix3& m);

  double& at(int i, int j) { return a[3 * i + j]; }
  double at(int i, int j) const { return a[3 * i + j]; }
  double frobenius() const;
};

Matrix3d operator*(const Matrix3d& x, const Matrix3d& y);

// Conjugation-invariant test function: a Gaussian in Frobenius distance to a
// center.  With a scalar center the K-integral over SO(3) is the identity;
// for other centers evaluations are pre-averaged over a fixed SO(3) product
// rule (ZYZ Euler angles, Gauss-Legendre in cos(theta)).
class TestFunction {
 public:
  static TestFunction gaussian_frobenius(const RationalMatrix3& center, double sigma);
  static TestFunction zero();  // identically-zero member of the family

  double operator()(const Matrix3d& x) const;
  double sigma() const { return sigma_; }
  bool averaged() const { return !so3_rot_.empty(); }
  bool is_zero() const { return zero_; }

  // |entry| beyond which f restricted to z*n(...) is below ~1e-18 of peak.
  double coordinate_cutoff(double entry_scale) const;

 private:
  Matrix3d center_{};
  double sigma_ = 1.0;
  double center_frob_ = 0.0;
  bool zero_ = false;
  std::vector<Matrix3d> so3_rot_;
  std::vector<double> so3_w_;

  double gaussian(const Matrix3d& x) const;
};

}  // namespace gl3tf
