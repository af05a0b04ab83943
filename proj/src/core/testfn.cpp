#include "core/testfn.hpp"

#include <cmath>

namespace gl3tf {

Matrix3d Matrix3d::identity() {
  Matrix3d m;
  m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 1.0;
  return m;
}

Matrix3d Matrix3d::z_times_unipotent(double z, double v12, double v13, double v23) {
  Matrix3d m;
  m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = z;
  m.at(0, 1) = z * v12;
  m.at(0, 2) = z * v13;
  m.at(1, 2) = z * v23;
  return m;
}

Matrix3d Matrix3d::from_rational(const RationalMatrix3& m) {
  Matrix3d r;
  for (int i = 0; i < 9; ++i) r.a[i] = to_double(m.a[i]);
  return r;
}

double Matrix3d::frobenius() const {
  double s = 0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

Matrix3d operator*(const Matrix3d& x, const Matrix3d& y) {
  Matrix3d r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

namespace {

// 8-point Gauss-Legendre on [-1,1].
const double kGlX[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                        0.9602898564975363};
const double kGlW[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                        0.1012285362903763};

Matrix3d rot_z(double a) {
  Matrix3d m = Matrix3d::identity();
  m.at(0, 0) = std::cos(a);
  m.at(0, 1) = -std::sin(a);
  m.at(1, 0) = std::sin(a);
  m.at(1, 1) = std::cos(a);
  return m;
}

Matrix3d rot_y(double a) {
  Matrix3d m = Matrix3d::identity();
  m.at(0, 0) = std::cos(a);
  m.at(0, 2) = std::sin(a);
  m.at(2, 0) = -std::sin(a);
  m.at(2, 2) = std::cos(a);
  return m;
}

Matrix3d transpose(const Matrix3d& m) {
  Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.at(i, j) = m.at(j, i);
  return t;
}

bool is_scalar(const RationalMatrix3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && m.at(i, j) != 0) return false;
  return m.at(0, 0) == m.at(1, 1) && m.at(1, 1) == m.at(2, 2);
}

}  // namespace

TestFunction TestFunction::gaussian_frobenius(const RationalMatrix3& center, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("sigma must be positive");
  TestFunction f;
  f.center_ = Matrix3d::from_rational(center);
  f.sigma_ = sigma;
  f.center_frob_ = f.center_.frobenius();
  if (!is_scalar(center)) {
    // Pre-averaging rule over SO(3): uniform 8-point circles in the two
    // z-angles, Gauss-Legendre in cos(theta).
    const int m = 8;
    for (int i = 0; i < m; ++i) {
      double phi = 2.0 * M_PI * i / m;
      for (int j = 0; j < m; ++j) {
        double psi = 2.0 * M_PI * j / m;
        for (int k = 0; k < 8; ++k) {
          double ct = (k < 4) ? -kGlX[3 - k] : kGlX[k - 4];
          double w = kGlW[k < 4 ? 3 - k : k - 4] / 2.0;
          double theta = std::acos(ct);
          f.so3_rot_.push_back(rot_z(phi) * rot_y(theta) * rot_z(psi));
          f.so3_w_.push_back(w / (m * m));
        }
      }
    }
  }
  return f;
}

TestFunction TestFunction::zero() {
  TestFunction f;
  f.zero_ = true;
  return f;
}

double TestFunction::gaussian(const Matrix3d& x) const {
  double d2 = 0;
  for (int i = 0; i < 9; ++i) {
    double d = x.a[i] - center_.a[i];
    d2 += d * d;
  }
  return std::exp(-d2 / (2.0 * sigma_ * sigma_));
}

double TestFunction::operator()(const Matrix3d& x) const {
  if (zero_) return 0.0;
  if (so3_rot_.empty()) return gaussian(x);
  double s = 0;
  for (size_t i = 0; i < so3_rot_.size(); ++i)
    s += so3_w_[i] * gaussian(transpose(so3_rot_[i]) * x * so3_rot_[i]);
  return s;
}

double TestFunction::coordinate_cutoff(double entry_scale) const {
  // f <= exp(-(|x|_F - |c|_F)^2 / 2 sigma^2) and |x(v)|_F >= entry_scale*|v|.
  double reach = center_frob_ + 10.0 * sigma_;
  return reach / std::max(1e-12, std::abs(entry_scale)) + 2.0;
}

}  // namespace gl3tf
