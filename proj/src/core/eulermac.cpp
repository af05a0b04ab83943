#include "core/eulermac.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace gl3tf {

namespace {

// Memo cache keyed by (s, eps, derivative?): concurrent readers, single
// writer.  Results are pure, so interleaving cannot change them.
class ZetaCache {
 public:
  bool lookup(double s, double eps, bool deriv, double* out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find({s, eps, deriv});
    if (it == map_.end()) return false;
    *out = it->second;
    return true;
  }
  void store(double s, double eps, bool deriv, double v) {
    std::unique_lock lock(mu_);
    map_.emplace(Key{s, eps, deriv}, v);
  }

 private:
  using Key = std::tuple<double, double, bool>;
  mutable std::shared_mutex mu_;
  std::map<Key, double> map_;
};

ZetaCache& cache() {
  static ZetaCache c;
  return c;
}

// B_2, B_4, ..., B_26.
const double kBern[13] = {1.0 / 6,
                          -1.0 / 30,
                          1.0 / 42,
                          -1.0 / 30,
                          5.0 / 66,
                          -691.0 / 2730,
                          7.0 / 6,
                          -3617.0 / 510,
                          43867.0 / 798,
                          -174611.0 / 330,
                          854513.0 / 138,
                          -236364091.0 / 2730,
                          8553103.0 / 6};

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double rising(double s, int m) {
  double p = 1;
  for (int j = 0; j < m; ++j) p *= s + j;
  return p;
}

double rising_logderiv(double s, int m) {  // d/ds ln (s)_m
  double t = 0;
  for (int j = 0; j < m; ++j) t += 1.0 / (s + j);
  return t;
}

int choose_n(double s, double eps, int kmax) {
  // Remainder is below ~|B_{2K+2}/(2K+2)! (s)_{2K+1} N^{-s-2K-1}|; walk N up
  // until the bound clears the target with margin.
  for (int n : {16, 24, 32, 48, 64, 96, 128}) {
    double bound = std::abs(kBern[kmax] / factorial(2 * kmax + 2) * rising(s, 2 * kmax + 1)) *
                   std::pow(n, -s - 2 * kmax - 1);
    if (2 * bound < eps * 0.1) return n;
  }
  return 128;
}

void validate(double s) {
  if (!(s > 0)) throw std::domain_error("zeta: s must be positive");
  if (s == 1.0) throw std::domain_error("zeta: pole at s = 1");
}

}  // namespace

double zeta_em(double s, double target_eps) {
  validate(s);
  double cached;
  if (cache().lookup(s, target_eps, false, &cached)) return cached;
  const int kmax = 10;
  const int n = choose_n(s, std::max(target_eps, 1e-15), kmax);
  double sum = 0;
  for (int k = n - 1; k >= 1; --k) sum += std::pow(k, -s);
  double ns = std::pow(n, -s);
  sum += ns / 2.0 + ns * n / (s - 1.0);
  for (int k = 1; k <= kmax; ++k)
    sum += kBern[k - 1] / factorial(2 * k) * rising(s, 2 * k - 1) * ns * std::pow(n, -2 * k + 1);
  cache().store(s, target_eps, false, sum);
  return sum;
}

double zeta_em_derivative(double s, double target_eps) {
  validate(s);
  double cached;
  if (cache().lookup(s, target_eps, true, &cached)) return cached;
  const int kmax = 10;
  const int n = choose_n(s, std::max(target_eps, 1e-15), kmax);
  const double ln_n = std::log(n);
  double sum = 0;
  for (int k = n - 1; k >= 2; --k) sum += -std::log(k) * std::pow(k, -s);
  double ns = std::pow(n, -s);
  sum += -ln_n * ns / 2.0;
  sum += ns * n * (-ln_n / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
  for (int k = 1; k <= kmax; ++k) {
    double r = rising(s, 2 * k - 1);
    sum += kBern[k - 1] / factorial(2 * k) * ns * std::pow(n, -2 * k + 1) * r *
           (rising_logderiv(s, 2 * k - 1) - ln_n);
  }
  cache().store(s, target_eps, true, sum);
  return sum;
}

namespace {

double harmonic(int m) {
  double h = 0;
  for (int k = 1; k <= m; ++k) h += 1.0 / k;
  return h;
}

}  // namespace

double stieltjes_gamma0() {
  static const double g0 = [] {
    const int n = 64, jmax = 8;
    double s = 0;
    for (int k = n; k >= 1; --k) s += 1.0 / k;
    s -= std::log(static_cast<double>(n)) + 0.5 / n;
    double n2 = static_cast<double>(n) * n;
    double np = n2;
    for (int j = 1; j <= jmax; ++j) {
      s += kBern[j - 1] / (2.0 * j) / np;
      np *= n2;
    }
    return s;
  }();
  return g0;
}

double stieltjes_gamma1() {
  static const double g1 = [] {
    const int n = 64, jmax = 8;
    const double ln_n = std::log(static_cast<double>(n));
    double s = 0;
    for (int k = n; k >= 2; --k) s += std::log(static_cast<double>(k)) / k;
    s -= ln_n * ln_n / 2.0 + ln_n / (2.0 * n);
    double n2 = static_cast<double>(n) * n;
    double np = n2;
    for (int j = 1; j <= jmax; ++j) {
      s += kBern[j - 1] / (2.0 * j) * (ln_n - harmonic(2 * j - 1)) / np;
      np *= n2;
    }
    return s;
  }();
  return g1;
}

}  // namespace gl3tf
