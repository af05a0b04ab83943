#include "core/cones.hpp"

namespace gl3tf {

int tau(Parabolic p1, Parabolic p2, const AVector& h) {
  for (const AVector& a : delta_between(p1, p2))
    if (pair(a, h) <= 0) return 0;
  return 1;
}

int tau_hat(Parabolic p, const AVector& h) {
  for (const AVector& w : delta_hat(p))
    if (pair(w, h) <= 0) return 0;
  return 1;
}

int tau_hat_prime(Parabolic p, const AVector& h) {
  for (const AVector& w : delta_hat(p))
    if (pair(w, h) > 0) return 0;
  return 1;
}

int sigma(Parabolic p1, Parabolic p2, const AVector& h) {
  if (!is_subset(p1, p2))
    throw std::invalid_argument("sigma: " + name(p1) + " not contained in " + name(p2));
  int total = 0;
  for (Parabolic p3 : kParabolics) {
    if (!is_subset(p2, p3)) continue;
    int sign = ((corank(p2) - corank(p3)) % 2 == 0) ? 1 : -1;
    total += sign * tau(p1, p3, h) * tau_hat(p3, h);
  }
  return total;
}

int sigma_direct(Parabolic p1, Parabolic p2, const AVector& h) {
  if (!is_subset(p1, p2))
    throw std::invalid_argument("sigma_direct: " + name(p1) + " not contained in " + name(p2));
  const auto inner = delta_between(p1, p2);
  for (const AVector& a : inner)
    if (pair(a, h) <= 0) return 0;
  for (const AVector& a : delta_full(p1)) {
    bool in_inner = false;
    for (const AVector& b : inner)
      if (a == b) { in_inner = true; break; }
    if (!in_inner && pair(a, h) > 0) return 0;
  }
  for (const AVector& w : delta_hat(p2))
    if (pair(w, h) <= 0) return 0;
  return 1;
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool on_any_wall(const AVector& h) {
  auto [wa, wb] = dual_weights();
  const AVector fns[5] = {alpha_root(), beta_root(), alpha_root() + beta_root(), wa, wb};
  for (const AVector& f : fns)
    if (pair(f, h) == 0) return true;
  return false;
}

// Rational kernel bases of the five wall functionals, for the sweep grid.
std::vector<std::pair<AVector, AVector>> wall_kernels() {
  auto [wa, wb] = dual_weights();
  auto kernel = [](const AVector& w) -> std::pair<AVector, AVector> {
    // <w,H>=0 solved for the first nonzero coordinate of w
    if (w.c[0] != 0)
      return {AVector{-w.c[1] / w.c[0], Rat(1), Rat(0)}, AVector{-w.c[2] / w.c[0], Rat(0), Rat(1)}};
    return {AVector{Rat(1), Rat(0), Rat(0)}, AVector{Rat(0), -w.c[2] / w.c[1], Rat(1)}};
  };
  std::vector<std::pair<AVector, AVector>> out;
  for (const AVector& w : {alpha_root(), beta_root(), alpha_root() + beta_root(), wa, wb})
    out.push_back(kernel(w));
  return out;
}

std::vector<std::pair<Parabolic, Parabolic>> nested_pairs() {
  std::vector<std::pair<Parabolic, Parabolic>> v;
  for (Parabolic a : kParabolics)
    for (Parabolic b : kParabolics)
      if (is_subset(a, b)) v.emplace_back(a, b);
  return v;
}

}  // namespace

AVector GenericSampler::next() {
  if (index_ / 64 != chunk_) {
    chunk_ = index_ / 64;
    state_ = splitmix64(seed_ ^ (0xabcdefULL + 0x1000003ULL * static_cast<uint64_t>(chunk_)));
  }
  for (;;) {
    state_ = splitmix64(state_);
    uint64_t r = state_;
    AVector h;
    for (int k = 0; k < 3; ++k) {
      int num = static_cast<int>((r >> (20 * k)) % 81) - 40;
      int den = static_cast<int>((r >> (20 * k + 7)) % 7) + 1;
      h.c[k] = Rat(num, den);
      h.c[k].canonicalize();
    }
    if (!on_any_wall(h)) {
      ++index_;
      return h;
    }
  }
}

VerifyReport verify_sigma_equivalence(long samples, uint64_t seed, bool wall_sweep) {
  VerifyReport rep;
  rep.identity = "sigma == sigma_direct (all nested pairs)";
  const auto pairs = nested_pairs();
  auto check = [&](const AVector& h) {
    for (auto [p1, p2] : pairs) {
      if (sigma(p1, p2, h) != sigma_direct(p1, p2, h)) {
        if (rep.failures.size() < 32)
          rep.failures.push_back(name(p1) + "<=" + name(p2) + " at H=" + h.str());
        else
          rep.failures.push_back("...");
        return;
      }
    }
  };
  GenericSampler sampler(seed);
  for (long i = 0; i < samples; ++i) check(sampler.next());
  rep.samples = samples;
  if (wall_sweep) {
    for (const auto& [u, v] : wall_kernels()) {
      for (int i = -10; i <= 10; ++i) {
        for (int j = -10; j <= 10; ++j) {
          check(Rat(i) * u + Rat(j) * v);
          ++rep.wall_points;
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_truncation_identity(Parabolic p1, long samples, uint64_t seed) {
  if (p1 == Parabolic::G)
    throw std::invalid_argument("verify_truncation_identity: P1 must be proper");
  VerifyReport rep;
  rep.identity = "1 + sum (-1)^{dim A/Z} tau_hat == tau_hat_prime, P1=" + name(p1);
  GenericSampler sampler(seed);
  for (long i = 0; i < samples; ++i) {
    AVector h = sampler.next();
    int lhs = 1;
    for (Parabolic p : kParabolics) {
      if (p == Parabolic::G || !is_subset(p1, p)) continue;
      lhs += ((corank(p) % 2 == 0) ? 1 : -1) * tau_hat(p, h);
    }
    if (lhs != tau_hat_prime(p1, h)) {
      if (rep.failures.size() < 32) rep.failures.push_back("H=" + h.str());
    }
  }
  rep.samples = samples;
  return rep;
}

VerifyReport verify_parabolic_moebius() {
  VerifyReport rep;
  rep.identity = "sum_{P1<=P<=P2} (-1)^{dim(A/A2)} == [P1==P2]";
  for (auto [p1, p2] : nested_pairs()) {
    int total = 0;
    for (Parabolic p : kParabolics) {
      if (is_subset(p1, p) && is_subset(p, p2))
        total += ((corank(p) - corank(p2)) % 2 == 0) ? 1 : -1;
    }
    int expect = (p1 == p2) ? 1 : 0;
    ++rep.samples;
    if (total != expect)
      rep.failures.push_back(name(p1) + "<=" + name(p2) + " sum=" + std::to_string(total));
  }
  return rep;
}

}  // namespace gl3tf
