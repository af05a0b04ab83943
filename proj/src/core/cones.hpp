#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/rootdata.hpp"

namespace gl3tf {

// {0,1}-valued cone indicators on a0.  tau and tau_hat use strict >0, the
// primed variant uses <=0; all pairings are exact.

// 1 iff alpha(H) > 0 for all alpha in Delta_{P1}^{P2}.  Requires P1 <= P2.
int tau(Parabolic p1, Parabolic p2, const AVector& h);

// 1 iff varpi(H) > 0 for all varpi in Delta-hat_P.
int tau_hat(Parabolic p, const AVector& h);

// 1 iff varpi(H) <= 0 for all varpi in Delta-hat_P.
int tau_hat_prime(Parabolic p, const AVector& h);

// sigma_{P1}^{P2}(H) by its defining alternating sum over P3 >= P2.
int sigma(Parabolic p1, Parabolic p2, const AVector& h);

// The same function by its direct cone characterization:
//   alpha(H) > 0 on Delta_{P1}^{P2},  alpha(H) <= 0 on Delta_{P1} minus it,
//   varpi(H) > 0 on Delta-hat_{P2}.
int sigma_direct(Parabolic p1, Parabolic p2, const AVector& h);

struct VerifyReport {
  std::string identity;
  long samples = 0;
  long wall_points = 0;
  std::vector<std::string> failures;  // offending H, at most a few dozen kept
  bool pass() const { return failures.empty(); }
};

// Draws H with rational coordinates (numerator in [-40,40], denominator in
// [1,7]), rejecting points on any root/weight wall.  The stream is chunked:
// every block of 64 samples is generated from its own derived seed, so a
// parallel map over chunks reproduces the sequential stream.
class GenericSampler {
 public:
  explicit GenericSampler(uint64_t seed) : seed_(seed) {}
  AVector next();

 private:
  uint64_t seed_;
  long index_ = 0;
  long chunk_ = -1;
  uint64_t state_ = 0;
};

// Checks sigma == sigma_direct over all nested standard pairs, on `samples`
// generic points plus a structured sweep over every wall.
VerifyReport verify_sigma_equivalence(long samples, uint64_t seed, bool wall_sweep = true);

// Checks 1 + sum_{P >= P1, P != G} (-1)^{dim A/Z} tau_hat_P(H) ==
// tau_hat_prime_{P1}(H).
VerifyReport verify_truncation_identity(Parabolic p1, long samples, uint64_t seed);

// Exhaustive alternating-sum identity over nested standard pairs:
// sum_{P1 <= P <= P2} (-1)^{dim(A_P/A_{P2})} == [P1 == P2].
VerifyReport verify_parabolic_moebius();

}  // namespace gl3tf
