#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/avector.hpp"

namespace gl3tf {

// The four standard parabolic subgroups of GL(3).
enum class Parabolic { P0, P21, P12, G };

constexpr std::array<Parabolic, 4> kParabolics{Parabolic::P0, Parabolic::P21,
                                               Parabolic::P12, Parabolic::G};

std::string name(Parabolic p);
Parabolic parabolic_from_name(const std::string& s);

struct Root {
  AVector v;
  std::string label;
};

// alpha = e1-e2, beta = e2-e3.
std::pair<Root, Root> simple_roots();
AVector alpha_root();
AVector beta_root();

// varpi_alpha = (2/3,-1/3,-1/3), varpi_beta = (1/3,1/3,-2/3).
std::pair<AVector, AVector> dual_weights();

// Half the sum of the roots of A_P on the unipotent radical n_P.
AVector rho(Parabolic p);

// dim(A_P / Z): 2 for P0, 1 for P21/P12, 0 for G.
int corank(Parabolic p);

// Partial order on standard parabolics (P21 and P12 are incomparable).
bool is_subset(Parabolic p1, Parabolic p2);

// Dual-weight set Delta-hat_P.
std::vector<AVector> delta_hat(Parabolic p);

// Simple roots Delta_P of (P, A_P), as functionals on a_P pulled back through
// the orthogonal projection a0 -> a_P.  For P21 the single root is (3/2)
// varpi_beta (it agrees with beta on a_{P21} and kills a0^{P21}); likewise
// for P12.
std::vector<AVector> delta_full(Parabolic p);

// Delta_{P1}^{P2} for nested standard P1 <= P2, same pullback convention.
// Throws if P1 is not contained in P2.
std::vector<AVector> delta_between(Parabolic p1, Parabolic p2);

// a_P = det(<varpi_m, varpi_n>)^{1/2} over Delta-hat_P.  Undefined for G.
double gram_constant(Parabolic p);

// S3 acting on a0 by coordinate permutation: (sH)_i = H_{s^{-1}(i)}.
struct WeylElement {
  std::array<int, 3> perm{0, 1, 2};  // perm[i] = image of position i

  AVector apply(const AVector& h) const {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[perm[i]] = i;
    return {h.c[inv[0]], h.c[inv[1]], h.c[inv[2]]};
  }
  WeylElement inverse() const {
    WeylElement r;
    for (int i = 0; i < 3; ++i) r.perm[perm[i]] = i;
    return r;
  }
  WeylElement compose(const WeylElement& o) const {  // this after o
    WeylElement r;
    for (int i = 0; i < 3; ++i) r.perm[i] = perm[o.perm[i]];
    return r;
  }
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
  bool is_identity() const { return perm == std::array<int, 3>{0, 1, 2}; }
  std::string str() const;
};

// All six elements, in a fixed order (identity first).
const std::vector<WeylElement>& weyl_group();

// (component in a0^P, component in a_P); exact orthogonal decomposition.
std::pair<AVector, AVector> project(const AVector& h, Parabolic p);

// Omega(a_source; constraint): restrictions s of Weyl elements with
// s a_source = a_{P'} for a standard P' with a_{P'} containing a_constraint,
// and s^{-1} alpha positive for every alpha in Delta_{P'}^{constraint}.
// Cardinalities from a0: 6 (P0), 3 (P21), 3 (P12), 1 (G).
std::vector<WeylElement> omega_restricted(Parabolic source, Parabolic constraint);

}  // namespace gl3tf
