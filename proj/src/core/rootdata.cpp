#include "core/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gl3tf {

std::string name(Parabolic p) {
  switch (p) {
    case Parabolic::P0: return "P0";
    case Parabolic::P21: return "P21";
    case Parabolic::P12: return "P12";
    case Parabolic::G: return "G";
  }
  return "?";
}

Parabolic parabolic_from_name(const std::string& s) {
  if (s == "P0") return Parabolic::P0;
  if (s == "P21") return Parabolic::P21;
  if (s == "P12") return Parabolic::P12;
  if (s == "G") return Parabolic::G;
  throw std::invalid_argument("unknown parabolic: '" + s + "'");
}

AVector alpha_root() { return AVector::of_ints(1, -1, 0); }
AVector beta_root() { return AVector::of_ints(0, 1, -1); }

std::pair<Root, Root> simple_roots() {
  return {Root{alpha_root(), "alpha"}, Root{beta_root(), "beta"}};
}

std::pair<AVector, AVector> dual_weights() {
  AVector wa{Rat(2, 3), Rat(-1, 3), Rat(-1, 3)};
  AVector wb{Rat(1, 3), Rat(1, 3), Rat(-2, 3)};
  return {wa, wb};
}

AVector rho(Parabolic p) {
  switch (p) {
    case Parabolic::P0: return AVector::of_ints(1, 0, -1);
    case Parabolic::P21: return {Rat(1, 2), Rat(1, 2), Rat(-1)};
    case Parabolic::P12: return {Rat(1), Rat(-1, 2), Rat(-1, 2)};
    case Parabolic::G: return AVector::of_ints(0, 0, 0);
  }
  return {};
}

int corank(Parabolic p) {
  switch (p) {
    case Parabolic::P0: return 2;
    case Parabolic::P21:
    case Parabolic::P12: return 1;
    case Parabolic::G: return 0;
  }
  return 0;
}

bool is_subset(Parabolic p1, Parabolic p2) {
  if (p1 == p2) return true;
  if (p1 == Parabolic::P0) return true;
  if (p2 == Parabolic::G) return true;
  return false;
}

std::vector<AVector> delta_hat(Parabolic p) {
  auto [wa, wb] = dual_weights();
  switch (p) {
    case Parabolic::P0: return {wa, wb};
    case Parabolic::P21: return {wb};
    case Parabolic::P12: return {wa};
    case Parabolic::G: return {};
  }
  return {};
}

std::vector<AVector> delta_full(Parabolic p) {
  auto [wa, wb] = dual_weights();
  switch (p) {
    case Parabolic::P0: return {alpha_root(), beta_root()};
    case Parabolic::P21: return {Rat(3, 2) * wb};
    case Parabolic::P12: return {Rat(3, 2) * wa};
    case Parabolic::G: return {};
  }
  return {};
}

std::vector<AVector> delta_between(Parabolic p1, Parabolic p2) {
  if (!is_subset(p1, p2))
    throw std::invalid_argument("delta_between: " + name(p1) + " not contained in " + name(p2));
  if (p1 == p2) return {};
  if (p1 == Parabolic::P0) {
    switch (p2) {
      case Parabolic::P21: return {alpha_root()};
      case Parabolic::P12: return {beta_root()};
      case Parabolic::G: return {alpha_root(), beta_root()};
      default: return {};
    }
  }
  // P21 < G or P12 < G: the full simple set of the smaller one.
  return delta_full(p1);
}

double gram_constant(Parabolic p) {
  if (p == Parabolic::G)
    throw std::domain_error("gram_constant: empty dual-weight set for G");
  auto dh = delta_hat(p);
  if (dh.size() == 1) return std::sqrt(to_double(pair(dh[0], dh[0])));
  Rat det = pair(dh[0], dh[0]) * pair(dh[1], dh[1]) - pair(dh[0], dh[1]) * pair(dh[1], dh[0]);
  return std::sqrt(to_double(det));
}

std::string WeylElement::str() const {
  // One-line notation: images of 1,2,3; "123" is the identity.
  return std::to_string(perm[0] + 1) + std::to_string(perm[1] + 1) + std::to_string(perm[2] + 1);
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> g = [] {
    std::vector<WeylElement> v;
    std::array<int, 3> p{0, 1, 2};
    do {
      v.push_back(WeylElement{p});
    } while (std::next_permutation(p.begin(), p.end()));
    // identity comes first under lexicographic next_permutation
    return v;
  }();
  return g;
}

namespace {

// Rational basis of a_P inside a0.
std::vector<AVector> a_p_basis(Parabolic p) {
  switch (p) {
    case Parabolic::P0:
      return {AVector::of_ints(1, 0, 0), AVector::of_ints(0, 1, 0), AVector::of_ints(0, 0, 1)};
    case Parabolic::P21:
      return {AVector::of_ints(1, 1, 0), AVector::of_ints(0, 0, 1)};
    case Parabolic::P12:
      return {AVector::of_ints(1, 0, 0), AVector::of_ints(0, 1, 1)};
    case Parabolic::G:
      return {AVector::of_ints(1, 1, 1)};
  }
  return {};
}

bool in_subspace(const AVector& v, Parabolic p) {
  // a_P = {H : alpha(H)=0 for alpha in Delta_0^P}; Delta_0^P is the
  // complement of the functionals listed in delta_hat.
  switch (p) {
    case Parabolic::P0: return true;
    case Parabolic::P21: return pair(alpha_root(), v) == 0;
    case Parabolic::P12: return pair(beta_root(), v) == 0;
    case Parabolic::G:
      return pair(alpha_root(), v) == 0 && pair(beta_root(), v) == 0;
  }
  return false;
}

// Interior point of the positive chamber of a_P (used for positivity of
// restricted roots).
AVector chamber_point(Parabolic p) {
  switch (p) {
    case Parabolic::P0: return AVector::of_ints(2, 0, -2);
    case Parabolic::P21: return AVector::of_ints(1, 1, -2);
    case Parabolic::P12: return AVector::of_ints(2, -1, -1);
    case Parabolic::G: return AVector::of_ints(0, 0, 0);
  }
  return {};
}

}  // namespace

std::pair<AVector, AVector> project(const AVector& h, Parabolic p) {
  // a0^P is spanned by the coroots of Delta_0^P; project orthogonally onto it
  // in exact arithmetic, remainder lies in a_P.
  switch (p) {
    case Parabolic::P0:
      return {AVector::of_ints(0, 0, 0), h};
    case Parabolic::P21: {
      AVector a = alpha_root();
      AVector up = (pair(h, a) / pair(a, a)) * a;
      return {up, h - up};
    }
    case Parabolic::P12: {
      AVector b = beta_root();
      AVector up = (pair(h, b) / pair(b, b)) * b;
      return {up, h - up};
    }
    case Parabolic::G: {
      AVector z = h.sum_zero_part();
      return {z, h - z};
    }
  }
  return {AVector::of_ints(0, 0, 0), h};
}

std::vector<WeylElement> omega_restricted(Parabolic source, Parabolic constraint) {
  if (source == Parabolic::G)
    throw std::invalid_argument("omega_restricted: source must be proper");
  const auto src_basis = a_p_basis(source);
  const AVector src_chamber = chamber_point(source);

  std::vector<WeylElement> out;
  auto restriction_seen = [&](const WeylElement& w) {
    for (const WeylElement& u : out) {
      bool same = true;
      for (const AVector& b : src_basis)
        if (!(w.apply(b) == u.apply(b))) { same = false; break; }
      if (same) return true;
    }
    return false;
  };

  for (const WeylElement& w : weyl_group()) {
    // Identify the standard parabolic P' with w(a_source) = a_{P'}.
    Parabolic pprime = source;
    bool found = false;
    for (Parabolic q : kParabolics) {
      if (corank(q) != corank(source)) continue;
      bool all_in = true;
      for (const AVector& b : src_basis)
        if (!in_subspace(w.apply(b), q)) { all_in = false; break; }
      if (all_in) { pprime = q; found = true; break; }
    }
    if (!found) continue;  // image is not a standard a_P (never for GL(3))
    // a_{P'} must contain a_{constraint}, i.e. P' contained in constraint.
    if (!is_subset(pprime, constraint)) continue;
    // s^{-1} alpha positive for alpha in Delta_{P'}^{constraint}: pull the
    // functional back and test on the source chamber.
    WeylElement winv = w.inverse();
    bool ok = true;
    for (const AVector& a : delta_between(pprime, constraint)) {
      if (pair(winv.apply(a), src_chamber) <= 0) { ok = false; break; }
    }
    if (!ok) continue;
    if (!restriction_seen(w)) out.push_back(w);
  }
  return out;
}

}  // namespace gl3tf
