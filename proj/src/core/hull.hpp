#pragma once

#include <cstdint>
#include <vector>

#include "core/rootdata.hpp"

namespace gl3tf {

// Vertex family {Y_s : s in S3} in the sum-zero plane, indexed in the fixed
// weyl_group() order.  The vertex attached to s carries the chamber data
// Delta_s = {s^{-1}alpha, s^{-1}beta}.
struct HullSpec {
  std::array<AVector, 6> vertices{};

  // Weyl-orbit family Y_s = s^{-1} T.
  static HullSpec orbit_of(const AVector& t);

  // Y_s = s^{-1}(T - H_s) from the truncation point and the per-chamber
  // H-data "s:a,b,c;..." keyed by one-line Weyl labels ("123" = identity);
  // missing labels default to H_s = 0.  Everything is projected to the
  // sum-zero plane.
  static HullSpec from_t_and_h(const AVector& t, const std::string& h_family);
};

// Euclidean area of the convex hull of the vertices, embedded isometrically
// into R^2; 0 for affinely degenerate families.
double hull_volume_direct(const HullSpec& spec);

// The same volume by the chamber exponential sum
//   sqrt(3) * lim_{h->0} sum_s exp<h d, Y_s> / prod_{eta in Delta_s} <h d, eta>
// along the ray lambda = h*direction, Richardson-extrapolated over the given
// decreasing positive h sequence.  The sqrt(3) converts the root-lattice
// normalization of the limit into the Euclidean area of the embedding.
// Valid for orthogonal vertex families (Y_s - Y_s' along the wall between
// adjacent chambers); the two singular orders in h cancel there and are
// evaluated in cancellation-free form.  Throws std::domain_error when the
// direction pairs to zero against any chamber wall.
double hull_volume_limit(const HullSpec& spec, const AVector& direction,
                         const std::vector<double>& h_sequence);
double hull_volume_limit(const HullSpec& spec);  // default ray and ladder

std::vector<double> default_h_sequence();
AVector default_hull_direction();

// Draws a random positive orthogonal vertex family by walking the six
// chambers in cyclic order with nonnegative rational steps along the shared
// walls (closure forces opposite walls to use equal steps), then translating
// by a random base point.  Deterministic in seed.
HullSpec random_orthogonal_spec(uint64_t seed, long index);

// Length of the interval
//   [ -varpi_alpha(T) - varpi_beta(Hm) + varpi_alpha(Hn_flip),
//      varpi_beta(T) - varpi_beta(Hm) ],
// clamped at 0 when empty.
double interval_weight_m21(const AVector& hm, const AVector& hn_flip, const AVector& t);

// (a_{P0}/2) * [ 2 ln A ln B - (ln A/D)^2 - (ln B/C)^2 ] with
// A = |(1, n3, n1*n3 - n2)|, B = |(1, n1, n2)|, C = |(1, n1)|, D = |(1, n3)|.
double c_m0_weight(double n1, double n2, double n3);

}  // namespace gl3tf
