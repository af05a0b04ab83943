#include "core/hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gl3tf {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Pt {
  double x, y;
};

// Isometric embedding of the sum-zero plane.
Pt embed(const AVector& v) {
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  static const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
  double a = to_double(v.c[0]), b = to_double(v.c[1]), c = to_double(v.c[2]);
  return {(a - b) * inv_sqrt2, (a + b - 2 * c) * inv_sqrt6};
}

double cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double stable_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

double e2_stable(double u) {
  if (std::abs(u) < 1e-4) return 0.5 + u / 6.0 + u * u / 24.0 + u * u * u / 120.0;
  return (std::expm1(u) - u) / (u * u);
}

}  // namespace

HullSpec HullSpec::orbit_of(const AVector& t) {
  HullSpec spec;
  const auto& w = weyl_group();
  AVector tz = t.sum_zero_part();
  for (size_t i = 0; i < w.size(); ++i) spec.vertices[i] = w[i].inverse().apply(tz);
  return spec;
}

HullSpec HullSpec::from_t_and_h(const AVector& t, const std::string& h_family) {
  const auto& wg = weyl_group();
  std::array<AVector, 6> hs{};
  std::string entry;
  auto flush = [&] {
    if (entry.empty()) return;
    auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("hull H entry needs 'label:a,b,c': '" + entry + "'");
    std::string label = entry.substr(0, colon);
    AVector v = parse_avector(entry.substr(colon + 1));
    bool found = false;
    for (size_t i = 0; i < wg.size(); ++i) {
      if (wg[i].str() == label) {
        hs[i] = v;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown Weyl label: '" + label + "'");
    entry.clear();
  };
  for (char ch : h_family) {
    if (ch == ';') flush();
    else if (!isspace(static_cast<unsigned char>(ch))) entry += ch;
  }
  flush();
  HullSpec spec;
  for (size_t i = 0; i < wg.size(); ++i)
    spec.vertices[i] = wg[i].inverse().apply((t - hs[i]).sum_zero_part());
  return spec;
}

double hull_volume_direct(const HullSpec& spec) {
  // Exact dedup, then monotone chain on the embedded points.
  std::vector<AVector> uniq;
  for (const AVector& v : spec.vertices) {
    bool seen = false;
    for (const AVector& u : uniq)
      if (u == v) { seen = true; break; }
    if (!seen) uniq.push_back(v);
  }
  if (uniq.size() < 3) return 0.0;
  std::vector<Pt> pts;
  pts.reserve(uniq.size());
  for (const AVector& v : uniq) pts.push_back(embed(v));
  std::sort(pts.begin(), pts.end(),
            [](const Pt& a, const Pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Pt> hull;
  for (const Pt& p : pts) {  // lower chain
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {  // upper chain
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  if (hull.size() < 3) return 0.0;
  double area2 = 0.0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % hull.size()];
    area2 += a.x * b.y - b.x * a.y;
  }
  return std::abs(area2) / 2.0;
}

std::vector<double> default_h_sequence() {
  std::vector<double> h;
  for (int k = 0; k < 8; ++k) h.push_back(0.5 / (1 << k));
  return h;
}

AVector default_hull_direction() { return AVector::of_ints(5, -1, -4); }

double hull_volume_limit(const HullSpec& spec, const AVector& direction,
                         const std::vector<double>& h_sequence) {
  if (h_sequence.size() < 3)
    throw std::invalid_argument("hull_volume_limit: need at least 3 ladder points");
  for (size_t i = 1; i < h_sequence.size(); ++i)
    if (!(h_sequence[i] > 0) || h_sequence[i] >= h_sequence[i - 1])
      throw std::invalid_argument("hull_volume_limit: h sequence must be positive decreasing");

  // Degenerate-direction guard, exact: the chamber walls are +-alpha, +-beta,
  // +-(alpha+beta).
  const AVector a = alpha_root(), b = beta_root();
  if (pair(direction, a) == 0 || pair(direction, b) == 0 || pair(direction, a + b) == 0)
    throw std::domain_error("hull_volume_limit: direction lies on a chamber wall");

  const auto& wg = weyl_group();
  // Unit direction in the sum-zero plane.
  AVector dz = direction.sum_zero_part();
  double d[3] = {to_double(dz.c[0]), to_double(dz.c[1]), to_double(dz.c[2])};
  double dn = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
  for (double& x : d) x /= dn;

  // Centered vertices (the volume is translation invariant) and per-chamber
  // pairings x_s = <d, Y_s - c>, D_s = <d, s^-1 alpha><d, s^-1 beta>.
  double cx[3] = {0, 0, 0};
  double y[6][3];
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k) {
      y[i][k] = to_double(spec.vertices[i].c[k]);
      cx[k] += y[i][k] / 6.0;
    }
  double xs[6], ds[6], scale = 1.0;
  for (int i = 0; i < 6; ++i) {
    double nrm = 0;
    for (int k = 0; k < 3; ++k) {
      y[i][k] -= cx[k];
      nrm += y[i][k] * y[i][k];
    }
    scale = std::max(scale, std::sqrt(nrm));
    xs[i] = y[i][0] * d[0] + y[i][1] * d[1] + y[i][2] * d[2];
    WeylElement winv = wg[i].inverse();
    AVector ra = winv.apply(a), rb = winv.apply(b);
    double da = to_double(ra.c[0]) * d[0] + to_double(ra.c[1]) * d[1] + to_double(ra.c[2]) * d[2];
    double db = to_double(rb.c[0]) * d[0] + to_double(rb.c[1]) * d[1] + to_double(rb.c[2]) * d[2];
    ds[i] = da * db;
  }

  // F(h) = B/h + sum_s x_s^2 E2(x_s h) / D_s.  The 1/h^2 order has the
  // vertex-independent coefficient sum_s 1/D_s which vanishes identically;
  // B = sum_s x_s/D_s vanishes for orthogonal families.  Writing the
  // exponential through E2 keeps the evaluation cancellation-free.
  std::vector<double> bterms, hs, fs;
  for (int i = 0; i < 6; ++i) bterms.push_back(xs[i] / ds[i]);
  const double bsum = stable_sum(bterms);
  for (double h0 : h_sequence) {
    double h = h0 / scale;
    std::vector<double> terms;
    for (int i = 0; i < 6; ++i) terms.push_back(xs[i] * xs[i] * e2_stable(xs[i] * h) / ds[i]);
    hs.push_back(h);
    fs.push_back(bsum / h + stable_sum(terms));
  }
  // Neville extrapolation to h = 0.
  std::vector<double> tab = fs;
  for (size_t j = 1; j < tab.size(); ++j)
    for (size_t i = tab.size() - 1; i >= j; --i)
      tab[i] = tab[i] + (tab[i] - tab[i - 1]) * hs[i] / (hs[i - j] - hs[i]);
  return tab.back() * std::sqrt(3.0);
}

double hull_volume_limit(const HullSpec& spec) {
  return hull_volume_limit(spec, default_hull_direction(), default_h_sequence());
}

namespace {

// Cyclic data of the six chambers: order of weyl_group() indices around the
// origin and the signed wall crossed from each chamber to the next.
struct ChamberCycle {
  std::array<int, 6> order;
  std::array<AVector, 6> wall;  // oriented positive on the chamber it leaves
};

const ChamberCycle& chamber_cycle() {
  static const ChamberCycle cyc = [] {
    const auto& wg = weyl_group();
    const AVector rho0 = AVector::of_ints(1, 0, -1);
    std::array<AVector, 6> rep;
    for (int i = 0; i < 6; ++i) rep[i] = wg[i].inverse().apply(rho0);
    // Angular sort in the sum-zero plane with exact comparisons; anisotropic
    // coordinates preserve the cyclic order.
    auto planar = [](const AVector& v) {
      return std::pair<Rat, Rat>(v.c[0] - v.c[1], v.c[0] + v.c[1] - 2 * v.c[2]);
    };
    auto half = [&](const AVector& v) {
      auto [x, y] = planar(v);
      return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
    };
    std::array<int, 6> idx{0, 1, 2, 3, 4, 5};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
      int hi = half(rep[i]), hj = half(rep[j]);
      if (hi != hj) return hi < hj;
      auto [xi, yi] = planar(rep[i]);
      auto [xj, yj] = planar(rep[j]);
      return xi * yj - xj * yi > 0;
    });
    ChamberCycle c;
    c.order = idx;
    const AVector walls[3] = {alpha_root(), beta_root(), alpha_root() + beta_root()};
    for (int k = 0; k < 6; ++k) {
      const AVector& r1 = rep[idx[k]];
      const AVector& r2 = rep[idx[(k + 1) % 6]];
      int found = -1;
      for (int t = 0; t < 3; ++t) {
        Rat s1 = pair(walls[t], r1), s2 = pair(walls[t], r2);
        if ((s1 > 0) != (s2 > 0)) { found = t; break; }
      }
      const AVector& w = walls[found];
      c.wall[k] = (pair(w, r1) > 0) ? w : -w;
    }
    return c;
  }();
  return cyc;
}

}  // namespace

HullSpec random_orthogonal_spec(uint64_t seed, long index) {
  const ChamberCycle& cyc = chamber_cycle();
  uint64_t st = splitmix64(seed ^ (0x5eedULL + 0x10001ULL * static_cast<uint64_t>(index)));
  auto draw = [&](int lo, int hi) {
    st = splitmix64(st);
    return lo + static_cast<int>(st % static_cast<uint64_t>(hi - lo + 1));
  };
  AVector base{Rat(draw(-8, 8), draw(1, 5)), Rat(draw(-8, 8), draw(1, 5)),
               Rat(draw(-8, 8), draw(1, 5))};
  for (auto& c : base.c) c.canonicalize();
  base = base.sum_zero_part();
  // Nonnegative steps; closure around the 6-cycle forces opposite walls to
  // carry equal steps.
  Rat t[6];
  for (int i = 0; i < 3; ++i) {
    t[i] = Rat(draw(0, 12), draw(1, 4));
    t[i].canonicalize();
    t[i + 3] = t[i];
  }
  HullSpec spec;
  AVector cur = base;
  for (int k = 0; k < 6; ++k) {
    spec.vertices[cyc.order[k]] = cur;
    cur = cur + t[k] * cyc.wall[k];
  }
  if (!(cur == base)) throw std::logic_error("orthogonal walk did not close");
  return spec;
}

double interval_weight_m21(const AVector& hm, const AVector& hn_flip, const AVector& t) {
  auto [wa, wb] = dual_weights();
  Rat left = -pair(wa, t) - pair(wb, hm) + pair(wa, hn_flip);
  Rat right = pair(wb, t) - pair(wb, hm);
  Rat len = right - left;
  if (len < 0) return 0.0;
  return to_double(len);
}

double c_m0_weight(double n1, double n2, double n3) {
  const double a_p0 = 1.0 / std::sqrt(3.0);
  double a = std::sqrt(1.0 + n3 * n3 + (n1 * n3 - n2) * (n1 * n3 - n2));
  double b = std::sqrt(1.0 + n1 * n1 + n2 * n2);
  double c = std::sqrt(1.0 + n1 * n1);
  double d = std::sqrt(1.0 + n3 * n3);
  double la = std::log(a), lb = std::log(b);
  double lad = std::log(a / d), lbc = std::log(b / c);
  return a_p0 / 2.0 * (2.0 * la * lb - lad * lad - lbc * lbc);
}

}  // namespace gl3tf
