#include "core/ratmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl3tf {

RationalMatrix3 RationalMatrix3::identity() { return scalar(Rat(1)); }

RationalMatrix3 RationalMatrix3::scalar(const Rat& z) {
  RationalMatrix3 m;
  m.at(0, 0) = z;
  m.at(1, 1) = z;
  m.at(2, 2) = z;
  return m;
}

RationalMatrix3 RationalMatrix3::z_times_unipotent(const Rat& z, const Rat& v12, const Rat& v13,
                                                   const Rat& v23) {
  RationalMatrix3 m = scalar(z);
  m.at(0, 1) = z * v12;
  m.at(0, 2) = z * v13;
  m.at(1, 2) = z * v23;
  return m;
}

RationalMatrix3 RationalMatrix3::diag(const Rat& x, const Rat& y, const Rat& z) {
  RationalMatrix3 m;
  m.at(0, 0) = x;
  m.at(1, 1) = y;
  m.at(2, 2) = z;
  return m;
}

RationalMatrix3 RationalMatrix3::companion(const Rat& c0, const Rat& c1, const Rat& c2) {
  RationalMatrix3 m;
  m.at(1, 0) = 1;
  m.at(2, 1) = 1;
  m.at(0, 2) = -c0;
  m.at(1, 2) = -c1;
  m.at(2, 2) = -c2;
  return m;
}

RationalMatrix3 RationalMatrix3::operator*(const RationalMatrix3& o) const {
  RationalMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s = 0;
      for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

RationalMatrix3 RationalMatrix3::operator+(const RationalMatrix3& o) const {
  RationalMatrix3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

RationalMatrix3 RationalMatrix3::operator-(const RationalMatrix3& o) const {
  RationalMatrix3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

RationalMatrix3 operator*(const Rat& s, const RationalMatrix3& m) {
  RationalMatrix3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = s * m.a[i];
  return r;
}

Rat RationalMatrix3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Rat RationalMatrix3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

RationalMatrix3 RationalMatrix3::inverse() const {
  Rat d = det();
  if (d == 0) throw std::domain_error("matrix is singular");
  RationalMatrix3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r1 = (i + 1) % 3, r2 = (i + 2) % 3, c1 = (j + 1) % 3, c2 = (j + 2) % 3;
      adj.at(j, i) = at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
    }
  return (Rat(1) / d) * adj;
}

int RationalMatrix3::rank() const {
  std::array<Rat, 9> w = a;
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (w[3 * r + col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    for (int j = 0; j < 3; ++j) std::swap(w[3 * rank + j], w[3 * pivot + j]);
    for (int r = rank + 1; r < 3; ++r) {
      if (w[3 * r + col] == 0) continue;
      Rat f = w[3 * r + col] / w[3 * rank + col];
      for (int j = 0; j < 3; ++j) w[3 * r + j] -= f * w[3 * rank + j];
    }
    ++rank;
  }
  return rank;
}

std::string RationalMatrix3::str() const {
  std::string s = "[";
  for (int i = 0; i < 9; ++i) {
    s += to_string(a[i]);
    if (i != 8) s += (i % 3 == 2) ? "; " : ",";
  }
  return s + "]";
}

RationalMatrix3 parse_matrix3(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 9)
    throw std::invalid_argument("expected nine comma-separated rationals, got " +
                                std::to_string(parts.size()));
  RationalMatrix3 m;
  for (int i = 0; i < 9; ++i) m.a[i] = parse_rational(parts[i]);
  return m;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (int k = degree(); k >= 0; --k) v = v * x + coeffs[k];
  return v;
}

RationalMatrix3 RatPoly::eval(const RationalMatrix3& m) const {
  RationalMatrix3 v;
  for (int k = degree(); k >= 0; --k) v = v * m + RationalMatrix3::scalar(coeffs[k]);
  return v;
}

RatPoly RatPoly::derivative() const {
  RatPoly d;
  for (int k = 1; k <= degree(); ++k) d.coeffs.push_back(Rat(k) * coeffs[k]);
  if (d.coeffs.empty()) d.coeffs.push_back(Rat(0));
  return d;
}

std::string RatPoly::str() const {
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs[k];
    if (c == 0 && degree() > 0) continue;
    Rat a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    if (a != 1 || k == 0) s += to_string(a);
    if (k == 1) s += (a != 1) ? "*x" : "x";
    else if (k > 1) s += ((a != 1) ? "*x^" : "x^") + std::to_string(k);
  }
  if (s.empty()) s = "0";
  return s;
}

RatPoly char_poly(const RationalMatrix3& m) {
  Rat d = m.det();
  if (d == 0) throw std::domain_error("char_poly: matrix is singular");
  // x^3 - tr x^2 + e2 x - det, with e2 the sum of principal 2x2 minors.
  Rat e2 = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) + m.at(0, 0) * m.at(2, 2) -
           m.at(0, 2) * m.at(2, 0) + m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
  return RatPoly{{-d, e2, -m.trace(), Rat(1)}};
}

namespace {

// All positive divisors of |n|.
std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

// Rational roots of a monic rational polynomial, with multiplicity, found via
// the rational root theorem on the primitive integral rescaling.
std::vector<std::pair<Rat, int>> rational_roots(RatPoly p) {
  std::vector<std::pair<Rat, int>> roots;
  for (;;) {
    if (p.degree() == 0) break;
    if (p.degree() == 1) {
      // x + c0
      Rat r = -p.coeffs[0];
      bool merged = false;
      for (auto& [root, mult] : roots)
        if (root == r) { ++mult; merged = true; break; }
      if (!merged) roots.emplace_back(r, 1);
      break;
    }
    // Clear denominators: candidates are num/den with num | a0num*lcm^deg...
    // Work with the integral polynomial q(x) = lcm * p(x) and candidates
    // p/q, p | constant, q | leading.
    mpz_class lcm = 1;
    for (const Rat& c : p.coeffs) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    std::vector<mpz_class> ic;
    for (const Rat& c : p.coeffs) ic.push_back(mpz_class(c * lcm));
    // Strip content.
    mpz_class content = 0;
    for (const mpz_class& c : ic) content = gcd(content, c);
    if (content > 1)
      for (mpz_class& c : ic) c /= content;
    Rat found;
    bool have = false;
    if (ic.front() == 0) {
      found = 0;
      have = true;
    } else {
      for (const mpz_class& pn : divisors(ic.front())) {
        for (const mpz_class& qd : divisors(ic.back())) {
          for (int sign = 1; sign >= -1 && !have; sign -= 2) {
            Rat cand(sign * pn, qd);
            cand.canonicalize();
            if (p.eval(cand) == 0) {
              found = cand;
              have = true;
            }
          }
          if (have) break;
        }
        if (have) break;
      }
    }
    if (!have) break;
    // Deflate by (x - found), exactly.
    RatPoly q;
    q.coeffs.assign(p.coeffs.size() - 1, Rat(0));
    Rat carry = p.coeffs.back();
    for (int k = p.degree() - 1; k >= 0; --k) {
      q.coeffs[k] = carry;
      carry = p.coeffs[k] + carry * found;
    }
    if (carry != 0) throw std::logic_error("deflation failed");
    bool merged = false;
    for (auto& [root, mult] : roots)
      if (root == found) { ++mult; merged = true; break; }
    if (!merged) roots.emplace_back(found, 1);
    p = q;
  }
  return roots;
}

bool is_rational_square(const Rat& q, Rat* root) {
  if (q < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  if (root) *root = Rat(sn, sd);
  return true;
}

}  // namespace

std::vector<PolyFactor> factor_cubic(const RatPoly& p) {
  if (p.degree() < 1 || p.degree() > 3 || p.coeffs.back() != 1)
    throw std::invalid_argument("factor_cubic: expects a monic polynomial of degree 1..3");
  auto roots = rational_roots(p);
  std::vector<PolyFactor> factors;
  int root_degree = 0;
  for (const auto& [r, mult] : roots) {
    factors.push_back({RatPoly{{-r, Rat(1)}}, mult});
    root_degree += mult;
  }
  int rem = p.degree() - root_degree;
  if (rem == 0) return factors;
  // Divide out the linear factors to expose the irreducible remainder.
  RatPoly q = p;
  for (const auto& [r, mult] : roots) {
    for (int k = 0; k < mult; ++k) {
      RatPoly next;
      next.coeffs.assign(q.coeffs.size() - 1, Rat(0));
      Rat carry = q.coeffs.back();
      for (int j = q.degree() - 1; j >= 0; --j) {
        next.coeffs[j] = carry;
        carry = q.coeffs[j] + carry * r;
      }
      q = next;
    }
  }
  if (rem == 2) {
    Rat disc = q.coeffs[1] * q.coeffs[1] - 4 * q.coeffs[0];
    if (is_rational_square(disc, nullptr))
      throw std::logic_error("quadratic with rational roots survived root search");
    factors.push_back({q, 1});
  } else {
    factors.push_back({q, 1});  // cubic with no rational root is irreducible
  }
  return factors;
}

RatPoly minimal_polynomial(const RationalMatrix3& m) {
  RatPoly cp = char_poly(m);
  auto factors = factor_cubic(cp);
  // Try all divisors of the char poly built from the distinct irreducible
  // factors with multiplicities up to those in cp, smallest degree first.
  struct Cand {
    RatPoly poly;
    int deg;
  };
  std::vector<Cand> cands;
  std::vector<int> mult(factors.size(), 0);
  auto build = [&](const std::vector<int>& mults) {
    RatPoly prod{{Rat(1)}};
    for (size_t i = 0; i < factors.size(); ++i) {
      for (int k = 0; k < mults[i]; ++k) {
        RatPoly next;
        next.coeffs.assign(prod.coeffs.size() + factors[i].factor.coeffs.size() - 1, Rat(0));
        for (size_t aa = 0; aa < prod.coeffs.size(); ++aa)
          for (size_t bb = 0; bb < factors[i].factor.coeffs.size(); ++bb)
            next.coeffs[aa + bb] += prod.coeffs[aa] * factors[i].factor.coeffs[bb];
        prod = next;
      }
    }
    return prod;
  };
  std::vector<std::vector<int>> assignments{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<int>> next;
    for (const auto& asg : assignments)
      for (int k = 1; k <= f.multiplicity; ++k) {  // every factor must divide min poly
        auto cp2 = asg;
        cp2.push_back(k);
        next.push_back(cp2);
      }
    assignments = next;
  }
  for (const auto& asg : assignments) {
    RatPoly cand = build(asg);
    cands.push_back({cand, cand.degree()});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.deg < b.deg; });
  RationalMatrix3 zero;
  for (const auto& c : cands)
    if (c.poly.eval(m) == zero) return c.poly;
  throw std::logic_error("minimal polynomial search failed");
}

JordanPair jordan_decompose(const RationalMatrix3& m) {
  RatPoly mp = minimal_polynomial(m);
  auto factors = factor_cubic(mp);
  bool squarefree = true;
  RatPoly g{{Rat(1)}};  // product of distinct irreducible factors
  for (const auto& f : factors) {
    if (f.multiplicity > 1) squarefree = false;
    RatPoly next;
    next.coeffs.assign(g.coeffs.size() + f.factor.coeffs.size() - 1, Rat(0));
    for (size_t aa = 0; aa < g.coeffs.size(); ++aa)
      for (size_t bb = 0; bb < f.factor.coeffs.size(); ++bb)
        next.coeffs[aa + bb] += g.coeffs[aa] * f.factor.coeffs[bb];
    g = next;
  }
  if (squarefree) return {m, RationalMatrix3::identity()};

  // Newton iteration toward the squarefree kernel: s <- s - g(s) g'(s)^{-1}.
  // s stays a polynomial in m, the increment is nilpotent, and convergence is
  // quadratic in the nilpotency order (at most two steps for 3x3).
  RatPoly gp = g.derivative();
  RationalMatrix3 s = m;
  RationalMatrix3 zero;
  for (int iter = 0; iter < 4; ++iter) {
    RationalMatrix3 gs = g.eval(s);
    if (gs == zero) break;
    s = s - g.eval(s) * gp.eval(s).inverse();
  }
  if (!(g.eval(s) == zero)) throw std::logic_error("jordan iteration did not converge");
  RationalMatrix3 u = s.inverse() * m;
  return {s, u};
}

std::string name(OrbitKind k) {
  switch (k) {
    case OrbitKind::EllipticG: return "EllipticG";
    case OrbitKind::Elliptic21: return "Elliptic21";
    case OrbitKind::SplitRegular: return "SplitRegular";
    case OrbitKind::TwoEqual: return "TwoEqual";
    case OrbitKind::Central: return "Central";
  }
  return "?";
}

std::string name(UnipotentSubtype s) {
  switch (s) {
    case UnipotentSubtype::None: return "None";
    case UnipotentSubtype::Tri: return "Tri";
    case UnipotentSubtype::Min: return "Min";
    case UnipotentSubtype::Reg: return "Reg";
  }
  return "?";
}

OrbitClass classify(const RationalMatrix3& m) {
  RatPoly cp = char_poly(m);  // throws for singular input
  auto factors = factor_cubic(cp);

  OrbitClass oc;
  int linear_count = 0, total_linear_mult = 0, max_mult = 0;
  for (const auto& f : factors) {
    if (f.factor.degree() == 1) {
      ++linear_count;
      total_linear_mult += f.multiplicity;
      max_mult = std::max(max_mult, f.multiplicity);
      oc.eigenvalues.emplace_back(-f.factor.coeffs[0], f.multiplicity);
    }
  }

  if (total_linear_mult == 0) {
    oc.kind = OrbitKind::EllipticG;
  } else if (total_linear_mult == 1) {
    oc.kind = OrbitKind::Elliptic21;
  } else if (linear_count == 3) {
    oc.kind = OrbitKind::SplitRegular;
  } else if (max_mult == 3) {
    oc.kind = OrbitKind::Central;
    const Rat& z = oc.eigenvalues[0].first;
    int r = (m - RationalMatrix3::scalar(z)).rank();
    oc.subtype = r == 0 ? UnipotentSubtype::Tri
                        : (r == 1 ? UnipotentSubtype::Min : UnipotentSubtype::Reg);
  } else {
    oc.kind = OrbitKind::TwoEqual;
  }
  oc.ramified = (oc.kind == OrbitKind::TwoEqual || oc.kind == OrbitKind::Central);
  return oc;
}

ProbeResult conjugacy_probe(const RationalMatrix3& m1, const RationalMatrix3& m2,
                            long /*search_bound*/) {
  OrbitClass c1 = classify(m1), c2 = classify(m2);
  if (c1.kind != c2.kind) return ProbeResult::Inequivalent;
  // Orbit equivalence is conjugacy of the semisimple parts.  In every kind
  // the semisimple part is either regular or diagonalizable, so its rational
  // conjugacy class is determined by its characteristic polynomial.
  RatPoly p1 = char_poly(jordan_decompose(m1).semisimple);
  RatPoly p2 = char_poly(jordan_decompose(m2).semisimple);
  return p1 == p2 ? ProbeResult::Equivalent : ProbeResult::Inequivalent;
}

}  // namespace gl3tf
