#include "mplanes/g12.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace mplanes {

namespace {

using Blade = G12Multivector::Blade;
constexpr std::size_t N = G12Multivector::kSize;

// Slot -> bitmask over (g0, g1, g2) and the sign relating the slot to the
// ascending-order blade (g21 = -g12).
constexpr std::array<unsigned, N> kMask{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
constexpr std::array<int, N> kSlotSign{1, 1, 1, 1, 1, 1, -1, 1};
constexpr std::array<int, 3> kMetric{1, -1, -1};

constexpr std::size_t slot_of(unsigned mask) {
  for (std::size_t k = 0; k < N; ++k)
    if (kMask[k] == mask) return k;
  return N;
}

constexpr int canonical_sign(unsigned a, unsigned b) {
  // Each generator of b passes every higher generator of a.
  int swaps = 0;
  for (unsigned bit = 0; bit < 3; ++bit) {
    if (b & (1u << bit)) swaps += std::popcount(a >> (bit + 1));
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  for (unsigned bit = 0; bit < 3; ++bit) {
    if ((a & b) & (1u << bit)) sign *= kMetric[bit];
  }
  return sign;
}

struct Table {
  std::array<std::array<BladeProduct, N>, N> entry{};
};

constexpr Table build_table() {
  Table t;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const unsigned m = kMask[i] ^ kMask[j];
      const std::size_t k = slot_of(m);
      const int sign = kSlotSign[i] * kSlotSign[j] * canonical_sign(kMask[i], kMask[j]) * kSlotSign[k];
      t.entry[i][j] = BladeProduct{k, sign};
    }
  }
  return t;
}

constexpr Table kTable = build_table();

double minkowski_scale(const MinkowskiVector& x) { return x.t * x.t + x.x1 * x.x1 + x.x2 * x.x2; }

void require_unit_timelike(const MinkowskiVector& x, double tol, const char* what) {
  const double sq = mink_inner(x, x);
  if (std::abs(sq - 1.0) > tol * std::max(1.0, minkowski_scale(x))) {
    throw DomainError(ErrorCode::NotUnitTimelike, std::string(what) + " requires x^2 = 1, got " + std::to_string(sq));
  }
}

}  // namespace

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Timelike: return "Timelike";
    case CausalClass::Spacelike: return "Spacelike";
    case CausalClass::Lightlike: return "Lightlike";
  }
  return "Unknown";
}

BladeProduct blade_product(std::size_t a, std::size_t b) { return kTable.entry[a][b]; }

G12Multivector gp12(const G12Multivector& a, const G12Multivector& b) {
  G12Multivector r;
  for (std::size_t i = 0; i < N; ++i) {
    if (a.c[i] == 0.0) continue;
    for (std::size_t j = 0; j < N; ++j) {
      const BladeProduct& p = kTable.entry[i][j];
      r.c[p.index] += p.sign * a.c[i] * b.c[j];
    }
  }
  return r;
}

G12Multivector grade(const G12Multivector& f, int k) {
  if (k < 0 || k > 3) throw DomainError(ErrorCode::InvalidGrade, "G12 has grades 0..3; got " + std::to_string(k));
  G12Multivector r;
  for (std::size_t i = 0; i < N; ++i)
    if (kG12Grade[i] == k) r.c[i] = f.c[i];
  return r;
}

G12Multivector even_part(const G12Multivector& f) { return grade(f, 0) + grade(f, 2); }
G12Multivector odd_part(const G12Multivector& f) { return grade(f, 1) + grade(f, 3); }

double max_abs(const G12Multivector& f) {
  double m = 0.0;
  for (double v : f.c) m = std::max(m, std::abs(v));
  return m;
}

G12Multivector embed_even(const G2Multivector& g) {
  G12Multivector f;
  f[Blade::One] = g.s;
  f[Blade::G01] = g.v1;
  f[Blade::G02] = g.v2;
  f[Blade::G21] = g.b;
  return f;
}

G12Multivector embed_even(const Vector2& v) { return embed_even(v.mv()); }

G2Multivector project_even(const G12Multivector& f, double tol) {
  const double odd = max_abs(odd_part(f));
  if (odd > tol * std::max(1.0, max_abs(f))) {
    throw DomainError(ErrorCode::NotEven, "element has an odd part of size " + std::to_string(odd));
  }
  return {f[Blade::One], f[Blade::G01], f[Blade::G02], f[Blade::G21]};
}

double mink_inner(const MinkowskiVector& x, const MinkowskiVector& y) {
  return x.t * y.t - x.x1 * y.x1 - x.x2 * y.x2;
}

G12Multivector mink_outer(const MinkowskiVector& x, const MinkowskiVector& y) {
  return (gp12(x.mv(), y.mv()) - gp12(y.mv(), x.mv())) * 0.5;
}

CausalClass causal_class(const MinkowskiVector& x, double tol) {
  const double scale = minkowski_scale(x);
  if (scale == 0.0) throw DomainError(ErrorCode::ZeroVector, "causal class of the zero vector is undefined");
  const double sq = mink_inner(x, x);
  if (std::abs(sq) <= tol * scale) return CausalClass::Lightlike;
  return sq > 0.0 ? CausalClass::Timelike : CausalClass::Spacelike;
}

void require_future_unit_timelike(const MinkowskiVector& x, double tol) {
  require_unit_timelike(x, tol, "observer");
  if (!(x.t > 0.0)) throw DomainError(ErrorCode::NotUnitTimelike, "observer must be future pointing");
}

MinkowskiVector boosted_observer(const UnitVector2& a, double phi) {
  return MinkowskiVector::of(gp12(G12Multivector::basis(Blade::G0), embed_even(exp_vector(a.vec(), phi))));
}

MinkowskiVector psi(const G2Multivector& h, double tol) {
  const OrientedFrame f = classify_unit_minus_one(h, tol);
  if (f.orientation != 1) {
    throw DomainError(ErrorCode::NotPositivelyOriented, "psi is defined on relative bivectors to +i");
  }
  G2Multivector body = h;
  body.s = 0.0;
  return MinkowskiVector::of(gp12(G12Multivector::pseudoscalar(), embed_even(body)));
}

MinkowskiVector psi(const OrientedFrame& f) { return psi(f.element()); }

G2Multivector psi_inverse(const MinkowskiVector& r) {
  return project_even(gp12(-G12Multivector::pseudoscalar(), r.mv()));
}

G12Multivector relative_velocity_bivector(const MinkowskiVector& u, const MinkowskiVector& v, double tol) {
  require_unit_timelike(u, tol, "relative velocity");
  require_unit_timelike(v, tol, "relative velocity");
  const double dot = mink_inner(u, v);
  if (!(dot > 0.0)) {
    throw DomainError(ErrorCode::OppositeOrientation, "u and v must share a time orientation");
  }
  return mink_outer(u, v) / dot;
}

Recomposition recompute_composition(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w,
                                    double tol) {
  require_future_unit_timelike(u, tol);
  require_future_unit_timelike(v, tol);
  require_future_unit_timelike(w, tol);
  const G12Multivector uv = relative_velocity_bivector(u, v, tol);
  const G12Multivector uw = relative_velocity_bivector(u, w, tol);
  const G12Multivector one = G12Multivector::scalar(1.0);

  Recomposition r;
  r.product = gp12(one - uv, one + uw) * (mink_inner(v, u) * mink_inner(w, u));
  r.v_dot_w = r.product[Blade::One];
  r.vw = grade(r.product, 2) / r.v_dot_w;
  return r;
}

G12Multivector vector_dot_bivector(const MinkowskiVector& a, const G12Multivector& bivector) {
  return (gp12(a.mv(), bivector) - gp12(bivector, a.mv())) * 0.5;
}

G12Multivector vector_wedge_bivector(const MinkowskiVector& a, const G12Multivector& bivector) {
  return (gp12(a.mv(), bivector) + gp12(bivector, a.mv())) * 0.5;
}

DSplit d_split(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w, double tol) {
  require_future_unit_timelike(u, tol);
  require_future_unit_timelike(v, tol);
  require_future_unit_timelike(w, tol);

  DSplit s;
  s.d = mink_outer(w - v, u);
  const double d01 = s.d[Blade::G01];
  const double d02 = s.d[Blade::G02];
  const double d21 = s.d[Blade::G21];
  const double d_sq = d01 * d01 + d02 * d02 - d21 * d21;
  const double size = d01 * d01 + d02 * d02 + d21 * d21;
  const double scale = std::max({1.0, minkowski_scale(u), minkowski_scale(v), minkowski_scale(w)});
  if (size <= 1e-24 * scale || std::abs(d_sq) <= 1e-12 * size) {
    throw DomainError(ErrorCode::DegenerateD, "D = (w - v) ^ u has no inverse");
  }
  const G12Multivector d_inv = s.d / d_sq;

  s.w_dot_d = vector_dot_bivector(w, s.d);
  s.v_dot_d = vector_dot_bivector(v, s.d);
  s.w_wedge_d = vector_wedge_bivector(w, s.d);
  s.v_wedge_d = vector_wedge_bivector(v, s.d);
  s.w_par = MinkowskiVector::of(gp12(s.w_dot_d, d_inv));
  s.w_perp = MinkowskiVector::of(gp12(s.w_wedge_d, d_inv));
  s.v_par = MinkowskiVector::of(gp12(s.v_dot_d, d_inv));
  s.v_perp = MinkowskiVector::of(gp12(s.v_wedge_d, d_inv));
  return s;
}

G12Multivector parallel_rotor(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w,
                              double tol) {
  if (max_abs(w.mv() - v.mv()) <= tol * std::max(1.0, max_abs(v.mv()))) return G12Multivector::scalar(1.0);
  const DSplit s = d_split(u, v, w, tol);
  const double vd_sq = gp12(s.v_dot_d, s.v_dot_d)[Blade::One];
  return gp12(s.w_dot_d, s.v_dot_d / vd_sq);
}

G12Multivector half_rotor(const G12Multivector& p) {
  const double k = std::sqrt(2.0 * (1.0 + p[Blade::One]));
  return (G12Multivector::scalar(1.0) + p) / k;
}

G12Multivector apply_rotor(const G12Multivector& rotor, const G12Multivector& x) {
  return gp12(gp12(rotor, x), reversion(rotor));
}

G12Multivector apply_parallel_boost(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w,
                                    const G12Multivector& x, double tol) {
  return apply_rotor(half_rotor(parallel_rotor(u, v, w, tol)), x);
}

G12Multivector direct_boost_rotor(const MinkowskiVector& v, const MinkowskiVector& w) {
  return half_rotor(gp12(w.mv(), v.mv()));
}

namespace {

G12Multivector negate_grades(const G12Multivector& f, int g1, int g2) {
  G12Multivector r = f;
  for (std::size_t i = 0; i < N; ++i)
    if (kG12Grade[i] == g1 || kG12Grade[i] == g2) r.c[i] = -r.c[i];
  return r;
}

}  // namespace

G12Multivector main_involution(const G12Multivector& f) { return negate_grades(f, 1, 3); }
G12Multivector reversion(const G12Multivector& f) { return negate_grades(f, 2, 3); }
G12Multivector clifford_conj(const G12Multivector& f) { return reversion(main_involution(f)); }

}  // namespace mplanes
