#pragma once

#include <array>
#include <cstddef>

#include "mplanes/g2.hpp"
#include "mplanes/transforms.hpp"

namespace mplanes {

// Element of the spacetime algebra G_{1,2} over the ordered basis
// (1, g0, g1, g2, g01, g02, g21, g012) with g0^2 = 1, g1^2 = g2^2 = -1.
// The basis bivector is g21 (not g12) so that G2 embeds coefficientwise.
struct G12Multivector {
  enum Blade : std::size_t { One, G0, G1, G2, G01, G02, G21, G012 };
  static constexpr std::size_t kSize = 8;

  std::array<double, kSize> c{};

  static constexpr G12Multivector basis(std::size_t k) {
    G12Multivector f;
    f.c[k] = 1.0;
    return f;
  }
  static constexpr G12Multivector scalar(double x) {
    G12Multivector f;
    f.c[One] = x;
    return f;
  }
  // Unit pseudoscalar s = g012, central with s^2 = -1.
  static constexpr G12Multivector pseudoscalar() { return basis(G012); }

  constexpr double operator[](std::size_t k) const { return c[k]; }
  constexpr double& operator[](std::size_t k) { return c[k]; }

  constexpr G12Multivector operator-() const {
    G12Multivector f;
    for (std::size_t k = 0; k < kSize; ++k) f.c[k] = -c[k];
    return f;
  }
  constexpr G12Multivector& operator+=(const G12Multivector& o) {
    for (std::size_t k = 0; k < kSize; ++k) c[k] += o.c[k];
    return *this;
  }
  constexpr G12Multivector& operator-=(const G12Multivector& o) {
    for (std::size_t k = 0; k < kSize; ++k) c[k] -= o.c[k];
    return *this;
  }
  constexpr G12Multivector& operator*=(double x) {
    for (auto& v : c) v *= x;
    return *this;
  }
  constexpr bool operator==(const G12Multivector&) const = default;
};

constexpr G12Multivector operator+(G12Multivector a, const G12Multivector& b) { return a += b; }
constexpr G12Multivector operator-(G12Multivector a, const G12Multivector& b) { return a -= b; }
constexpr G12Multivector operator*(G12Multivector a, double x) { return a *= x; }
constexpr G12Multivector operator*(double x, G12Multivector a) { return a *= x; }
constexpr G12Multivector operator/(G12Multivector a, double x) { return a *= (1.0 / x); }

// Grade of each basis slot.
inline constexpr std::array<int, G12Multivector::kSize> kG12Grade{0, 1, 1, 1, 2, 2, 2, 3};
inline constexpr std::array<const char*, G12Multivector::kSize> kG12Names{"1",   "g0",  "g1",  "g2",
                                                                          "g01", "g02", "g21", "g012"};

struct BladeProduct {
  std::size_t index;
  int sign;
};

// Product of two basis slots, e.g. {G01, G02} -> {G21, +1}.
BladeProduct blade_product(std::size_t a, std::size_t b);

G12Multivector gp12(const G12Multivector& a, const G12Multivector& b);
inline G12Multivector operator*(const G12Multivector& a, const G12Multivector& b) { return gp12(a, b); }

G12Multivector grade(const G12Multivector& f, int k);
G12Multivector even_part(const G12Multivector& f);
G12Multivector odd_part(const G12Multivector& f);
double max_abs(const G12Multivector& f);

// e1 -> g01, e2 -> g02, e12 -> g21.
G12Multivector embed_even(const G2Multivector& g);
G12Multivector embed_even(const Vector2& v);

// Inverse of embed_even. Throws DomainError(NotEven) when an odd coefficient
// exceeds tol * max(1, max_abs(f)).
G2Multivector project_even(const G12Multivector& f, double tol = kDefaultTolerance);

// Grade-1 element t g0 + x1 g1 + x2 g2.
struct MinkowskiVector {
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  G12Multivector mv() const {
    G12Multivector f;
    f[G12Multivector::G0] = t;
    f[G12Multivector::G1] = x1;
    f[G12Multivector::G2] = x2;
    return f;
  }
  static MinkowskiVector of(const G12Multivector& f) {
    return {f[G12Multivector::G0], f[G12Multivector::G1], f[G12Multivector::G2]};
  }
  constexpr bool operator==(const MinkowskiVector&) const = default;
};

inline MinkowskiVector operator+(const MinkowskiVector& a, const MinkowskiVector& b) {
  return {a.t + b.t, a.x1 + b.x1, a.x2 + b.x2};
}
inline MinkowskiVector operator-(const MinkowskiVector& a, const MinkowskiVector& b) {
  return {a.t - b.t, a.x1 - b.x1, a.x2 - b.x2};
}

// x . y = (xy + yx)/2
double mink_inner(const MinkowskiVector& x, const MinkowskiVector& y);
// x ^ y = (xy - yx)/2, a bivector
G12Multivector mink_outer(const MinkowskiVector& x, const MinkowskiVector& y);

enum class CausalClass { Timelike, Spacelike, Lightlike };
const char* to_string(CausalClass c);

// Sign of x^2, Lightlike inside |x^2| <= tol (t^2 + x1^2 + x2^2).
// Throws DomainError(ZeroVector) for x = 0.
CausalClass causal_class(const MinkowskiVector& x, double tol = kDefaultTolerance);

// Throws DomainError(NotUnitTimelike) unless x^2 = 1 and x . g0 > 0.
void require_future_unit_timelike(const MinkowskiVector& x, double tol = kDefaultTolerance);

// Observer-independent unit timelike vector for a boost (a, phi) of g0.
MinkowskiVector boosted_observer(const UnitVector2& a, double phi);

/// Duality r = s h between positively oriented unit relative bivectors and
/// unit timelike vectors. Throws DomainError(NotUnitBivector) or
/// DomainError(NotPositivelyOriented) when h is not in H+.
MinkowskiVector psi(const G2Multivector& h, double tol = kDefaultTolerance);
MinkowskiVector psi(const OrientedFrame& f);
// h = -s r, inverse of psi.
G2Multivector psi_inverse(const MinkowskiVector& r);

/// u_v = (u ^ v)/(u . v), the velocity of v in the frame of u.
/// Throws DomainError(OppositeOrientation) if u . v <= 0.
G12Multivector relative_velocity_bivector(const MinkowskiVector& u, const MinkowskiVector& v,
                                          double tol = kDefaultTolerance);

struct Recomposition {
  double v_dot_w = 1.0;
  G12Multivector vw;         // v_w as an even element, (v.w) v_w = <vuuw>_2
  G12Multivector product;    // vuuw = (v.u)(w.u)(1 - u_v)(1 + u_w)
};

// Recomputes vw through the observer u, all three future unit timelike.
Recomposition recompute_composition(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w,
                                    double tol = kDefaultTolerance);

struct DSplit {
  G12Multivector d;  // D = (w - v) ^ u
  MinkowskiVector w_par;
  MinkowskiVector w_perp;
  MinkowskiVector v_par;
  MinkowskiVector v_perp;
  G12Multivector w_dot_d;  // vector
  G12Multivector v_dot_d;  // vector
  G12Multivector w_wedge_d;  // trivector
  G12Multivector v_wedge_d;  // trivector
};

// a . B = (aB - Ba)/2 and a ^ B = (aB + Ba)/2 for a vector a and bivector B.
G12Multivector vector_dot_bivector(const MinkowskiVector& a, const G12Multivector& bivector);
G12Multivector vector_wedge_bivector(const MinkowskiVector& a, const G12Multivector& bivector);

/// Splits v and w into components parallel and perpendicular to the plane
/// of D = (w - v) ^ u. Throws DomainError(DegenerateD) when D^2 vanishes.
DSplit d_split(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w,
               double tol = kDefaultTolerance);

/// (w.D)(v.D)^{-1} = w_par^ v_par^, the boost taking v_par^ to w_par^ in the
/// plane of D. Its scalar part is cosh(Omega) of the passive boost seen by u.
/// Returns 1 when v = w.
G12Multivector parallel_rotor(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w,
                              double tol = kDefaultTolerance);

// Square root (1 + P)/sqrt(2(1 + <P>)) of an even element P with P reverse(P) = 1 and <P> > -1.
G12Multivector half_rotor(const G12Multivector& p);

// R x reverse(R)
G12Multivector apply_rotor(const G12Multivector& rotor, const G12Multivector& x);

// L_u(x) = (w_par^ v_par^)^{1/2} x (v_par^ w_par^)^{1/2}; satisfies L_u(v) = w.
G12Multivector apply_parallel_boost(const MinkowskiVector& u, const MinkowskiVector& v, const MinkowskiVector& w,
                                    const G12Multivector& x, double tol = kDefaultTolerance);

// (wv)^{1/2}: the unique active boost rotor taking v to w in the plane of v ^ w.
G12Multivector direct_boost_rotor(const MinkowskiVector& v, const MinkowskiVector& w);

// Negate grades {1, 3}, {2, 3} and {1, 2} respectively.
G12Multivector main_involution(const G12Multivector& f);
G12Multivector reversion(const G12Multivector& f);
G12Multivector clifford_conj(const G12Multivector& f);

}  // namespace mplanes
