#pragma once

#include <cmath>

#include "mplanes/errors.hpp"

namespace mplanes {

inline constexpr double kDefaultTolerance = 1e-10;

// Element of the Euclidean plane algebra G2, stored over the standard basis
// (1, e1, e2, e12). The unit bivector e12 is written i throughout.
struct G2Multivector {
  double s = 0.0;   // scalar
  double v1 = 0.0;  // e1
  double v2 = 0.0;  // e2
  double b = 0.0;   // e12

  static constexpr G2Multivector scalar(double x) { return {x, 0.0, 0.0, 0.0}; }
  static constexpr G2Multivector e1() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr G2Multivector e2() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr G2Multivector i() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr G2Multivector operator-() const { return {-s, -v1, -v2, -b}; }
  constexpr G2Multivector& operator+=(const G2Multivector& o) {
    s += o.s;
    v1 += o.v1;
    v2 += o.v2;
    b += o.b;
    return *this;
  }
  constexpr G2Multivector& operator-=(const G2Multivector& o) { return *this += -o; }
  constexpr G2Multivector& operator*=(double k) {
    s *= k;
    v1 *= k;
    v2 *= k;
    b *= k;
    return *this;
  }

  constexpr bool operator==(const G2Multivector&) const = default;
};

constexpr G2Multivector operator+(G2Multivector a, const G2Multivector& b) { return a += b; }
constexpr G2Multivector operator-(G2Multivector a, const G2Multivector& b) { return a -= b; }
constexpr G2Multivector operator*(G2Multivector a, double k) { return a *= k; }
constexpr G2Multivector operator*(double k, G2Multivector a) { return a *= k; }
constexpr G2Multivector operator/(G2Multivector a, double k) { return a *= (1.0 / k); }

// Geometric product: e1^2 = e2^2 = 1, e1 e2 = -e2 e1 = e12.
constexpr G2Multivector gp(const G2Multivector& a, const G2Multivector& b) {
  return {
      a.s * b.s + a.v1 * b.v1 + a.v2 * b.v2 - a.b * b.b,
      a.s * b.v1 + a.v1 * b.s - a.v2 * b.b + a.b * b.v2,
      a.s * b.v2 + a.v2 * b.s + a.v1 * b.b - a.b * b.v1,
      a.s * b.b + a.b * b.s + a.v1 * b.v2 - a.v2 * b.v1,
  };
}

constexpr G2Multivector operator*(const G2Multivector& a, const G2Multivector& b) { return gp(a, b); }

// Symmetric product (ab + ba)/2.
constexpr G2Multivector sym(const G2Multivector& a, const G2Multivector& b) {
  return (gp(a, b) + gp(b, a)) * 0.5;
}

// Anti-symmetric product (ab - ba)/2.
constexpr G2Multivector antisym(const G2Multivector& a, const G2Multivector& b) {
  return (gp(a, b) - gp(b, a)) * 0.5;
}

/// Reverse: negates the bivector part. For a spinor x + iy this is the
/// complex conjugate; for a vector it is the identity.
constexpr G2Multivector reverse(const G2Multivector& g) { return {g.s, g.v1, g.v2, -g.b}; }

// Largest absolute coefficient.
double max_abs(const G2Multivector& g);

// Grade-1 element v1 e1 + v2 e2.
struct Vector2 {
  double v1 = 0.0;
  double v2 = 0.0;

  constexpr G2Multivector mv() const { return {0.0, v1, v2, 0.0}; }
  double norm() const { return std::hypot(v1, v2); }
  constexpr double norm_sq() const { return v1 * v1 + v2 * v2; }

  constexpr Vector2 operator-() const { return {-v1, -v2}; }
  constexpr bool operator==(const Vector2&) const = default;
};

constexpr Vector2 operator+(const Vector2& a, const Vector2& b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
constexpr Vector2 operator-(const Vector2& a, const Vector2& b) { return {a.v1 - b.v1, a.v2 - b.v2}; }
constexpr Vector2 operator*(double k, const Vector2& a) { return {k * a.v1, k * a.v2}; }
constexpr Vector2 operator*(const Vector2& a, double k) { return {k * a.v1, k * a.v2}; }

// a . b, the scalar part of ab.
constexpr double inner(const Vector2& a, const Vector2& b) { return a.v1 * b.v1 + a.v2 * b.v2; }

// Coefficient of i in a ^ b.
constexpr double outer(const Vector2& a, const Vector2& b) { return a.v1 * b.v2 - a.v2 * b.v1; }

enum class ZeroScalarClass { RelativeVector, Nilpotent, RelativeBivector };

const char* to_string(ZeroScalarClass c);

// Scale used by the classification tolerance: max(1, largest coefficient^2).
double classification_scale(const G2Multivector& a);

/// Symmetric product of A with the anti-symmetric product of B and C, for
/// elements with vanishing scalar part. Equals minus the determinant of the
/// coefficient rows (a1 a2 a3), (b1 b2 b3), (c1 c2 c3) over (e1, e2, i).
/// Throws DomainError(NonZeroScalar) when any input has a scalar part.
double triple_sym(const G2Multivector& a, const G2Multivector& b, const G2Multivector& c,
                  double tol = kDefaultTolerance);

/// Sorts a zero-scalar element by the sign of A^2 (a scalar). |A^2| below
/// tol * classification_scale(A) counts as nilpotent.
ZeroScalarClass classify_zero_scalar(const G2Multivector& a, double tol = kDefaultTolerance);

/// Closed-form exponential of a zero-scalar element: trigonometric for
/// relative bivectors, hyperbolic for relative vectors, 1 + A for nilpotents.
G2Multivector exp_zero_scalar(const G2Multivector& a, double tol = kDefaultTolerance);

// exp(phi a) = cosh(phi) + a sinh(phi) for a unit vector a.
G2Multivector exp_vector(const Vector2& a, double phi);

// exp(i theta) = cos(theta) + i sin(theta).
G2Multivector exp_bivector(double theta);

G2Multivector grade(const G2Multivector& g, int k);
constexpr double scalar_part(const G2Multivector& g) { return g.s; }
constexpr Vector2 vector_part(const G2Multivector& g) { return {g.v1, g.v2}; }
constexpr double bivector_part(const G2Multivector& g) { return g.b; }

}  // namespace mplanes
