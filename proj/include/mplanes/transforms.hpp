#pragma once

#include "mplanes/g2.hpp"

namespace mplanes {

// A vector of the plane with unit Euclidean length.
class UnitVector2 {
 public:
  // Throws DomainError(NotUnitVector) unless |v| = 1 within 1e-12.
  explicit UnitVector2(const Vector2& v);

  static UnitVector2 normalize(const Vector2& v);
  static UnitVector2 from_angle(double theta);
  static UnitVector2 e1() { return from_angle(0.0); }
  static UnitVector2 e2() { return UnitVector2(Vector2{0.0, 1.0}); }

  const Vector2& vec() const { return v_; }
  double v1() const { return v_.v1; }
  double v2() const { return v_.v2; }
  G2Multivector mv() const { return v_.mv(); }
  UnitVector2 operator-() const { return UnitVector2(-v_, Unchecked{}); }

 private:
  struct Unchecked {};
  UnitVector2(const Vector2& v, Unchecked) : v_(v) {}
  Vector2 v_;
};

/// An oriented plane in motion: the element h = orientation * i * exp(phi a) with h^2 = -1.
/// Canonical form has phi >= 0, and a = e1 when phi = 0.
struct OrientedFrame {
  int orientation = 1;
  UnitVector2 a = UnitVector2::e1();
  double phi = 0.0;

  G2Multivector element() const;
};

// Relative orthonormal basis {1, e1', e2', j} attached to a boost (a, phi).
struct RelativeBasis {
  G2Multivector e1p;
  G2Multivector e2p;
  G2Multivector j;
};

// e^{-i theta/2} x e^{i theta/2}: counterclockwise rotation in the plane of i.
Vector2 rotate(const Vector2& x, double theta);
G2Multivector rotate(const G2Multivector& x, double theta);

/// (ba)^{1/2} = e^{-i theta/2} where ab = e^{i theta}, so that
/// R a reverse(R) = b. Throws DomainError(AmbiguousRotor) for antipodal a, b.
G2Multivector rotor_between(const UnitVector2& a, const UnitVector2& b);

// R x reverse(R).
G2Multivector apply_rotor(const G2Multivector& rotor, const G2Multivector& x);

// e^{-phi a/2} x e^{phi a/2}
G2Multivector active_boost(const G2Multivector& x, const UnitVector2& a, double phi);

// e1' = a, e2' = a i e^{phi a}, j = i e^{phi a}.
RelativeBasis relative_basis(const UnitVector2& a, double phi);

/// Recovers (orientation, a, phi) from any h with zero scalar part and
/// h^2 = -1. Throws DomainError(NotUnitBivector) otherwise.
OrientedFrame classify_unit_minus_one(const G2Multivector& h, double tol = kDefaultTolerance);

// a tanh(phi)
Vector2 frame_velocity(const OrientedFrame& f);

}  // namespace mplanes
