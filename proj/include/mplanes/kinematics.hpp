#pragma once

#include "mplanes/g2.hpp"
#include "mplanes/transforms.hpp"

namespace mplanes {

// A velocity in units of c (c = 1), strictly slower than light.
class Velocity {
 public:
  // Throws DomainError(Superluminal) when |v| >= 1.
  explicit Velocity(const Vector2& v);

  static Velocity from_speed_angle(double speed, double angle);
  static Velocity of(const OrientedFrame& f) { return Velocity(frame_velocity(f)); }

  const Vector2& vec() const { return v_; }
  G2Multivector mv() const { return v_.mv(); }
  double speed() const { return v_.norm(); }

 private:
  Vector2 v_;
};

// Stable atanh(|v|), the rapidity of a speed below 1.
double rapidity(double speed);

double gamma_factor(const Velocity& v);

/// Relative motion of frame k seen from frame j, both inside G2:
/// k = j e^{omega c} with e^{omega c} = e^{-phi a} e^{rho b}.
struct CompositionResult {
  double omega = 0.0;        // >= 0
  double cosh_omega = 1.0;   // (cosh phi cosh rho)(1 - u_v . u_w)
  G2Multivector c_direction; // relative unit vector, c^2 = 1
  G2Multivector vw;          // c tanh(omega), vector plus bivector part
};

// Throws DomainError(NotPositivelyOriented) unless both frames belong to H+.
CompositionResult compose_frames(const OrientedFrame& j, const OrientedFrame& k);

/// Unit vector d of the passive boost, parallel to u_w cosh(rho) - u_v cosh(phi).
/// Throws DomainError(DegenerateDirection) when that numerator is below
/// 1e-12 (cosh phi + cosh rho).
UnitVector2 passive_direction(const Velocity& uv, double phi, const Velocity& uw, double rho);
UnitVector2 passive_direction(const OrientedFrame& j, const OrientedFrame& k);

struct PassiveBoost {
  UnitVector2 d = UnitVector2::e1();
  double omega = 0.0;        // Omega, signed so that u_vw = d tanh(Omega)
  double cosh_omega = 1.0;   // closed form in terms of u_v . d and u_w . d
  Velocity uvw{Vector2{}};
};

// Solves e^{rho b} = e^{Omega d/2} e^{phi a} e^{Omega d/2} for d and Omega.
PassiveBoost passive_boost_factor(const Velocity& uv, double phi, const Velocity& uw, double rho);
PassiveBoost passive_boost_factor(const OrientedFrame& j, const OrientedFrame& k);

/// Velocity addition inside the frame of i: returns u_w from u_v and the
/// passive relative velocity u_vw = d tanh(Omega). Throws
/// DomainError(MalformedBoost) when u_vw disagrees with d tanh(Omega).
Velocity velocity_add(const Velocity& uv, const Velocity& uvw, const UnitVector2& d, double omega);

// cosh(rho) = cosh(phi) cosh(Omega) (1 + u_v . u_vw)
double velocity_add_cosh(double phi, const Velocity& uv, const Velocity& uvw, double omega);

// e^{Omega d/2} x e^{Omega d/2}; same-side factors, mixes scalars and vectors.
G2Multivector apply_passive_boost(const G2Multivector& x, const UnitVector2& d, double omega);

}  // namespace mplanes
