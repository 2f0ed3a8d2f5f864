#include "mplanes/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mplanes {

Velocity::Velocity(const Vector2& v) : v_(v) {
  if (!(v.norm() < 1.0)) {
    throw DomainError(ErrorCode::Superluminal, "|v| = " + std::to_string(v.norm()) + " is not below 1");
  }
}

Velocity Velocity::from_speed_angle(double speed, double angle) {
  if (!(std::abs(speed) < 1.0)) {
    throw DomainError(ErrorCode::Superluminal, "speed " + std::to_string(speed) + " is not below 1");
  }
  return Velocity(Vector2{speed * std::cos(angle), speed * std::sin(angle)});
}

double rapidity(double speed) {
  // atanh(x) = log1p(2x / (1 - x)) / 2 keeps precision as x -> 1.
  if (speed < 0.0) return -rapidity(-speed);
  return 0.5 * std::log1p(2.0 * speed / (1.0 - speed));
}

double gamma_factor(const Velocity& v) { return 1.0 / std::sqrt(1.0 - v.vec().norm_sq()); }

CompositionResult compose_frames(const OrientedFrame& j, const OrientedFrame& k) {
  if (j.orientation != 1 || k.orientation != 1) {
    throw DomainError(ErrorCode::NotPositivelyOriented, "compose_frames needs frames relative to +i");
  }
  const Vector2 uv = frame_velocity(j);
  const Vector2 uw = frame_velocity(k);
  const double dot = inner(uv, uw);

  CompositionResult r;
  r.cosh_omega = std::cosh(j.phi) * std::cosh(k.phi) * (1.0 - dot);
  G2Multivector num = (uw - uv).mv();
  num.b = -outer(uv, uw);
  r.vw = num / (1.0 - dot);

  // v_w^2 = tanh^2(omega); a pure scalar since the scalar part vanishes.
  const double t2 = r.vw.v1 * r.vw.v1 + r.vw.v2 * r.vw.v2 - r.vw.b * r.vw.b;
  const double t = std::sqrt(std::max(0.0, t2));
  r.omega = rapidity(t);
  r.c_direction = t > 0.0 ? r.vw / t : G2Multivector::e1();
  return r;
}

UnitVector2 passive_direction(const Velocity& uv, double phi, const Velocity& uw, double rho) {
  const double cp = std::cosh(phi);
  const double cr = std::cosh(rho);
  const Vector2 num = uw.vec() * cr - uv.vec() * cp;
  if (num.norm() < 1e-12 * (cp + cr)) {
    throw DomainError(ErrorCode::DegenerateDirection, "u_w cosh(rho) = u_v cosh(phi); the frames coincide");
  }
  return UnitVector2::normalize(num);
}

UnitVector2 passive_direction(const OrientedFrame& j, const OrientedFrame& k) {
  return passive_direction(Velocity::of(j), j.phi, Velocity::of(k), k.phi);
}

PassiveBoost passive_boost_factor(const Velocity& uv, double phi, const Velocity& uw, double rho) {
  PassiveBoost p;
  p.d = passive_direction(uv, phi, uw, rho);
  const double vd = inner(uv.vec(), p.d.vec());
  const double wd = inner(uw.vec(), p.d.vec());
  p.cosh_omega = std::cosh(rho) / std::cosh(phi) * (1.0 - vd * wd) / (1.0 - vd * vd);
  const double t = (wd - vd) / (1.0 - vd * wd);
  p.uvw = Velocity(p.d.vec() * t);
  p.omega = rapidity(t);
  return p;
}

PassiveBoost passive_boost_factor(const OrientedFrame& j, const OrientedFrame& k) {
  return passive_boost_factor(Velocity::of(j), j.phi, Velocity::of(k), k.phi);
}

Velocity velocity_add(const Velocity& uv, const Velocity& uvw, const UnitVector2& d, double omega) {
  const Vector2 expected = d.vec() * std::tanh(omega);
  if ((expected - uvw.vec()).norm() > 1e-9) {
    throw DomainError(ErrorCode::MalformedBoost, "u_vw must equal d tanh(Omega)");
  }
  // u_v perpendicular to d: (u_v ^ d) d
  const Vector2 perp = vector_part(gp(antisym(uv.mv(), d.mv()), d.mv()));
  const Vector2 num = uv.vec() + uvw.vec() + perp * (1.0 / std::cosh(omega) - 1.0);
  return Velocity(num * (1.0 / (1.0 + inner(uv.vec(), uvw.vec()))));
}

double velocity_add_cosh(double phi, const Velocity& uv, const Velocity& uvw, double omega) {
  return std::cosh(phi) * std::cosh(omega) * (1.0 + inner(uv.vec(), uvw.vec()));
}

G2Multivector apply_passive_boost(const G2Multivector& x, const UnitVector2& d, double omega) {
  const G2Multivector half = exp_vector(d.vec(), omega / 2.0);
  return gp(gp(half, x), half);
}

}  // namespace mplanes
