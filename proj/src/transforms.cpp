#include "mplanes/transforms.hpp"

#include <algorithm>
#include <string>

namespace mplanes {

UnitVector2::UnitVector2(const Vector2& v) : v_(v) {
  if (!(std::abs(v.norm_sq() - 1.0) <= 1e-12)) {
    throw DomainError(ErrorCode::NotUnitVector, "|v|^2 = " + std::to_string(v.norm_sq()));
  }
}

UnitVector2 UnitVector2::normalize(const Vector2& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError(ErrorCode::ZeroVector, "cannot normalize a zero vector");
  return UnitVector2(Vector2{v.v1 / n, v.v2 / n}, Unchecked{});
}

UnitVector2 UnitVector2::from_angle(double theta) {
  return UnitVector2(Vector2{std::cos(theta), std::sin(theta)}, Unchecked{});
}

G2Multivector OrientedFrame::element() const {
  return gp(G2Multivector::i() * static_cast<double>(orientation), exp_vector(a.vec(), phi));
}

G2Multivector apply_rotor(const G2Multivector& rotor, const G2Multivector& x) {
  return gp(gp(rotor, x), reverse(rotor));
}

G2Multivector rotate(const G2Multivector& x, double theta) { return apply_rotor(exp_bivector(-theta / 2.0), x); }

Vector2 rotate(const Vector2& x, double theta) { return vector_part(rotate(x.mv(), theta)); }

G2Multivector rotor_between(const UnitVector2& a, const UnitVector2& b) {
  const double c = inner(a.vec(), b.vec());
  const double s = outer(a.vec(), b.vec());
  if (c <= -1.0 + 1e-12 && std::abs(s) <= 1e-6) {
    throw DomainError(ErrorCode::AmbiguousRotor, "a and b are antipodal; the rotor is not unique");
  }
  const double theta = std::atan2(s, c);
  return exp_bivector(-theta / 2.0);
}

G2Multivector active_boost(const G2Multivector& x, const UnitVector2& a, double phi) {
  return gp(gp(exp_vector(a.vec(), -phi / 2.0), x), exp_vector(a.vec(), phi / 2.0));
}

RelativeBasis relative_basis(const UnitVector2& a, double phi) {
  const G2Multivector boost = exp_vector(a.vec(), phi);
  RelativeBasis basis;
  basis.e1p = a.mv();
  basis.e2p = gp(gp(a.mv(), G2Multivector::i()), boost);
  basis.j = gp(G2Multivector::i(), boost);
  return basis;
}

OrientedFrame classify_unit_minus_one(const G2Multivector& h, double tol) {
  const double scale = 1.0 + h.v1 * h.v1 + h.v2 * h.v2 + h.b * h.b;
  const double sq = h.v1 * h.v1 + h.v2 * h.v2 - h.b * h.b;
  if (std::abs(h.s) > tol * std::sqrt(scale) || std::abs(sq + 1.0) > tol * scale) {
    throw DomainError(ErrorCode::NotUnitBivector, "expected h^2 = -1 with vanishing scalar part");
  }
  OrientedFrame f;
  f.orientation = h.b >= 0.0 ? 1 : -1;
  const double n = std::hypot(h.v1, h.v2);  // sinh(phi)
  if (n == 0.0) return f;
  // Case +i: i a sinh(phi) = h1 e1 + h2 e2; case -i: -i a sinh(phi) = h1 e1 + h2 e2.
  // Both are normalized so that phi >= 0.
  const Vector2 dir = f.orientation > 0 ? Vector2{-h.v2, h.v1} : Vector2{h.v2, -h.v1};
  f.a = UnitVector2::normalize(dir);
  f.phi = std::asinh(n);
  return f;
}

Vector2 frame_velocity(const OrientedFrame& f) { return f.a.vec() * std::tanh(f.phi); }

}  // namespace mplanes
