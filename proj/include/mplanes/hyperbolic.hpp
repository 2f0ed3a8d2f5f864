#pragma once

#include "mplanes/errors.hpp"

namespace mplanes {

// w = x + u y with u^2 = 1.
struct HyperbolicNumber {
  double x = 0.0;
  double y = 0.0;

  constexpr HyperbolicNumber operator-() const { return {-x, -y}; }
  constexpr bool operator==(const HyperbolicNumber&) const = default;
};

constexpr HyperbolicNumber operator+(const HyperbolicNumber& a, const HyperbolicNumber& b) {
  return {a.x + b.x, a.y + b.y};
}
constexpr HyperbolicNumber operator-(const HyperbolicNumber& a, const HyperbolicNumber& b) {
  return {a.x - b.x, a.y - b.y};
}
constexpr HyperbolicNumber operator*(double k, const HyperbolicNumber& a) { return {k * a.x, k * a.y}; }

constexpr HyperbolicNumber hmul(const HyperbolicNumber& a, const HyperbolicNumber& b) {
  return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
}
constexpr HyperbolicNumber operator*(const HyperbolicNumber& a, const HyperbolicNumber& b) { return hmul(a, b); }

// w^- = x - u y
constexpr HyperbolicNumber hconj(const HyperbolicNumber& w) { return {w.x, -w.y}; }

// |w w^-| = |x^2 - y^2|
double hmodulus_sq(const HyperbolicNumber& w);

// sqrt(|(x1-x2)^2 - (y1-y2)^2|)
double hdistance(const HyperbolicNumber& a, const HyperbolicNumber& b);

// Which half of the unit hyperbola pair a number sits over: |x| > |y| is
// rho e^{u phi} up to sign, |y| > |x| is rho u e^{u phi} up to sign.
enum class HyperbolicAxis { TimelikeBranch, SpacelikeBranch };

// w = sign * rho * e^{u phi}  or  w = sign * rho * u * e^{u phi}.
struct HyperbolicPolar {
  int sign = 1;
  HyperbolicAxis axis = HyperbolicAxis::TimelikeBranch;
  double rho = 0.0;
  double phi = 0.0;
};

// Euler form of w. Throws DomainError(NullCone) when
// |x^2 - y^2| <= null_tol * (x^2 + y^2).
HyperbolicPolar polar(const HyperbolicNumber& w, double null_tol = 1e-12);

HyperbolicNumber from_polar(const HyperbolicPolar& p);

}  // namespace mplanes
