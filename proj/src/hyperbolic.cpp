#include "mplanes/hyperbolic.hpp"

#include <cmath>

namespace mplanes {

double hmodulus_sq(const HyperbolicNumber& w) { return std::abs((w.x - w.y) * (w.x + w.y)); }

double hdistance(const HyperbolicNumber& a, const HyperbolicNumber& b) { return std::sqrt(hmodulus_sq(a - b)); }

HyperbolicPolar polar(const HyperbolicNumber& w, double null_tol) {
  const double q = (w.x - w.y) * (w.x + w.y);
  if (std::abs(q) <= null_tol * (w.x * w.x + w.y * w.y)) {
    throw DomainError(ErrorCode::NullCone, "x + u y lies on the null cone |x| = |y|");
  }
  HyperbolicPolar p;
  p.rho = std::sqrt(std::abs(q));
  if (std::abs(w.x) > std::abs(w.y)) {
    p.axis = HyperbolicAxis::TimelikeBranch;
    p.sign = w.x > 0.0 ? 1 : -1;
    p.phi = std::atanh(w.y / w.x);
  } else {
    p.axis = HyperbolicAxis::SpacelikeBranch;
    p.sign = w.y > 0.0 ? 1 : -1;
    p.phi = std::atanh(w.x / w.y);
  }
  return p;
}

HyperbolicNumber from_polar(const HyperbolicPolar& p) {
  const double k = p.sign * p.rho;
  const double c = std::cosh(p.phi);
  const double s = std::sinh(p.phi);
  if (p.axis == HyperbolicAxis::TimelikeBranch) return {k * c, k * s};
  return {k * s, k * c};
}

}  // namespace mplanes
