#include "mplanes/g2.hpp"

#include <algorithm>
#include <string>

namespace mplanes {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonZeroScalar: return "NonZeroScalar";
    case ErrorCode::InvalidGrade: return "InvalidGrade";
    case ErrorCode::NullCone: return "NullCone";
    case ErrorCode::AmbiguousRotor: return "AmbiguousRotor";
    case ErrorCode::NotUnitBivector: return "NotUnitBivector";
    case ErrorCode::NotPositivelyOriented: return "NotPositivelyOriented";
    case ErrorCode::Superluminal: return "Superluminal";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::MalformedBoost: return "MalformedBoost";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::NotUnitTimelike: return "NotUnitTimelike";
    case ErrorCode::OppositeOrientation: return "OppositeOrientation";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegenerateD: return "DegenerateD";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
  }
  return "Unknown";
}

const char* to_string(ZeroScalarClass c) {
  switch (c) {
    case ZeroScalarClass::RelativeVector: return "RelativeVector";
    case ZeroScalarClass::Nilpotent: return "Nilpotent";
    case ZeroScalarClass::RelativeBivector: return "RelativeBivector";
  }
  return "Unknown";
}

double max_abs(const G2Multivector& g) {
  return std::max({std::abs(g.s), std::abs(g.v1), std::abs(g.v2), std::abs(g.b)});
}

double classification_scale(const G2Multivector& a) {
  const double m = max_abs(a);
  return std::max(1.0, m * m);
}

namespace {

void require_zero_scalar(const G2Multivector& a, double tol, const char* what) {
  if (std::abs(a.s) > tol * std::max(1.0, max_abs(a))) {
    throw DomainError(ErrorCode::NonZeroScalar,
                      std::string(what) + " requires a vanishing scalar part, got " + std::to_string(a.s));
  }
}

}  // namespace

double triple_sym(const G2Multivector& a, const G2Multivector& b, const G2Multivector& c, double tol) {
  require_zero_scalar(a, tol, "triple_sym");
  require_zero_scalar(b, tol, "triple_sym");
  require_zero_scalar(c, tol, "triple_sym");
  const double det = a.v1 * (b.v2 * c.b - b.b * c.v2) - a.v2 * (b.v1 * c.b - b.b * c.v1) +
                     a.b * (b.v1 * c.v2 - b.v2 * c.v1);
  return -det;
}

ZeroScalarClass classify_zero_scalar(const G2Multivector& a, double tol) {
  require_zero_scalar(a, tol, "classify_zero_scalar");
  // A^2 is a pure scalar once the scalar part vanishes.
  const double sq = a.v1 * a.v1 + a.v2 * a.v2 - a.b * a.b;
  if (std::abs(sq) < tol * classification_scale(a)) return ZeroScalarClass::Nilpotent;
  return sq > 0.0 ? ZeroScalarClass::RelativeVector : ZeroScalarClass::RelativeBivector;
}

G2Multivector exp_zero_scalar(const G2Multivector& a, double tol) {
  const ZeroScalarClass cls = classify_zero_scalar(a, tol);
  const G2Multivector body{0.0, a.v1, a.v2, a.b};
  const double sq = a.v1 * a.v1 + a.v2 * a.v2 - a.b * a.b;

  // exp(A) = C + A S with C, S even/odd series in sqrt(A^2).
  double c = 1.0;
  double s = 1.0;
  if (cls == ZeroScalarClass::Nilpotent || std::abs(sq) < 1e-12) {
    // Leading terms of the series; exactly 1 + A when A^2 = 0.
    c = 1.0 + sq / 2.0;
    s = 1.0 + sq / 6.0;
  } else if (cls == ZeroScalarClass::RelativeVector) {
    const double phi = std::sqrt(sq);
    c = std::cosh(phi);
    s = std::sinh(phi) / phi;
  } else {
    const double theta = std::sqrt(-sq);
    c = std::cos(theta);
    s = std::sin(theta) / theta;
  }
  return G2Multivector::scalar(c) + body * s;
}

G2Multivector exp_vector(const Vector2& a, double phi) {
  return {std::cosh(phi), a.v1 * std::sinh(phi), a.v2 * std::sinh(phi), 0.0};
}

G2Multivector exp_bivector(double theta) { return {std::cos(theta), 0.0, 0.0, std::sin(theta)}; }

G2Multivector grade(const G2Multivector& g, int k) {
  switch (k) {
    case 0: return {g.s, 0.0, 0.0, 0.0};
    case 1: return {0.0, g.v1, g.v2, 0.0};
    case 2: return {0.0, 0.0, 0.0, g.b};
    default:
      throw DomainError(ErrorCode::InvalidGrade, "G2 has grades 0, 1, 2; got " + std::to_string(k));
  }
}

}  // namespace mplanes
