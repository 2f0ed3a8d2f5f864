#include "mplanes/matrix_rep.hpp"

#include <algorithm>
#include <cmath>

namespace mplanes {

double max_abs(const Mat2& a) {
  return std::max({std::abs(a(0, 0)), std::abs(a(0, 1)), std::abs(a(1, 0)), std::abs(a(1, 1))});
}

double max_abs(const Mat2Complexified& a) { return std::max(max_abs(a.re), max_abs(a.im)); }

Mat2 matrix_of(const G2Multivector& g) {
  return Mat2{{{{g.s + g.v2, g.v1 - g.b}, {g.v1 + g.b, g.s - g.v2}}}};
}

G2Multivector from_matrix(const Mat2& m) {
  return {
      (m(0, 0) + m(1, 1)) / 2.0,
      (m(0, 1) + m(1, 0)) / 2.0,
      (m(0, 0) - m(1, 1)) / 2.0,
      (m(1, 0) - m(0, 1)) / 2.0,
  };
}

G2Multivector e1_conjugate(const G2Multivector& g) { return gp(gp(G2Multivector::e1(), g), G2Multivector::e1()); }

G2Multivector idempotent(Idempotent which) {
  const double sign = which == Idempotent::UPlus ? 1.0 : -1.0;
  return {0.5, 0.0, 0.5 * sign, 0.0};
}

ComplexSplit complex_split(const G12Multivector& f) {
  // s^2 = -1, so odd(f) = s h gives h = -s odd(f).
  const G12Multivector h = gp12(-G12Multivector::pseudoscalar(), odd_part(f));
  return {project_even(even_part(f)), project_even(h)};
}

G12Multivector from_complex_split(const ComplexSplit& split) {
  return embed_even(split.g) + gp12(G12Multivector::pseudoscalar(), embed_even(split.h));
}

Mat2Complexified matrix_of_f(const G12Multivector& f) {
  const ComplexSplit split = complex_split(f);
  return {matrix_of(split.g), matrix_of(split.h)};
}

G12Multivector from_matrix_f(const Mat2Complexified& m) {
  return from_complex_split({from_matrix(m.re), from_matrix(m.im)});
}

}  // namespace mplanes
