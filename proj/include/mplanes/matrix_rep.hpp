#pragma once

#include <array>

#include "mplanes/g12.hpp"
#include "mplanes/g2.hpp"

namespace mplanes {

// Row-major 2x2 real matrix.
struct Mat2 {
  std::array<std::array<double, 2>, 2> m{};

  static constexpr Mat2 identity() { return Mat2{{{{1.0, 0.0}, {0.0, 1.0}}}}; }
  static constexpr Mat2 zero() { return Mat2{}; }

  constexpr double operator()(int r, int c) const { return m[r][c]; }
  constexpr bool operator==(const Mat2&) const = default;
};

constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2{{{{a(0, 0) + b(0, 0), a(0, 1) + b(0, 1)}, {a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)}}}};
}
constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
  return Mat2{{{{a(0, 0) - b(0, 0), a(0, 1) - b(0, 1)}, {a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)}}}};
}
constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}
constexpr Mat2 operator*(double k, const Mat2& a) {
  return Mat2{{{{k * a(0, 0), k * a(0, 1)}, {k * a(1, 0), k * a(1, 1)}}}};
}

// [[d, -b], [-c, a]]
constexpr Mat2 adjugate(const Mat2& a) { return Mat2{{{{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}}}}; }

// Max-norm of the entries.
double max_abs(const Mat2& a);

// re + s im with s central and s^2 = -1.
struct Mat2Complexified {
  Mat2 re;
  Mat2 im;

  constexpr bool operator==(const Mat2Complexified&) const = default;
};

constexpr Mat2Complexified operator*(const Mat2Complexified& a, const Mat2Complexified& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

double max_abs(const Mat2Complexified& a);

// Matrix of g = x + iy + v1 e1 + v2 e2 in the spectral basis built on
// u+ = (1 + e2)/2: [[x + v2, v1 - y], [v1 + y, x - v2]].
Mat2 matrix_of(const G2Multivector& g);

// Inverse of matrix_of.
G2Multivector from_matrix(const Mat2& m);

// e1 g e1
G2Multivector e1_conjugate(const G2Multivector& g);

enum class Idempotent { UPlus, UMinus };

// u+- = (1 +- e2)/2
G2Multivector idempotent(Idempotent which);

struct ComplexSplit {
  G2Multivector g;
  G2Multivector h;
};

/// f = g + s h with g the even part and h = -s * odd(f), both read back
/// into G2 through the even embedding.
ComplexSplit complex_split(const G12Multivector& f);
G12Multivector from_complex_split(const ComplexSplit& split);

// [f] = [g] + s [h]
Mat2Complexified matrix_of_f(const G12Multivector& f);
G12Multivector from_matrix_f(const Mat2Complexified& m);

}  // namespace mplanes
