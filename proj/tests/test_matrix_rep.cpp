#include <doctest.h>

#include "mplanes/matrix_rep.hpp"
#include "mplanes/sampling.hpp"
#include "oracle.hpp"

using namespace mplanes;
using G = G2Multivector;
using F = G12Multivector;

namespace {

Mat2 mat(double a, double b, double c, double d) { return Mat2{{{{a, b}, {c, d}}}}; }

const Mat2 kSwap = mat(0, 1, 1, 0);

}  // namespace

TEST_CASE("matrix of basis elements") {
  CHECK(matrix_of(G::scalar(1.0)) == Mat2::identity());
  CHECK(matrix_of(G::e2()) == mat(1, 0, 0, -1));
  CHECK(matrix_of(G::e1()) == mat(0, 1, 1, 0));
  CHECK(matrix_of(G::i()) == mat(0, -1, 1, 0));
  CHECK(from_matrix(Mat2::identity()) == G::scalar(1.0));
  CHECK(from_matrix(mat(0, 1, 1, 0)) == G::e1());
}

TEST_CASE("spectral basis") {
  const G up = idempotent(Idempotent::UPlus), um = idempotent(Idempotent::UMinus);
  CHECK(gp(up, up) == up);
  CHECK(gp(um, um) == um);
  CHECK(gp(up, um) == G{});
  CHECK(up + um == G::scalar(1.0));
  CHECK(matrix_of(up) == mat(1, 0, 0, 0));
  CHECK(matrix_of(um) == mat(0, 0, 0, 1));
}

TEST_CASE("G2 matrix homomorphism") {
  Sampler rng(61);
  for (int n = 0; n < 5000; ++n) {
    const G a = rng.g2(4.0), b = rng.g2(4.0);
    const double scale = std::max(1.0, max_abs(a) * max_abs(b));
    CHECK(oracle::diff(matrix_of(gp(a, b)), matrix_of(a) * matrix_of(b)) <= 1e-12 * scale);
    // Linear bijection: exact up to the rounding of x +- v2.
    CHECK(oracle::diff(from_matrix(matrix_of(a)), a) <= 1e-15 * std::max(1.0, max_abs(a)));
    CHECK(adjugate(matrix_of(a)) == matrix_of(G{a.s, -a.v1, -a.v2, -a.b}));
  }
}

TEST_CASE("e1 conjugation") {
  CHECK(e1_conjugate(G::e1()) == G::e1());
  CHECK(e1_conjugate(G::e2()) == -G::e2());
  CHECK(e1_conjugate(G::i()) == -G::i());
  Sampler rng(62);
  for (int n = 0; n < 500; ++n) {
    const G g = rng.g2();
    CHECK(e1_conjugate(e1_conjugate(g)) == g);
    CHECK(e1_conjugate(g) == gp(gp(G::e1(), g), G::e1()));
    CHECK(oracle::diff(matrix_of(e1_conjugate(g)), kSwap * matrix_of(g) * kSwap) == 0.0);
  }
}

TEST_CASE("complexified matrices for G12") {
  const Mat2Complexified ms = matrix_of_f(F::pseudoscalar());
  CHECK(ms.re == Mat2::zero());
  CHECK(ms.im == Mat2::identity());

  const Mat2Complexified m0 = matrix_of_f(F::basis(F::G0));
  const Mat2Complexified sq = m0 * m0;
  CHECK(sq.re == Mat2::identity());
  CHECK(sq.im == Mat2::zero());
  // g0 = s h with h = i
  const ComplexSplit split = complex_split(F::basis(F::G0));
  CHECK(split.g == G{});
  CHECK(split.h == G::i());

  Sampler rng(63);
  for (int n = 0; n < 2000; ++n) {
    const F a = rng.g12(2.0), b = rng.g12(2.0);
    const Mat2Complexified lhs = matrix_of_f(gp12(a, b));
    const Mat2Complexified rhs = matrix_of_f(a) * matrix_of_f(b);
    CHECK(max_abs(Mat2Complexified{lhs.re - rhs.re, lhs.im - rhs.im}) <= 1e-11);
    CHECK(oracle::diff(from_matrix_f(matrix_of_f(a)), a) <= 1e-15 * std::max(1.0, max_abs(a)));
    const ComplexSplit cs = complex_split(a);
    CHECK(from_complex_split(cs) == a);
    CHECK(oracle::diff(embed_even(cs.g), even_part(a)) == 0.0);
  }
}

TEST_CASE("involutions as matrix operations") {
  Sampler rng(64);
  for (int n = 0; n < 500; ++n) {
    const F f = rng.g12();
    const Mat2Complexified m = matrix_of_f(f);
    const Mat2Complexified mi = matrix_of_f(main_involution(f));
    const Mat2Complexified mr = matrix_of_f(reversion(f));
    const Mat2Complexified mc = matrix_of_f(clifford_conj(f));
    CHECK(max_abs(mi.re - m.re) <= 1e-15);
    CHECK(max_abs(mi.im + m.im) <= 1e-15);
    CHECK(max_abs(mr.re - adjugate(m.re)) <= 1e-15);
    CHECK(max_abs(mr.im + adjugate(m.im)) <= 1e-15);
    CHECK(max_abs(mc.re - adjugate(m.re)) <= 1e-15);
    CHECK(max_abs(mc.im - adjugate(m.im)) <= 1e-15);
  }
}
