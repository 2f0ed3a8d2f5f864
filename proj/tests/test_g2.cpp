#include <doctest.h>

#include <numbers>

#include "mplanes/g2.hpp"
#include "mplanes/sampling.hpp"
#include "oracle.hpp"

using namespace mplanes;
using G = G2Multivector;

namespace {

constexpr double kPi = std::numbers::pi;

bool near(const G& a, const G& b, double tol) { return oracle::diff(a, b) <= tol; }

}  // namespace

TEST_CASE("basis products") {
  CHECK(gp(G::e1(), G::e2()) == G::i());
  CHECK(gp(G::i(), G::i()) == G::scalar(-1.0));
  CHECK(gp(G::e1() + G::i(), G::e1() + G::i()) == G{});
  CHECK(gp(G::e2(), G::e1()) == -G::i());
  CHECK(gp(G::e1(), G::i()) == G::e2());
  CHECK(gp(G::i(), G::e1()) == -G::e2());
}

TEST_CASE("product matches the blade oracle") {
  Sampler rng(11);
  for (int n = 0; n < 2000; ++n) {
    const G a = rng.g2(3.0);
    const G b = rng.g2(3.0);
    CHECK(near(gp(a, b), oracle::product(a, b), 1e-13));
  }
}

TEST_CASE("ring axioms") {
  Sampler rng(12);
  for (int n = 0; n < 500; ++n) {
    const G a = rng.g2(), b = rng.g2(), c = rng.g2();
    CHECK(near(gp(gp(a, b), c), gp(a, gp(b, c)), 1e-14));
    CHECK(near(gp(a, b + c), gp(a, b) + gp(a, c), 1e-14));
    CHECK(near(gp(a + b, c), gp(a, c) + gp(b, c), 1e-14));
    CHECK(gp(G::scalar(1.0), a) == a);
  }
}

TEST_CASE("sym and antisym") {
  CHECK(sym(G::e1(), G::e2()) == G{});
  CHECK(antisym(G::e1(), G::e2()) == G::i());
  Sampler rng(13);
  for (int n = 0; n < 200; ++n) {
    const G g = rng.g2();
    CHECK(near(sym(g, g), gp(g, g), 1e-15));
    CHECK(near(antisym(g, g), G{}, 0.0));
    const G h = rng.g2();
    CHECK(near(sym(g, h) + antisym(g, h), gp(g, h), 1e-15));
  }
}

TEST_CASE("inner and outer of vectors") {
  CHECK(inner({1, 0}, {1, 0}) == 1.0);
  CHECK(outer({1, 0}, {0, 1}) == 1.0);
  Sampler rng(14);
  for (int n = 0; n < 200; ++n) {
    const double al = rng.angle(), be = rng.angle();
    const Vector2 a{std::cos(al), std::sin(al)}, b{std::cos(be), std::sin(be)};
    CHECK(inner(a, b) == doctest::Approx(std::cos(be - al)).epsilon(1e-12));
    CHECK(outer(a, b) == doctest::Approx(std::sin(be - al)).epsilon(1e-12));
    // ab = a.b + a^b
    const G ab = gp(a.mv(), b.mv());
    CHECK(ab.s == doctest::Approx(inner(a, b)));
    CHECK(ab.b == doctest::Approx(outer(a, b)));
  }
}

TEST_CASE("triple_sym") {
  CHECK(triple_sym(G::e1(), G::e2(), G::i()) == -1.0);
  CHECK(triple_sym(G::e1(), G::e1(), G::e2()) == 0.0);
  CHECK_THROWS_AS(triple_sym(G::scalar(1.0), G::e1(), G::e2()), DomainError);

  // Exhaustive over basis triples: oracle is <sym(A, antisym(B, C))> from
  // blade products, and minus the determinant of the coefficient rows.
  const G basis[3] = {G::e1(), G::e2(), G::i()};
  auto row = [](const G& g) { return std::array<double, 3>{g.v1, g.v2, g.b}; };
  int nonzero = 0;
  for (const G& a : basis)
    for (const G& b : basis)
      for (const G& c : basis) {
        const G bc = (oracle::product(b, c) - oracle::product(c, b)) * 0.5;
        const double expect = ((oracle::product(a, bc) + oracle::product(bc, a)) * 0.5).s;
        CHECK(triple_sym(a, b, c) == expect);
        CHECK(triple_sym(a, b, c) == -oracle::det3(row(a), row(b), row(c)));
        nonzero += expect != 0.0;
      }
  CHECK(nonzero == 6);

  Sampler rng(15);
  for (int n = 0; n < 500; ++n) {
    const G a = rng.zero_scalar(), b = rng.zero_scalar(), c = rng.zero_scalar();
    const G bc = (oracle::product(b, c) - oracle::product(c, b)) * 0.5;
    const double expect = ((oracle::product(a, bc) + oracle::product(bc, a)) * 0.5).s;
    CHECK(triple_sym(a, b, c) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("zero-scalar classification") {
  CHECK(classify_zero_scalar(G::e1()) == ZeroScalarClass::RelativeVector);
  CHECK(classify_zero_scalar(G::e1() + G::i()) == ZeroScalarClass::Nilpotent);
  CHECK(classify_zero_scalar(G::i()) == ZeroScalarClass::RelativeBivector);
  CHECK(classify_zero_scalar(G{}) == ZeroScalarClass::Nilpotent);
  CHECK(classify_zero_scalar(G{0, 3, 4, 5}) == ZeroScalarClass::Nilpotent);
  CHECK(classify_zero_scalar(G{0, 3, 4, 5 + 1e-3}) == ZeroScalarClass::RelativeBivector);
  CHECK_THROWS_AS(classify_zero_scalar(G{1, 0, 0, 0}), DomainError);
  try {
    classify_zero_scalar(G{1, 0, 0, 0});
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NonZeroScalar);
  }
  CHECK(std::string(to_string(ZeroScalarClass::RelativeVector)) == "RelativeVector");
}

TEST_CASE("exponential") {
  CHECK(near(exp_zero_scalar(G::i() * (kPi / 2)), G::i(), 1e-15));
  for (double phi : {-2.0, -0.3, 0.0, 0.7, 3.0}) {
    const G expect{std::cosh(phi), std::sinh(phi), 0, 0};
    CHECK(near(exp_zero_scalar(G::e1() * phi), expect, 1e-14 * std::cosh(phi)));
    CHECK(near(exp_vector({1, 0}, phi), expect, 1e-14 * std::cosh(phi)));
  }
  CHECK(exp_zero_scalar(G::e1() + G::i()) == G{1, 1, 0, 1});
  CHECK(near(oracle::series_exp(G::e1() + G::i(), 20), G{1, 1, 0, 1}, 1e-15));

  Sampler rng(16);
  for (int n = 0; n < 500; ++n) {
    const G a = rng.zero_scalar(2.0);
    const G e = exp_zero_scalar(a);
    CHECK(near(e, oracle::series_exp(a, 40), 1e-12 * std::max(1.0, max_abs(e))));
  }
  // Tiny arguments go through the Taylor guard.
  for (const G& a : {G{0, 1e-9, 0, 0}, G{0, 0, 0, 1e-9}, G{0, 3e-8, 1e-8, 2e-8}}) {
    CHECK(near(exp_zero_scalar(a), oracle::series_exp(a, 5), 1e-16));
  }
  CHECK(near(exp_bivector(0.4), G{std::cos(0.4), 0, 0, std::sin(0.4)}, 1e-16));
  CHECK_THROWS_AS(exp_zero_scalar(G{0.5, 0, 0, 0}), DomainError);
}

TEST_CASE("grade projection") {
  const G g{1, 2, 0, 3};
  CHECK(grade(g, 1) == G{0, 2, 0, 0});
  CHECK(grade(G::i(), 1) == G{});
  Sampler rng(17);
  for (int n = 0; n < 50; ++n) {
    const G x = rng.g2();
    CHECK(grade(x, 0) + grade(x, 1) + grade(x, 2) == x);
  }
  CHECK_THROWS_AS(grade(g, 3), DomainError);
  CHECK_THROWS_AS(grade(g, -1), DomainError);
  CHECK(scalar_part(g) == 1.0);
  CHECK(vector_part(g) == Vector2{2, 0});
  CHECK(bivector_part(g) == 3.0);
}

TEST_CASE("reverse") {
  CHECK(reverse(G{1, 2, 3, 4}) == G{1, 2, 3, -4});
  Sampler rng(18);
  for (int n = 0; n < 200; ++n) {
    const G a = rng.g2(), b = rng.g2();
    CHECK(near(reverse(gp(a, b)), gp(reverse(b), reverse(a)), 1e-14));
  }
}
