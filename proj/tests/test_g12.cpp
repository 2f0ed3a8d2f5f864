#include <doctest.h>

#include "mplanes/g12.hpp"
#include "mplanes/kinematics.hpp"
#include "mplanes/sampling.hpp"
#include "oracle.hpp"

using namespace mplanes;
using F = G12Multivector;
using G = G2Multivector;

namespace {

const F kOne = F::scalar(1.0);
const F g0 = F::basis(F::G0);
const F g1 = F::basis(F::G1);
const F g2 = F::basis(F::G2);
const F g01 = F::basis(F::G01);
const F g02 = F::basis(F::G02);
const F g21 = F::basis(F::G21);
const F s = F::pseudoscalar();

bool near(const F& a, const F& b, double tol) { return oracle::diff(a, b) <= tol; }

// Valid observer triple: u = g0, v and w the duals of random H+ frames.
struct Triple {
  MinkowskiVector u, v, w;
  OrientedFrame j, k;
};

Triple random_triple(Sampler& rng, double max_phi = 2.0) {
  Triple t;
  t.j = rng.frame(max_phi);
  t.k = rng.frame(max_phi);
  t.u = psi(G::i());
  t.v = psi(t.j);
  t.w = psi(t.k);
  return t;
}

}  // namespace

TEST_CASE("G12 basis products") {
  CHECK(gp12(g0, g0) == kOne);
  CHECK(gp12(g1, g1) == -kOne);
  CHECK(gp12(g2, g2) == -kOne);
  CHECK(gp12(s, s) == -kOne);
  CHECK(gp12(g01, g02) == g21);
  CHECK(gp12(g0, g1) == g01);
  CHECK(gp12(g2, g1) == g21);
  for (std::size_t a = 0; a < F::kSize; ++a)
    for (std::size_t b = 0; b < F::kSize; ++b) {
      const F ea = F::basis(a), eb = F::basis(b);
      CHECK(gp12(ea, eb) == oracle::product(ea, eb));
      const BladeProduct p = blade_product(a, b);
      CHECK(gp12(ea, eb) == F::basis(p.index) * static_cast<double>(p.sign));
    }
}

TEST_CASE("G12 product against oracle") {
  Sampler rng(51);
  for (int n = 0; n < 1000; ++n) {
    const F a = rng.g12(2.0), b = rng.g12(2.0), c = rng.g12(2.0);
    CHECK(near(gp12(a, b), oracle::product(a, b), 1e-13));
    CHECK(near(gp12(gp12(a, b), c), gp12(a, gp12(b, c)), 1e-12));
    // s is central
    CHECK(gp12(s, a) == gp12(a, s));
  }
}

TEST_CASE("grades and even embedding") {
  F f;
  for (std::size_t k = 0; k < F::kSize; ++k) f[k] = static_cast<double>(k + 1);
  CHECK(grade(f, 0) + grade(f, 1) + grade(f, 2) + grade(f, 3) == f);
  CHECK(even_part(f) + odd_part(f) == f);
  CHECK(grade(f, 3) == s * 8.0);
  CHECK_THROWS_AS(grade(f, 4), DomainError);

  CHECK(embed_even(G::i()) == g21);
  CHECK(embed_even(G::e1()) == g01);
  CHECK(embed_even(G::e2()) == g02);
  CHECK_THROWS_AS(project_even(g0), DomainError);
  Sampler rng(52);
  for (int n = 0; n < 500; ++n) {
    const G a = rng.g2(), b = rng.g2();
    CHECK(project_even(embed_even(a)) == a);
    CHECK(near(embed_even(gp(a, b)), gp12(embed_even(a), embed_even(b)), 1e-12));
  }
}

TEST_CASE("duality") {
  const MinkowskiVector r = psi(G::i());
  CHECK(r == MinkowskiVector{1, 0, 0});
  CHECK(gp12(s, g21) == g0);
  CHECK_THROWS_AS(psi(-G::i()), DomainError);
  CHECK_THROWS_AS(psi(G::e1()), DomainError);
  CHECK_THROWS_AS(psi(G::i() * 2.0), DomainError);

  Sampler rng(53);
  for (int n = 0; n < 500; ++n) {
    const OrientedFrame f = rng.frame(2.0);
    const MinkowskiVector v = psi(f);
    const double ch = std::cosh(f.phi);
    // v = g0 e^{phi a}
    const F expect = gp12(g0, embed_even(exp_vector(f.a.vec(), f.phi)));
    CHECK(near(v.mv(), expect, 1e-13 * ch));
    CHECK(near(v.mv(), boosted_observer(f.a, f.phi).mv(), 1e-13 * ch));
    CHECK(near(gp12(v.mv(), v.mv()), kOne, 1e-12 * ch * ch));
    // psi(h) = s h
    CHECK(near(v.mv(), gp12(s, embed_even(f.element())), 1e-13 * ch));
    CHECK(oracle::diff(psi_inverse(v), f.element()) <= 1e-13 * ch);
  }
}

TEST_CASE("Minkowski products and causal class") {
  const MinkowskiVector t{1, 0, 0}, x{0, 1, 0};
  CHECK(mink_inner(t, t) == 1.0);
  CHECK(mink_inner(x, x) == -1.0);
  CHECK(mink_outer(x, x) == F{});
  CHECK(mink_outer(t, x) == g01);
  for (double phi : {0.2, 1.0, 2.5}) {
    const MinkowskiVector v = boosted_observer(UnitVector2::e1(), phi);
    CHECK(mink_inner(t, v) == doctest::Approx(std::cosh(phi)).epsilon(1e-14));
    CHECK(near(mink_outer(t, v), g01 * std::sinh(phi), 1e-14 * std::cosh(phi)));
  }
  CHECK(causal_class(t) == CausalClass::Timelike);
  CHECK(causal_class(x) == CausalClass::Spacelike);
  CHECK(causal_class({1, 1, 0}) == CausalClass::Lightlike);
  CHECK(causal_class({1, 0.6, 0.8}) == CausalClass::Lightlike);
  CHECK_THROWS_AS(causal_class({0, 0, 0}), DomainError);
  CHECK_NOTHROW(require_future_unit_timelike(t));
  CHECK_THROWS_AS(require_future_unit_timelike({-1, 0, 0}), DomainError);
  CHECK_THROWS_AS(require_future_unit_timelike({2, 0, 0}), DomainError);
}

TEST_CASE("relative velocity bivector") {
  const MinkowskiVector u{1, 0, 0};
  CHECK(relative_velocity_bivector(u, u) == F{});
  const double phi = 0.8;
  const MinkowskiVector v = boosted_observer(UnitVector2::e1(), phi);
  CHECK(near(relative_velocity_bivector(u, v), g01 * std::tanh(phi), 1e-15));
  CHECK(near(relative_velocity_bivector(v, u), g01 * -std::tanh(phi), 1e-15));
  CHECK_THROWS_AS(relative_velocity_bivector(u, {-1, 0, 0}), DomainError);

  // Gamma identity: u.v = 1/sqrt(1 - |u_v|^2); timelike-plane bivectors square positive.
  Sampler rng(54);
  for (int n = 0; n < 500; ++n) {
    const MinkowskiVector a = rng.observer(), b = rng.observer();
    const F uv = relative_velocity_bivector(a, b);
    const double speed_sq = gp12(uv, uv)[F::One];
    CHECK(mink_inner(a, b) == doctest::Approx(1.0 / std::sqrt(1.0 - speed_sq)).epsilon(1e-11));
  }
}

TEST_CASE("recomposition through an observer") {
  const MinkowskiVector u{1, 0, 0};
  const Recomposition same = recompute_composition(u, u, u);
  CHECK(same.v_dot_w == 1.0);
  CHECK(max_abs(same.vw) == 0.0);

  const double phi = std::atanh(0.5), rho = std::atanh(0.8);
  const Recomposition col = recompute_composition(u, boosted_observer(UnitVector2::e1(), phi),
                                                  boosted_observer(UnitVector2::e1(), rho));
  CHECK(col.v_dot_w == doctest::Approx(std::cosh(rho - phi)).epsilon(1e-14));
  CHECK(near(col.vw, g01 * 0.5, 1e-14));

  Sampler rng(55);
  for (int n = 0; n < 500; ++n) {
    const Triple t = random_triple(rng);
    const Recomposition r = recompute_composition(t.u, t.v, t.w);
    const CompositionResult c = compose_frames(t.j, t.k);
    CHECK(r.v_dot_w == doctest::Approx(c.cosh_omega).epsilon(1e-10));
    CHECK(near(r.vw, embed_even(c.vw), 1e-10));
    CHECK(near(r.product, gp12(gp12(t.v.mv(), t.u.mv()), gp12(t.u.mv(), t.w.mv())), 1e-10 * c.cosh_omega * 10));
    // Observer independence of v.w
    const MinkowskiVector u2 = rng.observer(1.0);
    CHECK(recompute_composition(u2, t.v, t.w).v_dot_w == doctest::Approx(r.v_dot_w).epsilon(1e-10));
  }
}

TEST_CASE("splitting by D") {
  const MinkowskiVector u{1, 0, 0};
  CHECK_THROWS_AS(d_split(u, u, u), DomainError);
  CHECK(parallel_rotor(u, u, u) == kOne);

  Sampler rng(56);
  int tested = 0;
  while (tested < 500) {
    const Triple t = random_triple(rng);
    DSplit sp;
    try {
      sp = d_split(t.u, t.v, t.w);
    } catch (const DomainError&) {
      continue;
    }
    ++tested;
    const double sc = std::cosh(t.j.phi) * std::cosh(t.k.phi) * 4;
    CHECK(near((sp.w_par + sp.w_perp).mv(), t.w.mv(), 1e-12 * sc));
    CHECK(near((sp.v_par + sp.v_perp).mv(), t.v.mv(), 1e-12 * sc));
    const double wd2 = gp12(sp.w_dot_d, sp.w_dot_d)[F::One];
    const double vd2 = gp12(sp.v_dot_d, sp.v_dot_d)[F::One];
    CHECK(wd2 < 0.0);
    CHECK(wd2 == doctest::Approx(vd2).epsilon(1e-9));
    CHECK(near(sp.w_wedge_d, sp.v_wedge_d, 1e-10 * sc * sc));
    CHECK(near(grade(sp.w_wedge_d, 3), sp.w_wedge_d, 0.0));
    CHECK(near(vector_dot_bivector(t.w, sp.d) + vector_wedge_bivector(t.w, sp.d), gp12(t.w.mv(), sp.d), 1e-12 * sc));
  }
}

TEST_CASE("parallel rotor") {
  Sampler rng(57);
  int tested = 0;
  while (tested < 500) {
    const Triple t = random_triple(rng);
    PassiveBoost p;
    try {
      p = passive_boost_factor(t.j, t.k);
      (void)d_split(t.u, t.v, t.w);
    } catch (const DomainError&) {
      continue;
    }
    ++tested;
    const F P = parallel_rotor(t.u, t.v, t.w);
    CHECK(P[F::One] == doctest::Approx(p.cosh_omega).epsilon(1e-9));
    // Through duality the rotor is e^{-Omega d}: it carries v toward w, against d.
    CHECK(near(P, embed_even(exp_vector(p.d.vec(), -p.omega)), 1e-9 * p.cosh_omega));
    const F Lv = apply_parallel_boost(t.u, t.v, t.w, t.v.mv());
    CHECK(near(Lv, t.w.mv(), 1e-9 * std::max(1.0, t.w.t)));
    // The part of v off the plane of D is left alone.
    const DSplit sp = d_split(t.u, t.v, t.w);
    CHECK(near(sp.w_perp.mv(), sp.v_perp.mv(), 1e-9 * p.cosh_omega));
    CHECK(near(apply_parallel_boost(t.u, t.v, t.w, sp.v_perp.mv()), sp.v_perp.mv(), 1e-9 * p.cosh_omega));
    const F R = direct_boost_rotor(t.v, t.w);
    CHECK(near(apply_rotor(R, t.v.mv()), t.w.mv(), 1e-9 * std::max(1.0, t.w.t)));
    CHECK(near(gp12(R, reversion(R)), kOne, 1e-10 * p.cosh_omega));
  }

  // Collinear: both boosts coincide.
  for (double phi : {0.2, 0.9})
    for (double rho : {-0.5, 1.4}) {
      const MinkowskiVector u{1, 0, 0};
      const UnitVector2 a = UnitVector2::from_angle(0.3);
      const MinkowskiVector v = boosted_observer(a, phi), w = boosted_observer(a, rho);
      const F lhs = half_rotor(parallel_rotor(u, v, w));
      const F rhs = direct_boost_rotor(v, w);
      CHECK(near(lhs, rhs, 1e-10));
    }
}

TEST_CASE("involutions") {
  CHECK(main_involution(g0) == -g0);
  CHECK(reversion(g01) == -g01);
  CHECK(clifford_conj(g01) == -g01);
  CHECK(main_involution(g01) == g01);
  CHECK(reversion(s) == -s);
  CHECK(main_involution(s) == -s);
  CHECK(clifford_conj(s) == s);
  Sampler rng(58);
  for (int n = 0; n < 300; ++n) {
    const F a = rng.g12(), b = rng.g12();
    CHECK(clifford_conj(clifford_conj(a)) == a);
    CHECK(main_involution(main_involution(a)) == a);
    CHECK(reversion(reversion(a)) == a);
    CHECK(reversion(a) == oracle::reverse(a));
    CHECK(near(main_involution(gp12(a, b)), gp12(main_involution(a), main_involution(b)), 1e-13));
    CHECK(near(reversion(gp12(a, b)), gp12(reversion(b), reversion(a)), 1e-13));
    CHECK(near(clifford_conj(gp12(a, b)), gp12(clifford_conj(b), clifford_conj(a)), 1e-13));
  }
}
