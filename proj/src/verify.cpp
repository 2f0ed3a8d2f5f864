#include "mplanes/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "mplanes/g12.hpp"
#include "mplanes/g2.hpp"
#include "mplanes/hyperbolic.hpp"
#include "mplanes/io.hpp"
#include "mplanes/kinematics.hpp"
#include "mplanes/matrix_rep.hpp"
#include "mplanes/sampling.hpp"
#include "mplanes/transforms.hpp"

namespace mplanes {

namespace {

constexpr std::array<std::string_view, 6> kSuites{"core", "hyperbolic", "transforms", "kinematics", "spacetime", "matrix"};

// Tracks the worst error of one invariant across samples.
class Check {
 public:
  Check(std::string_view suite, std::string_view name, double tolerance) {
    r_.suite = suite;
    r_.name = name;
    r_.tolerance = tolerance;
  }

  void observe(double err, const std::function<std::string()>& describe) {
    ++r_.samples;
    if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
    if (err > r_.max_error) {
      r_.max_error = err;
      if (err > r_.tolerance) r_.counterexample = describe();
    }
  }

  InvariantResult result() const { return r_; }

 private:
  InvariantResult r_;
};

double rel(double err, double scale) { return err / std::max(1.0, scale); }

double diff(const G2Multivector& a, const G2Multivector& b) { return max_abs(a - b); }
double diff(const G12Multivector& a, const G12Multivector& b) { return max_abs(a - b); }
double diff(const Mat2& a, const Mat2& b) { return max_abs(a - b); }
double diff(const Mat2Complexified& a, const Mat2Complexified& b) {
  return std::max(max_abs(a.re - b.re), max_abs(a.im - b.im));
}

std::string show(const G2Multivector& g) { return format_g2(g); }
std::string show(const G12Multivector& f) { return format_g12(f); }
std::string show(const HyperbolicNumber& w) { return format_hyperbolic(w); }
std::string show(const OrientedFrame& f) {
  return "frame(orientation=" + std::to_string(f.orientation) + ", a=(" + format_number(f.a.v1()) + ", " +
         format_number(f.a.v2()) + "), phi=" + format_number(f.phi) + ")";
}
std::string show(const MinkowskiVector& x) { return format_g12(x.mv()); }

// Truncated power series of exp, independent of the closed form.
G2Multivector exp_series(const G2Multivector& a, int terms) {
  G2Multivector sum = G2Multivector::scalar(1.0);
  G2Multivector term = G2Multivector::scalar(1.0);
  for (int k = 1; k < terms; ++k) {
    term = gp(term, a) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

using Results = std::vector<InvariantResult>;

void core_suite(Sampler& rng, std::size_t count, Results& out) {
  Check assoc("core", "gp associativity", 1e-12);
  Check distrib("core", "gp distributivity", 1e-12);
  Check split("core", "sym + antisym = gp", 1e-15);
  Check triple("core", "triple_sym = sym(A, antisym(B, C))", 1e-12);
  Check exp("core", "exp_zero_scalar vs 30-term series (|A| <= 3)", 1e-10);
  Check nil("core", "nilpotent squares to zero", 1e-10);
  for (std::size_t n = 0; n < count; ++n) {
    const G2Multivector a = rng.g2(), b = rng.g2(), c = rng.g2();
    const double k = rng.uniform(-2.0, 2.0);
    assoc.observe(diff(gp(gp(a, b), c), gp(a, gp(b, c))),
                  [&] { return show(a) + " | " + show(b) + " | " + show(c); });
    distrib.observe(diff(gp(a, b + c * k), gp(a, b) + gp(a, c) * k),
                    [&] { return show(a) + " | " + show(b) + " | " + show(c); });
    split.observe(diff(sym(a, b) + antisym(a, b), gp(a, b)), [&] { return show(a) + " | " + show(b); });

    const G2Multivector za = rng.zero_scalar(), zb = rng.zero_scalar(), zc = rng.zero_scalar();
    triple.observe(std::abs(triple_sym(za, zb, zc) - sym(za, antisym(zb, zc)).s),
                   [&] { return show(za) + " | " + show(zb) + " | " + show(zc); });

    G2Multivector e = rng.zero_scalar(1.0);
    const double size = std::sqrt(e.v1 * e.v1 + e.v2 * e.v2 + e.b * e.b);
    if (size > 0.0) e = e * (rng.uniform(0.0, 3.0) / size);
    const G2Multivector expected = exp_series(e, 30);
    exp.observe(rel(diff(exp_zero_scalar(e), expected), max_abs(expected)), [&] { return show(e); });

    // Nilpotents are r (cos t e1 + sin t e2 +- i).
    const double r = rng.uniform(-2.0, 2.0), t = rng.angle();
    const G2Multivector z{0.0, r * std::cos(t), r * std::sin(t), n % 2 == 0 ? r : -r};
    nil.observe(max_abs(gp(z, z)) / std::max(1.0, r * r), [&] { return show(z); });
  }
  for (const Check& ch : {assoc, distrib, split, triple, exp, nil}) out.push_back(ch.result());
}

void hyperbolic_suite(Sampler& rng, std::size_t count, Results& out) {
  Check ring("hyperbolic", "hmul commutative, associative, distributive", 1e-12);
  Check round("hyperbolic", "polar round trip", 1e-12);
  Check mult("hyperbolic", "modulus multiplicative (relative)", 1e-10);
  Check dist("hyperbolic", "hdistance = sqrt(hmodulus_sq(w1 - w2))", 1e-12);
  for (std::size_t n = 0; n < count; ++n) {
    const HyperbolicNumber a = rng.hyperbolic(2.0), b = rng.hyperbolic(2.0), c = rng.hyperbolic(2.0);
    const auto d = [](const HyperbolicNumber& p, const HyperbolicNumber& q) {
      return std::max(std::abs(p.x - q.x), std::abs(p.y - q.y));
    };
    const double ring_err = std::max({d(a * b, b * a), d((a * b) * c, a * (b * c)), d(a * (b + c), a * b + a * c)});
    ring.observe(ring_err, [&] { return show(a) + " | " + show(b) + " | " + show(c); });

    if (std::abs(a.x * a.x - a.y * a.y) > 1e-6) {
      const HyperbolicNumber back = from_polar(polar(a));
      round.observe(d(back, a) / std::max(1.0, std::hypot(a.x, a.y)), [&] { return show(a); });
    }
    const double m = hmodulus_sq(a) * hmodulus_sq(b);
    mult.observe(std::abs(hmodulus_sq(a * b) - m) / std::max(m, 1e-300) * (m > 1e-12 ? 1.0 : 0.0),
                 [&] { return show(a) + " | " + show(b); });
    dist.observe(std::abs(hdistance(a, b) - std::sqrt(hmodulus_sq(a - b))), [&] { return show(a) + " | " + show(b); });
  }
  for (const Check& ch : {ring, round, mult, dist}) out.push_back(ch.result());
}

void transforms_suite(Sampler& rng, std::size_t count, Results& out) {
  Check norm("transforms", "rotate preserves x^2", 1e-12);
  Check grade1("transforms", "rotated vector has no bivector part", 1e-12);
  Check rotor("transforms", "rotor_between maps a to b", 1e-12);
  Check autom("transforms", "active boost is an automorphism", 1e-11);
  Check pickup("transforms", "L(a i) = a i cosh(phi) - i sinh(phi)", 1e-12);
  Check square("transforms", "L(x)^2 = x^2", 1e-11);
  Check anti("transforms", "L(a) L(a i) = -L(a i) L(a)", 1e-11);
  Check basis("transforms", "relative basis is orthonormal", 1e-10);
  Check round("transforms", "classify_unit_minus_one round trip", 1e-10);
  for (std::size_t n = 0; n < count; ++n) {
    const Vector2 x = rng.vector(2.0);
    const double theta = rng.uniform(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    const G2Multivector rx = rotate(x.mv(), theta);
    norm.observe(rel(std::abs(gp(rx, rx).s - x.norm_sq()), x.norm_sq()), [&] { return show(x.mv()); });
    grade1.observe(std::abs(rx.b) + std::abs(rx.s), [&] { return show(x.mv()); });

    const UnitVector2 ua = rng.unit_vector(), ub = rng.unit_vector();
    if (inner(ua.vec(), ub.vec()) > -0.999) {
      rotor.observe(diff(apply_rotor(rotor_between(ua, ub), ua.mv()), ub.mv()),
                    [&] { return show(ua.mv()) + " -> " + show(ub.mv()); });
    }

    const double phi = rng.uniform(-3.0, 3.0);
    const G2Multivector g1 = rng.g2(), g2 = rng.g2();
    const G2Multivector lhs = active_boost(gp(g1, g2), ua, phi);
    autom.observe(rel(diff(lhs, gp(active_boost(g1, ua, phi), active_boost(g2, ua, phi))), max_abs(lhs)),
                  [&] { return show(g1) + " | " + show(g2) + " phi=" + format_number(phi); });

    const G2Multivector ai = gp(ua.mv(), G2Multivector::i());
    const G2Multivector boosted = active_boost(ai, ua, phi);
    const G2Multivector expected = ai * std::cosh(phi) - G2Multivector::i() * std::sinh(phi);
    pickup.observe(rel(diff(boosted, expected), max_abs(expected)) +
                       rel(std::abs(boosted.b + std::sinh(phi)), std::cosh(phi)),
                   [&] { return show(ua.mv()) + " phi=" + format_number(phi); });

    const G2Multivector lx = active_boost(x.mv(), ua, phi);
    square.observe(rel(diff(gp(lx, lx), G2Multivector::scalar(x.norm_sq())), max_abs(lx) * max_abs(lx)),
                   [&] { return show(x.mv()) + " phi=" + format_number(phi); });
    const G2Multivector la = active_boost(ua.mv(), ua, phi);
    anti.observe(rel(diff(gp(la, boosted), -gp(boosted, la)), max_abs(boosted)),
                 [&] { return show(ua.mv()) + " phi=" + format_number(phi); });

    const RelativeBasis rb = relative_basis(ua, phi);
    const double basis_err = std::max({diff(gp(rb.e1p, rb.e1p), G2Multivector::scalar(1.0)),
                                       diff(gp(rb.e2p, rb.e2p), G2Multivector::scalar(1.0)),
                                       diff(gp(rb.e1p, rb.e2p), -gp(rb.e2p, rb.e1p)),
                                       diff(gp(rb.e1p, rb.e2p), rb.j), diff(gp(rb.j, rb.j), G2Multivector::scalar(-1.0))});
    basis.observe(rel(basis_err, max_abs(rb.j) * max_abs(rb.j)), [&] { return show(ua.mv()) + " phi=" + format_number(phi); });

    OrientedFrame f{n % 2 == 0 ? 1 : -1, rng.unit_vector(), n % 10 == 0 ? 0.0 : rng.uniform(0.0, 3.0)};
    if (f.phi == 0.0) f.a = UnitVector2::e1();
    const OrientedFrame g = classify_unit_minus_one(f.element());
    const double err = std::max({static_cast<double>(std::abs(g.orientation - f.orientation)), std::abs(g.phi - f.phi),
                                 std::abs(g.a.v1() - f.a.v1()), std::abs(g.a.v2() - f.a.v2())});
    round.observe(err, [&] { return show(f); });
  }
  for (const Check& ch : {norm, grade1, rotor, autom, pickup, square, anti, basis, round}) out.push_back(ch.result());
}

void kinematics_suite(Sampler& rng, std::size_t count, Results& out) {
  Check cosh_w("kinematics", "cosh(omega) = <e^{-phi a} e^{rho b}>", 1e-11);
  Check expo("kinematics", "e^{omega c} = e^{-phi a} e^{rho b}", 1e-10);
  Check csq("kinematics", "c^2 = 1 and c is a relative vector", 1e-10);
  Check recip("kinematics", "compose(k, j).vw = -compose(j, k).vw", 1e-12);
  Check sandwich("kinematics", "e^{Omega d/2} e^{phi a} e^{Omega d/2} = e^{rho b}", 1e-9);
  Check cosh_o("kinematics", "closed-form cosh(Omega) = cosh(atanh|u_vw|)", 1e-10);
  Check add("kinematics", "velocity_add inverts passive_boost_factor", 1e-10);
  Check hes("kinematics", "cosh(rho) = cosh(phi) cosh(Omega)(1 + u_v . u_vw)", 1e-10);
  Check sub("kinematics", "velocity_add stays below light speed", 0.0);
  Check gamma("kinematics", "gamma(u_v) = cosh(phi)", 1e-12);
  Check coll("kinematics", "collinear: passive u_vw = active v_w", 1e-10);
  for (std::size_t n = 0; n < count; ++n) {
    const OrientedFrame j = rng.frame(2.5), k = rng.frame(2.5);
    const CompositionResult r = compose_frames(j, k);
    const G2Multivector prod = gp(exp_vector(j.a.vec(), -j.phi), exp_vector(k.a.vec(), k.phi));
    cosh_w.observe(rel(std::abs(r.cosh_omega - prod.s), prod.s), [&] { return show(j) + " " + show(k); });
    const G2Multivector e_wc = exp_zero_scalar(r.c_direction * r.omega);
    expo.observe(rel(diff(e_wc, prod), max_abs(prod)), [&] { return show(j) + " " + show(k); });
    const double c_err = std::abs(gp(r.c_direction, r.c_direction).s - 1.0) +
                         (classify_zero_scalar(r.c_direction) == ZeroScalarClass::RelativeVector ? 0.0 : 1.0);
    csq.observe(c_err, [&] { return show(j) + " " + show(k); });
    recip.observe(diff(compose_frames(k, j).vw, -r.vw), [&] { return show(j) + " " + show(k); });

    const Velocity uv = Velocity::of(j), uw = Velocity::of(k);
    const PassiveBoost p = passive_boost_factor(j, k);
    const G2Multivector half = exp_vector(p.d.vec(), p.omega / 2.0);
    const G2Multivector target = exp_vector(k.a.vec(), k.phi);
    sandwich.observe(rel(diff(gp(gp(half, exp_vector(j.a.vec(), j.phi)), half), target), max_abs(target)),
                     [&] { return show(j) + " " + show(k); });
    cosh_o.observe(rel(std::abs(p.cosh_omega - std::cosh(p.omega)), p.cosh_omega), [&] { return show(j) + " " + show(k); });
    const Velocity back = velocity_add(uv, p.uvw, p.d, p.omega);
    add.observe((back.vec() - uw.vec()).norm(), [&] { return show(j) + " " + show(k); });
    hes.observe(rel(std::abs(velocity_add_cosh(j.phi, uv, p.uvw, p.omega) - std::cosh(k.phi)), std::cosh(k.phi)),
                [&] { return show(j) + " " + show(k); });
    const Velocity rv = rng.velocity(0.999), rw = rng.velocity(0.999);
    const UnitVector2 d = UnitVector2::normalize(rw.vec().norm() > 0.0 ? rw.vec() : Vector2{1.0, 0.0});
    const double omega = rapidity(rw.vec().norm());
    const double speed = velocity_add(rv, Velocity(d.vec() * std::tanh(omega)), d, omega).speed();
    sub.observe(speed < 1.0 ? 0.0 : 1.0, [&] { return "speed " + format_number(speed); });
    gamma.observe(rel(std::abs(gamma_factor(uv) - std::cosh(j.phi)), std::cosh(j.phi)), [&] { return show(j); });

    // b = +-a with distinct rapidities.
    OrientedFrame kc{1, n % 2 == 0 ? j.a : -j.a, rng.uniform(0.0, 2.5)};
    if (std::abs(kc.phi - j.phi) > 1e-3 || n % 2 == 1) {
      const PassiveBoost pc = passive_boost_factor(j, kc);
      const CompositionResult rc = compose_frames(j, kc);
      coll.observe(diff(pc.uvw.mv(), rc.vw), [&] { return show(j) + " " + show(kc); });
    }
  }
  for (const Check& ch : {cosh_w, expo, csq, recip, sandwich, cosh_o, add, hes, sub, gamma, coll}) out.push_back(ch.result());
}

void spacetime_suite(Sampler& rng, std::size_t count, Results& out) {
  Check assoc("spacetime", "gp12 associativity", 1e-12);
  Check central("spacetime", "pseudoscalar is central", 0.0);
  Check hom("spacetime", "embed_even is a homomorphism", 1e-12);
  Check natural("spacetime", "psi(L(i)) = psi(i) e^{phi a}", 1e-12);
  Check vdotu("spacetime", "u . v = 1/sqrt(1 - u_v^2)", 1e-11);
  Check route("spacetime", "G2 and G12 composition routes agree", 1e-10);
  Check boost("spacetime", "L_u(v) = w", 1e-9);
  Check split("spacetime", "w_par + w_perp = w and w ^ D = v ^ D", 1e-9);
  Check passive("spacetime", "<w_par^ v_par^> = cosh(Omega) through psi", 1e-9);
  Check invol("spacetime", "involutions (anti)multiplicative", 1e-12);
  for (std::size_t n = 0; n < count; ++n) {
    const G12Multivector a = rng.g12(), b = rng.g12(), c = rng.g12();
    assoc.observe(diff(gp12(gp12(a, b), c), gp12(a, gp12(b, c))),
                  [&] { return show(a) + " | " + show(b) + " | " + show(c); });
    const G12Multivector s = G12Multivector::pseudoscalar();
    central.observe(diff(gp12(s, a), gp12(a, s)), [&] { return show(a); });

    const G2Multivector g1 = rng.g2(), g2 = rng.g2();
    hom.observe(diff(embed_even(gp(g1, g2)), gp12(embed_even(g1), embed_even(g2))),
                [&] { return show(g1) + " | " + show(g2); });

    const OrientedFrame j = rng.frame(2.0), k = rng.frame(2.0);
    const G12Multivector lhs = psi(active_boost(G2Multivector::i(), j.a, j.phi)).mv();
    const G12Multivector rhs = gp12(psi(G2Multivector::i()).mv(), embed_even(exp_vector(j.a.vec(), j.phi)));
    natural.observe(rel(diff(lhs, rhs), max_abs(rhs)), [&] { return show(j); });

    const MinkowskiVector u = psi(G2Multivector::i());
    const MinkowskiVector v = psi(j), w = psi(k);
    const G12Multivector uv = relative_velocity_bivector(u, v);
    const double uv_sq = gp12(uv, uv)[G12Multivector::One];
    const double gamma = mink_inner(u, v);
    vdotu.observe(rel(std::abs(gamma - 1.0 / std::sqrt(1.0 - uv_sq)), gamma), [&] { return show(j); });

    const CompositionResult g2_route = compose_frames(j, k);
    const Recomposition g12_route = recompute_composition(u, v, w);
    const double route_err =
        std::max(rel(std::abs(g2_route.cosh_omega - g12_route.v_dot_w), g12_route.v_dot_w),
                 diff(embed_even(g2_route.vw), g12_route.vw));
    route.observe(route_err, [&] { return show(j) + " " + show(k); });

    const MinkowskiVector ou = rng.observer(), ov = rng.observer(), ow = rng.observer();
    const G12Multivector moved = apply_parallel_boost(ou, ov, ow, ov.mv());
    boost.observe(rel(diff(moved, ow.mv()), max_abs(ow.mv())),
                  [&] { return show(ou) + " | " + show(ov) + " | " + show(ow); });
    const DSplit ds = d_split(ou, ov, ow);
    split.observe(rel(std::max(diff((ds.w_par + ds.w_perp).mv(), ow.mv()), diff(ds.w_wedge_d, ds.v_wedge_d)),
                      max_abs(ow.mv()) * max_abs(ds.d)),
                  [&] { return show(ou) + " | " + show(ov) + " | " + show(ow); });

    const PassiveBoost p = passive_boost_factor(j, k);
    const G12Multivector rotor = parallel_rotor(u, v, w);
    passive.observe(rel(std::abs(rotor[G12Multivector::One] - p.cosh_omega), p.cosh_omega),
                    [&] { return show(j) + " " + show(k); });

    const double inv_err = std::max({diff(main_involution(gp12(a, b)), gp12(main_involution(a), main_involution(b))),
                                     diff(reversion(gp12(a, b)), gp12(reversion(b), reversion(a))),
                                     diff(clifford_conj(gp12(a, b)), gp12(clifford_conj(b), clifford_conj(a)))});
    invol.observe(inv_err, [&] { return show(a) + " | " + show(b); });
  }
  for (const Check& ch : {assoc, central, hom, natural, vdotu, route, boost, split, passive, invol}) out.push_back(ch.result());
}

void matrix_suite(Sampler& rng, std::size_t count, Results& out) {
  Check hom("matrix", "matrix_of(g1 g2) = [g1][g2]", 1e-12);
  Check round("matrix", "from_matrix(matrix_of(g)) = g", 1e-15);
  Check homf("matrix", "matrix_of_f is multiplicative", 1e-11);
  Check splitf("matrix", "f = g + s h round trip", 1e-15);
  Check invol("matrix", "involutions act as (A,-B), (adj A,-adj B), (adj A, adj B)", 1e-15);
  Check conj("matrix", "e1_conjugate(g) is [[0,1],[1,0]] [g] [[0,1],[1,0]]", 1e-15);
  for (std::size_t n = 0; n < count; ++n) {
    const G2Multivector g1 = rng.g2(), g2 = rng.g2();
    hom.observe(rel(diff(matrix_of(gp(g1, g2)), matrix_of(g1) * matrix_of(g2)), max_abs(g1) * max_abs(g2)),
                [&] { return show(g1) + " | " + show(g2); });
    round.observe(diff(from_matrix(matrix_of(g1)), g1), [&] { return show(g1); });

    const G12Multivector f1 = rng.g12(), f2 = rng.g12();
    homf.observe(rel(diff(matrix_of_f(gp12(f1, f2)), matrix_of_f(f1) * matrix_of_f(f2)), max_abs(f1) * max_abs(f2)),
                 [&] { return show(f1) + " | " + show(f2); });
    splitf.observe(diff(from_complex_split(complex_split(f1)), f1), [&] { return show(f1); });

    const Mat2Complexified m = matrix_of_f(f1);
    const double inv_err = std::max({diff(matrix_of_f(main_involution(f1)), Mat2Complexified{m.re, -1.0 * m.im}),
                                     diff(matrix_of_f(reversion(f1)), Mat2Complexified{adjugate(m.re), -1.0 * adjugate(m.im)}),
                                     diff(matrix_of_f(clifford_conj(f1)), Mat2Complexified{adjugate(m.re), adjugate(m.im)})});
    invol.observe(inv_err, [&] { return show(f1); });

    const Mat2 swap{{{{0.0, 1.0}, {1.0, 0.0}}}};
    conj.observe(diff(matrix_of(e1_conjugate(g1)), swap * matrix_of(g1) * swap), [&] { return show(g1); });
  }
  for (const Check& ch : {hom, round, homf, splitf, invol, conj}) out.push_back(ch.result());
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const InvariantResult& r) { return r.passed(); });
}

std::span<const std::string_view> verify_suites() { return kSuites; }

bool is_verify_suite(std::string_view name) {
  return name == "all" || std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

VerifyReport run_verify(std::string_view suite, std::uint64_t seed, std::size_t count) {
  if (!is_verify_suite(suite)) throw std::invalid_argument("unknown verify suite \"" + std::string(suite) + "\"");
  VerifyReport report;
  Sampler rng(seed);
  const auto want = [&](std::string_view name) { return suite == "all" || suite == name; };
  if (want("core")) core_suite(rng, count, report.results);
  if (want("hyperbolic")) hyperbolic_suite(rng, count, report.results);
  if (want("transforms")) transforms_suite(rng, count, report.results);
  if (want("kinematics")) kinematics_suite(rng, count, report.results);
  if (want("spacetime")) spacetime_suite(rng, count, report.results);
  if (want("matrix")) matrix_suite(rng, count, report.results);
  return report;
}

}  // namespace mplanes
