#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "mplanes/g12.hpp"
#include "mplanes/g2.hpp"
#include "mplanes/hyperbolic.hpp"
#include "mplanes/kinematics.hpp"
#include "mplanes/transforms.hpp"

namespace mplanes {

// Deterministic random inputs for the randomized invariant checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

  G2Multivector g2(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
  }
  G2Multivector zero_scalar(double scale = 1.0) {
    G2Multivector g = g2(scale);
    g.s = 0.0;
    return g;
  }
  G12Multivector g12(double scale = 1.0) {
    G12Multivector f;
    for (auto& c : f.c) c = uniform(-scale, scale);
    return f;
  }
  HyperbolicNumber hyperbolic(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }
  Vector2 vector(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }
  UnitVector2 unit_vector() { return UnitVector2::from_angle(angle()); }

  // Positively oriented frame i e^{phi a} with phi in [0, max_phi].
  OrientedFrame frame(double max_phi = 3.0) { return OrientedFrame{1, unit_vector(), uniform(0.0, max_phi)}; }

  Velocity velocity(double max_speed = 0.95) { return Velocity::from_speed_angle(uniform(0.0, max_speed), angle()); }

  // g0 e^{phi a}, a future pointing unit timelike vector.
  MinkowskiVector observer(double max_phi = 2.0) { return boosted_observer(unit_vector(), uniform(0.0, max_phi)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mplanes
