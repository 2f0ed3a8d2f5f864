#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mplanes {

struct InvariantResult {
  std::string suite;
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::string counterexample;  // worst offending input when the check fails

  bool passed() const { return max_error <= tolerance; }
};

struct VerifyReport {
  std::vector<InvariantResult> results;

  bool passed() const;
};

// core, hyperbolic, transforms, kinematics, spacetime, matrix
std::span<const std::string_view> verify_suites();
bool is_verify_suite(std::string_view name);  // also accepts "all"

/// Runs the named randomized invariant suite with `count` samples per
/// invariant. Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify(std::string_view suite, std::uint64_t seed, std::size_t count);

}  // namespace mplanes
