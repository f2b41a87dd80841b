// Floating-point cross-checks for tests. Nothing in the certified pipeline
// calls into this header.
#pragma once

#include <cstddef>
#include <span>

#include "branchcount/kernels.hpp"
#include "branchcount/polynomial.hpp"

namespace branchcount {

struct OracleConfig {
  Rational radius{1, 100};
  std::size_t samples = 4096;
  std::size_t max_samples = std::size_t{1} << 20;
  /// Times the radius may be halved when F comes too close to zero on the circle.
  unsigned max_shrinks = 8;
  Execution exec = Execution::parallel;

  void validate() const;
};

/// Turning number of F = (F1, F2) around the circle of radius eps. Each grid
/// interval is bisected until derivative bounds keep the angular step below
/// pi/2; counts from two consecutive grid sizes must agree. Throws
/// OracleInconclusive otherwise.
long winding_degree(std::span<const Polynomial> F, const OracleConfig& cfg = {});

/// Sign changes of g along the circle of radius eps. Intervals are bisected
/// until each holds no zero or exactly one simple zero.
long circle_half_branches(const Polynomial& g, const OracleConfig& cfg = {});

}  // namespace branchcount
