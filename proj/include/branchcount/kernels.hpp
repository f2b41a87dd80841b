// Hot loops with an OpenMP implementation and a serial reference. Both
// produce identical results; the serial one exists for tests and benchmarks.
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "branchcount/polynomial.hpp"
#include "branchcount/staircase.hpp"

namespace branchcount {

enum class Execution { serial, parallel };

/// truncated_normal_form applied to each input.
std::vector<Polynomial> batch_normal_forms(std::span<const Polynomial> fs, const StandardBasis& sb,
                                           Execution exec = Execution::parallel);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t rank() const { return positive + negative; }
  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact congruence diagonalization of a symmetric rational matrix. A zero
/// pivot with a nonzero off-diagonal entry is eliminated as a 2x2 hyperbolic
/// block contributing one positive and one negative square.
Inertia congruence_inertia(std::vector<std::vector<Rational>> m, Execution exec = Execution::parallel);

/// Values of F = (F1, F2) at the angles 2 pi (s + phase) / samples on the
/// circle of radius eps.
std::vector<std::array<double, 2>> sample_circle(std::span<const Polynomial> fs, double eps, std::size_t samples,
                                                 Execution exec = Execution::parallel, double phase = 0.0);

}  // namespace branchcount
