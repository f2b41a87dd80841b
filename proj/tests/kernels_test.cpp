#include <doctest.h>

#include <random>

#include "branchcount/kernels.hpp"
#include "branchcount/local_algebra.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("parallel kernels match the serial reference") {
  const auto sb = standard_basis(2, Ps({"x^3 - y^4 + x*y^2", "x^2*y + y^5"}));
  REQUIRE(sb.truncation_degree());
  std::vector<Polynomial> fs;
  std::mt19937_64 rng(71);
  for (int i = 0; i < 40; ++i) fs.push_back(random_poly(rng, 2, 0, 8, 6));
  CHECK(batch_normal_forms(fs, sb, Execution::serial) == batch_normal_forms(fs, sb, Execution::parallel));

  const LocalAlgebra a(Ps({"x^3 - 3*x*y^2 + y^4", "3*x^2*y - y^3"}));
  const auto form = el_form(a, admissible_functionals(a).back(), 1, Execution::serial);
  CHECK(el_form(a, admissible_functionals(a).back(), 1, Execution::parallel).matrix == form.matrix);
  CHECK(congruence_inertia(form.matrix, Execution::serial) == congruence_inertia(form.matrix, Execution::parallel));

  const auto F = Ps({"x^2 - y^2", "2*x*y"});
  CHECK(sample_circle(F, 0.01, 256, Execution::serial) == sample_circle(F, 0.01, 256, Execution::parallel));
}

TEST_CASE("signature of random symmetric matrices against a diagonal congruence") {
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    // P^T diag(d) P with a unit upper triangular P has the inertia of d.
    const std::size_t n = 6;
    std::vector<int> d(n);
    Inertia expect;
    for (auto& x : d) {
      x = c(rng);
      if (x > 0) ++expect.positive;
      if (x < 0) ++expect.negative;
    }
    std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      P[i][i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) P[i][j] = c(rng);
    }
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) M[i][j] += P[k][i] * d[k] * P[k][j];
      }
    }
    CHECK(congruence_inertia(M, Execution::serial) == expect);
    CHECK(congruence_inertia(M, Execution::parallel) == expect);
  }
}
