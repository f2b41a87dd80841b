#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "branchcount/kernels.hpp"
#include "branchcount/polynomial.hpp"
#include "branchcount/staircase.hpp"

namespace branchcount {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// O/<F_1, ..., F_n> for a map germ with an isolated zero, with the monomial
/// basis under the staircase of <F>.
class LocalAlgebra {
 public:
  /// Throws InfiniteColengthError when the origin is not an isolated zero.
  explicit LocalAlgebra(std::vector<Polynomial> components, Execution exec = Execution::parallel);

  std::size_t nvars() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const StandardBasis& ideal() const noexcept { return sb_; }
  /// Exponents e_1 = 0, e_2, ... ascending in the local order.
  const std::vector<ExponentVector>& basis() const noexcept { return basis_; }
  /// D with m^D in the ideal.
  unsigned nilpotency_bound() const noexcept { return bound_; }

  std::vector<Rational> normal_form(const Polynomial& f) const;
  Polynomial from_coordinates(std::span<const Rational> c) const;
  /// Index of a basis exponent, or nullopt.
  std::optional<std::size_t> index_of(const ExponentVector& e) const;
  /// Coordinates of x_var * e_i.
  const SparseVector& times_variable(std::size_t var, std::size_t i) const { return mult_[var][i]; }
  std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b) const;

 private:
  std::size_t n_;
  std::vector<Polynomial> components_;
  StandardBasis sb_;
  std::vector<ExponentVector> basis_;
  unsigned bound_ = 0;
  std::vector<std::vector<SparseVector>> mult_;  // [var][basis index]

  std::vector<Rational> apply_variable(std::size_t var, std::span<const Rational> v) const;
};

struct BilinearForm {
  std::vector<std::vector<Rational>> matrix;
  std::size_t functional_index = 0;  // phi is +/- the coordinate at this basis element
  int functional_sign = 1;
};

/// The form (a, b) -> phi(ab) for phi = sign * (coordinate at `index`).
BilinearForm el_form(const LocalAlgebra& a, std::size_t index, int sign, Execution exec = Execution::parallel);

Inertia signature(const BilinearForm& form, Execution exec = Execution::parallel);

/// Basis indices where the Jacobian class has a nonzero coordinate.
std::vector<std::size_t> admissible_functionals(const LocalAlgebra& a);

/// Local topological degree as the signature of the Eisenbud-Levine form.
/// Without `functional_index`, phi sits at the largest admissible basis
/// element. Throws CertificateError if the Jacobian class vanishes and
/// InternalError if the form is degenerate.
long el_degree(const LocalAlgebra& a, std::optional<std::size_t> functional_index = std::nullopt,
               Execution exec = Execution::parallel);
long el_degree(std::span<const Polynomial> components);

}  // namespace branchcount
