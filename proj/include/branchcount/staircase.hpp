#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "branchcount/exponent.hpp"
#include "branchcount/polynomial.hpp"

namespace branchcount {

namespace detail {
struct ReducerCache;
}

/// A vector-space dimension that may be infinite.
class Dimension {
 public:
  static Dimension finite(std::size_t value) { return Dimension(value); }
  static Dimension infinite() { return Dimension(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws InfiniteColengthError when infinite.
  std::size_t value() const;
  std::string to_string() const;

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  Dimension() = default;
  explicit Dimension(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/// A staircase N = B + N^n, stored by its minimal generators B.
class Diagram {
 public:
  explicit Diagram(std::size_t nvars = 0) : n_(nvars) {}
  /// Keeps the minimal elements of `exponents`, sorted by the local order.
  static Diagram from_exponents(std::size_t nvars, std::vector<ExponentVector> exponents);

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool contains(const ExponentVector& e) const;
  /// Every variable has a pure power in B.
  bool has_finite_complement() const;
  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::size_t n_;
  std::vector<ExponentVector> gens_;
};

/// Generators of an ideal of the local ring whose initial exponents generate
/// the ideal's full diagram of initial exponents.
class StandardBasis {
 public:
  StandardBasis() = default;
  StandardBasis(std::size_t nvars, std::vector<Polynomial> source, std::vector<Polynomial> generators,
                std::optional<unsigned> truncation);

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const std::vector<ExponentVector>& initials() const noexcept { return initials_; }
  const Diagram& diagram() const noexcept { return diagram_; }
  const std::vector<Polynomial>& source() const noexcept { return source_; }
  /// A degree D with m^D contained in the ideal, when the computation found
  /// one. Generators are then stored modulo m^D.
  std::optional<unsigned> truncation_degree() const noexcept { return truncation_; }

  /// Re-checks completeness: every S-polynomial of two generators has zero
  /// local normal form.
  bool verify() const;

  /// Integer working copies of the generators (engine use).
  const detail::ReducerCache& reducers() const { return *cache_; }

 private:
  std::size_t n_ = 0;
  std::vector<Polynomial> source_;
  std::vector<Polynomial> gens_;
  std::vector<ExponentVector> initials_;
  Diagram diagram_;
  std::optional<unsigned> truncation_;
  std::shared_ptr<const detail::ReducerCache> cache_;
};

/// Local division: u*f = sum_i q_i g_i + r with u(0) != 0 and in(r) outside
/// the staircase when r != 0. When the basis has a truncation degree D the
/// whole support of r is outside the staircase and the identity holds modulo
/// m^D, which lies in the ideal.
struct DivisionResult {
  Polynomial remainder;
  bool member = false;
  Polynomial unit;
  /// One quotient per generator of the basis the reduction used.
  std::vector<Polynomial> quotients;
};

/// Standard basis of <gens> in the localization at the origin (Mora's
/// tangent-cone normal form inside the S-pair completion loop). Zero
/// generators are dropped.
StandardBasis standard_basis(std::size_t nvars, std::span<const Polynomial> gens);

DivisionResult reduce(const Polynomial& f, const StandardBasis& sb);

/// Ideal membership in the local ring without tracking quotients.
bool is_member(const Polynomial& f, const StandardBasis& sb);

/// #(N^n \ N), INFINITE unless every variable has a pure power in B.
Dimension colength(const Diagram& d);

/// N(outer) \ N(inner), or nullopt when that set is infinite.
std::optional<std::vector<ExponentVector>> staircase_difference(const Diagram& outer, const Diagram& inner);

/// dim <outer>/<inner> = #(N(outer) \ N(inner)). Throws NotSubidealError when
/// some generator of `inner` is not in <outer>.
Dimension quotient_dim(const StandardBasis& outer, const StandardBasis& inner);

/// Exponents strictly below the staircase, ascending in the local order.
std::vector<ExponentVector> basis_under_staircase(const Diagram& d);

/// Full normal form modulo m^D against a basis with known truncation degree:
/// the returned polynomial has degree < D and support outside the staircase.
/// Needs sb.truncation_degree().
Polynomial truncated_normal_form(const Polynomial& f, const StandardBasis& sb);

}  // namespace branchcount
