#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "branchcount/exponent.hpp"

namespace branchcount {

using Rational = mpq_class;

struct Term {
  ExponentVector exponent;
  Rational coefficient;
};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are kept sorted ascending by the local order with no zero
/// coefficients, so the initial term is always `terms().front()`.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}

  /// Canonicalizes: sorts, merges duplicate exponents, drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial monomial(const ExponentVector& e, const Rational& c = 1);

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// nu(f): smallest exponent of the support. Throws on f = 0.
  const ExponentVector& initial_exponent() const;
  /// in(f) = a_nu x^nu. Throws on f = 0.
  const Term& initial_term() const;

  Rational coefficient(const ExponentVector& e) const;
  Rational constant_term() const;
  /// Largest total degree in the support; 0 for the zero polynomial.
  unsigned total_degree() const noexcept;
  /// Smallest total degree in the support (the order of the germ).
  unsigned order() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// Multiply by the monomial c * x^e.
  Polynomial times_monomial(const ExponentVector& e, const Rational& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  /// Drop every term of total degree >= bound.
  Polynomial truncated(unsigned bound) const;
  /// Re-index into a ring with `target_nvars` variables; variable i of this
  /// ring becomes variable `map[i]` of the target.
  Polynomial embed(std::size_t target_nvars, std::span<const std::size_t> map) const;
  /// Substitute polynomials (all in one common ring) for every variable.
  Polynomial compose(std::span<const Polynomial> values) const;

  double evaluate(std::span<const double> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t n_;
  std::vector<Term> terms_;

  void check_ring(const Polynomial& other) const;
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);
};

/// (nu(f), in(f)) for a nonzero f.
struct Initial {
  ExponentVector exponent;
  Term term;
};
Initial initial(const Polynomial& f);

/// Determinant of a square matrix of polynomials (expansion with memoized
/// column subsets).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix);

/// Jacobian matrix [d f_j / d x_i], rows indexed by the functions.
std::vector<std::vector<Polynomial>> jacobian(std::span<const Polynomial> fs);

/// All k x k minors of the Jacobian of fs, rows (function subsets) outer and
/// columns (variable subsets) inner, both in lexicographic subset order.
/// Zero minors are kept so positions are stable.
std::vector<Polynomial> jacobian_minors(std::span<const Polynomial> fs, std::size_t k);

/// Rank of the linear parts of fs at the origin (rank DF(0)).
std::size_t rank_at_origin(std::span<const Polynomial> fs);

/// Rank of a dense rational matrix.
std::size_t rank(std::vector<std::vector<Rational>> rows);

std::string rational_to_string(const Rational& q);

}  // namespace branchcount
