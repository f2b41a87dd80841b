// Integer-coefficient working representation for the standard-basis engine.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "branchcount/exponent.hpp"
#include "branchcount/polynomial.hpp"

namespace branchcount::detail {

struct ITerm {
  ExponentVector e;
  mpz_class c;
};

/// Primitive integer polynomial, terms ascending in the local order.
struct IPoly {
  std::vector<ITerm> terms;

  bool zero() const noexcept { return terms.empty(); }
  const ExponentVector& lm() const { return terms.front().e; }
  unsigned max_degree() const { return terms.empty() ? 0 : terms.back().e.degree(); }
  unsigned ecart() const { return max_degree() - lm().degree(); }
  /// Divide by the content and make the initial coefficient positive.
  /// Returns the (signed) divisor used.
  mpz_class make_primitive();
  void truncate(unsigned bound);
};

IPoly to_ipoly(const Polynomial& p);
/// Like to_ipoly, also returning s with p = s * result.
IPoly to_ipoly(const Polynomial& p, Rational& scale);
Polynomial to_polynomial(std::size_t nvars, const IPoly& p);

/// Cancel the term at `pos` of h with x^m * g where m = h[pos].e - lm(g):
/// h <- (b/d) h - (a/d) x^m g. Terms of degree >= bound are dropped (bound 0
/// keeps everything). Returns the factor b/d that multiplied h.
mpz_class reduce_at(IPoly& h, std::size_t pos, const IPoly& g, unsigned bound);

/// Fraction-free S-polynomial, truncated at bound.
IPoly spoly(const IPoly& f, const IPoly& g, unsigned bound);

/// Mora's weak normal form of p against `reducers`. When `bound` is set the
/// computation happens modulo m^bound and plain reduction is used.
IPoly weak_normal_form(IPoly p, std::span<const IPoly> reducers, std::optional<unsigned> bound);

/// Full reduction modulo m^bound: every term of the result lies outside the
/// staircase spanned by the reducers' initial exponents.
Polynomial full_reduce_truncated(const Polynomial& f, std::span<const IPoly> reducers, unsigned bound);

struct ReducerCache {
  std::vector<IPoly> polys;
};

struct EngineResult {
  std::vector<IPoly> basis;  // minimal: no initial exponent divides another
  std::optional<unsigned> truncation;
};

EngineResult compute_standard_basis(std::size_t nvars, std::span<const Polynomial> gens);

}  // namespace branchcount::detail
