// Shared helpers and independent oracles for the test suites.
#pragma once


#include <random>
#include <string>
#include <vector>

#include "branchcount/parse.hpp"
#include "branchcount/polynomial.hpp"
#include "branchcount/staircase.hpp"

namespace testing {

using namespace branchcount;

inline const Ring kXY{"x", "y"};
inline const Ring kXYZ{"x", "y", "z"};
inline const Ring kDoubled{"x1", "x2", "y1", "y2"};

inline Polynomial P(const std::string& s, const Ring& ring = kXY) { return parse_polynomial(s, ring); }

inline std::vector<Polynomial> Ps(std::initializer_list<const char*> ss, const Ring& ring = kXY) {
  std::vector<Polynomial> out;
  for (const char* s : ss) out.push_back(P(s, ring));
  return out;
}

inline ExponentVector E(std::initializer_list<unsigned> e) { return ExponentVector(e); }

inline std::vector<ExponentVector> Es(std::initializer_list<std::initializer_list<unsigned>> es) {
  std::vector<ExponentVector> out;
  for (auto e : es) out.emplace_back(e);
  return out;
}

/// Diagram generators as a comparable list (already sorted by the local order).
inline std::vector<ExponentVector> B(const StandardBasis& sb) { return sb.diagram().generators(); }

inline Diagram D(std::size_t n, std::initializer_list<std::initializer_list<unsigned>> es) {
  return Diagram::from_exponents(n, Es(es));
}

/// Random polynomial with `terms` terms of degree in [lo, hi] and integer
/// coefficients in [-c, c] \ {0}.
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned lo, unsigned hi, int terms, int c = 5) {
  std::uniform_int_distribution<unsigned> deg(lo, hi);
  std::uniform_int_distribution<int> coef(-c, c - 1);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  Polynomial f(n);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(n);
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) {
      const std::size_t v = pick(rng);
      e.set(v, e[v] + 1);
    }
    int a = coef(rng);
    if (a >= 0) ++a;
    f += Polynomial::monomial(e, a);
  }
  return f;
}

/// Exact rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// dim Q[x,y] / (<gens> + m^D) from the Macaulay matrix of all multiples
/// x^a f truncated below degree D.
inline std::size_t macaulay_quotient_dim(const std::vector<Polynomial>& gens, unsigned D) {
  std::vector<ExponentVector> monos;
  for (unsigned d = 0; d < D; ++d) {
    for (unsigned i = 0; i <= d; ++i) monos.push_back(E({i, d - i}));
  }
  auto column = [&](const ExponentVector& e) {
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (monos[k] == e) return k;
    }
    return monos.size();
  };
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : gens) {
    for (const auto& a : monos) {
      const Polynomial g = f.times_monomial(a, 1);
      std::vector<Rational> row(monos.size());
      bool any = false;
      for (const auto& t : g.terms()) {
        if (t.exponent.degree() >= D) continue;
        row[column(t.exponent)] = t.coefficient;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return monos.size() - dense_rank(std::move(rows));
}

/// Colength of a 2-variable ideal by brute force: the quotient by <gens> + m^D
/// stops growing exactly when m^D lies in the ideal (Nakayama). Returns -1
/// when no stabilization happens up to `max_degree`.
inline long macaulay_colength(const std::vector<Polynomial>& gens, unsigned max_degree = 20) {
  std::size_t prev = macaulay_quotient_dim(gens, 1);
  for (unsigned D = 2; D <= max_degree; ++D) {
    const std::size_t cur = macaulay_quotient_dim(gens, D);
    if (cur == prev) return static_cast<long>(cur);
    prev = cur;
  }
  return -1;
}

/// The display style of printed formulas: "x_2y_1 + \frac{9}{10}x_2^3", terms
/// ascending in the local order.
inline std::string latex(const Polynomial& f, const std::vector<std::string>& names) {
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = t.coefficient < 0;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    const Rational a = abs(t.coefficient);
    std::string mono;
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (t.exponent[v] == 0) continue;
      mono += names[v];
      if (t.exponent[v] > 1) mono += "^" + std::to_string(t.exponent[v]);
    }
    if (a.get_den() != 1) {
      out += "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    } else if (a != 1 || mono.empty()) {
      out += a.get_num().get_str();
    }
    out += mono;
  }
  return first ? "0" : out;
}

/// Random plane ideal of finite colength: two pure powers with higher-order
/// tails plus a random extra generator.
inline std::vector<Polynomial> random_plane_ideal(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> pw(1, 4);
  const unsigned a = pw(rng), b = pw(rng);
  return {Polynomial::monomial(E({a, 0})) + random_poly(rng, 2, a + 1, a + 3, 2),
          Polynomial::monomial(E({0, b})) + random_poly(rng, 2, b + 1, b + 3, 2), random_poly(rng, 2, 1, 4, 3)};
}

/// Random planar map with an isolated zero of multiplicity at most 9.
inline std::vector<Polynomial> random_planar_map(std::mt19937_64& rng) {
  for (;;) {
    std::vector<Polynomial> F{random_poly(rng, 2, 1, 3, 3, 3), random_poly(rng, 2, 1, 3, 3, 3)};
    if (F[0].is_zero() || F[1].is_zero()) continue;
    const auto c = colength(standard_basis(2, F).diagram());
    if (c.is_finite() && c.value() <= 9) return F;
  }
}

/// A plane curve g is reduced at the origin iff <g, dg/dx, dg/dy> has finite colength.
inline bool squarefree_plane(const Polynomial& g) {
  return colength(standard_basis(2, std::vector{g, g.derivative(0), g.derivative(1)}).diagram()).is_finite();
}

}  // namespace testing
