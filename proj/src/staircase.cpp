#include "branchcount/staircase.hpp"

#include <algorithm>
#include <set>

#include "branchcount/error.hpp"
#include "mora.hpp"

namespace branchcount {

std::size_t Dimension::value() const {
  if (!value_) throw InfiniteColengthError("dimension is infinite");
  return *value_;
}

std::string Dimension::to_string() const { return value_ ? std::to_string(*value_) : "INFINITE"; }

Diagram Diagram::from_exponents(std::size_t nvars, std::vector<ExponentVector> exponents) {
  for (const auto& e : exponents) {
    if (e.size() != nvars) throw DimensionError("diagram exponent has wrong length");
  }
  std::sort(exponents.begin(), exponents.end(), LocalOrder{});
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  Diagram d(nvars);
  // Sorted by degree first, so a divisor always precedes its multiples.
  for (const auto& e : exponents) {
    bool covered = std::any_of(d.gens_.begin(), d.gens_.end(), [&](const ExponentVector& b) { return b.divides(e); });
    if (!covered) d.gens_.push_back(e);
  }
  return d;
}

bool Diagram::contains(const ExponentVector& e) const {
  if (e.size() != n_) throw DimensionError("diagram membership: wrong exponent length");
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& b) { return b.divides(e); });
}

bool Diagram::has_finite_complement() const {
  for (std::size_t i = 0; i < n_; ++i) {
    bool pure = std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& b) { return b.degree() == b[i]; });
    if (!pure) return false;
  }
  return true;
}

std::string Diagram::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + "}";
}

namespace {

// Depth-first walk over N^n \ N, one coordinate at a time. `live` holds the
// generators still compatible with the fixed prefix.
void walk_complement(const std::vector<ExponentVector>& live, std::size_t k, std::size_t n, ExponentVector& cur,
                     std::vector<ExponentVector>& out) {
  if (k == n) {
    if (live.empty()) out.push_back(cur);
    return;
  }
  // Bound on coordinate k: some generator with zero tail from k+1 on bounds it.
  unsigned limit = ~0u;
  for (const auto& b : live) {
    bool tail_zero = true;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (b[j]) {
        tail_zero = false;
        break;
      }
    }
    if (tail_zero) limit = std::min(limit, b[k]);
  }
  if (limit == ~0u) throw InfiniteColengthError("complement of the staircase is infinite");
  std::vector<ExponentVector> next;
  for (unsigned v = 0; v < limit; ++v) {
    cur.set(k, v);
    next.clear();
    for (const auto& b : live) {
      if (b[k] <= v) next.push_back(b);
    }
    walk_complement(next, k + 1, n, cur, out);
  }
  cur.set(k, 0);
}

std::vector<ExponentVector> complement(const std::vector<ExponentVector>& gens, std::size_t n) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  walk_complement(gens, 0, n, cur, out);
  return out;
}

}  // namespace

Dimension colength(const Diagram& d) {
  if (!d.has_finite_complement()) return Dimension::infinite();
  return Dimension::finite(complement(d.generators(), d.nvars()).size());
}

std::vector<ExponentVector> basis_under_staircase(const Diagram& d) {
  if (!d.has_finite_complement()) throw InfiniteColengthError("basis_under_staircase: colength is infinite");
  auto out = complement(d.generators(), d.nvars());
  std::sort(out.begin(), out.end(), LocalOrder{});
  return out;
}

std::optional<std::vector<ExponentVector>> staircase_difference(const Diagram& outer, const Diagram& inner) {
  if (outer.nvars() != inner.nvars()) throw DimensionError("staircase_difference: ring mismatch");
  const std::size_t n = outer.nvars();
  std::vector<ExponentVector> all;
  for (const auto& b : outer.generators()) {
    // (b + N^n) \ N(inner) is b + complement of the colon staircase.
    std::vector<ExponentVector> colon;
    for (const auto& c : inner.generators()) colon.push_back(c.saturating_sub(b));
    Diagram shifted = Diagram::from_exponents(n, std::move(colon));
    if (!shifted.has_finite_complement()) return std::nullopt;
    for (const auto& e : complement(shifted.generators(), n)) all.push_back(e + b);
  }
  std::sort(all.begin(), all.end(), LocalOrder{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

StandardBasis::StandardBasis(std::size_t nvars, std::vector<Polynomial> source, std::vector<Polynomial> generators,
                             std::optional<unsigned> truncation)
    : n_(nvars), source_(std::move(source)), gens_(std::move(generators)), truncation_(truncation) {
  auto cache = std::make_shared<detail::ReducerCache>();
  for (const auto& g : gens_) {
    if (g.nvars() != n_) throw DimensionError("standard basis generator in the wrong ring");
    initials_.push_back(g.initial_exponent());
    cache->polys.push_back(detail::to_ipoly(g));
  }
  diagram_ = Diagram::from_exponents(n_, initials_);
  cache_ = std::move(cache);
}

bool StandardBasis::verify() const {
  if (!truncation_) {
    // Without a bound the local normal form can chase initial terms through
    // ever higher degrees; recompute the diagram from the generators instead.
    if (!(standard_basis(n_, gens_).diagram() == diagram_)) return false;
    for (const auto& f : source_) {
      if (!is_member(f, *this)) return false;
    }
    return true;
  }
  const auto& polys = cache_->polys;
  const unsigned lim = truncation_.value_or(0);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      detail::IPoly s = detail::spoly(polys[i], polys[j], lim);
      if (!detail::weak_normal_form(std::move(s), polys, truncation_).zero()) return false;
    }
  }
  for (const auto& f : source_) {
    if (!is_member(f, *this)) return false;
  }
  return true;
}

StandardBasis standard_basis(std::size_t nvars, std::span<const Polynomial> gens) {
  std::vector<Polynomial> source;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw DimensionError("standard_basis: generator lives in a different ring");
    if (!g.is_zero()) source.push_back(g);
  }
  auto result = detail::compute_standard_basis(nvars, source);
  std::vector<Polynomial> out;
  out.reserve(result.basis.size());
  for (const auto& p : result.basis) out.push_back(detail::to_polynomial(nvars, p));
  return StandardBasis(nvars, std::move(source), std::move(out), result.truncation);
}

DivisionResult reduce(const Polynomial& f, const StandardBasis& sb) {
  if (f.nvars() != sb.nvars()) throw DimensionError("reduce: polynomial and basis live in different rings");
  const std::size_t n = sb.nvars();
  const auto& gens = sb.generators();

  struct Rep {
    Polynomial h, u;
    std::vector<Polynomial> q;
  };
  auto ecart = [](const Polynomial& p) { return p.total_degree() - p.order(); };

  Rep cur{f, Polynomial::constant(n, 1), std::vector<Polynomial>(gens.size(), Polynomial(n))};
  std::vector<Rep> extra;
  while (!cur.h.is_zero()) {
    const ExponentVector& lm = cur.h.initial_exponent();
    int best = -1;
    bool best_extra = false;
    unsigned best_ecart = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].initial_exponent().divides(lm)) continue;
      unsigned e = ecart(gens[i]);
      if (best < 0 || e < best_ecart) {
        best = static_cast<int>(i);
        best_ecart = e;
      }
    }
    for (std::size_t k = 0; k < extra.size(); ++k) {
      if (!extra[k].h.initial_exponent().divides(lm)) continue;
      unsigned e = ecart(extra[k].h);
      if (best < 0 || e < best_ecart) {
        best = static_cast<int>(k);
        best_extra = true;
        best_ecart = e;
      }
    }
    if (best < 0) break;
    std::optional<Rep> saved;
    if (best_ecart > ecart(cur.h)) saved = cur;
    const Polynomial& g = best_extra ? extra[best].h : gens[best];
    const ExponentVector m = lm - g.initial_exponent();
    const Rational c = cur.h.initial_term().coefficient / g.initial_term().coefficient;
    cur.h -= g.times_monomial(m, c);
    if (best_extra) {
      const Rep& r = extra[best];
      cur.u -= r.u.times_monomial(m, c);
      for (std::size_t i = 0; i < gens.size(); ++i) cur.q[i] -= r.q[i].times_monomial(m, c);
    } else {
      cur.q[best] += Polynomial::monomial(m, c);
    }
    if (saved) extra.push_back(std::move(*saved));
  }
  if (auto bound = sb.truncation_degree(); bound && !cur.h.is_zero()) {
    // Tail reduction modulo m^D. Every monomial of degree >= D lies in the
    // ideal, so the identity u*f - r - sum q_i g_i now holds modulo m^D.
    const Diagram& d = sb.diagram();
    cur.h = cur.h.truncated(*bound);
    for (;;) {
      const Term* hit = nullptr;
      for (const auto& t : cur.h.terms()) {
        if (d.contains(t.exponent)) {
          hit = &t;
          break;
        }
      }
      if (!hit) break;
      std::size_t i = 0;
      while (!gens[i].initial_exponent().divides(hit->exponent)) ++i;
      const ExponentVector m = hit->exponent - gens[i].initial_exponent();
      const Rational c = hit->coefficient / gens[i].initial_term().coefficient;
      cur.h = (cur.h - gens[i].times_monomial(m, c)).truncated(*bound);
      cur.q[i] += Polynomial::monomial(m, c);
    }
  }
  DivisionResult r;
  r.member = cur.h.is_zero();
  r.remainder = std::move(cur.h);
  r.unit = std::move(cur.u);
  r.quotients = std::move(cur.q);
  return r;
}

bool is_member(const Polynomial& f, const StandardBasis& sb) {
  if (f.nvars() != sb.nvars()) throw DimensionError("is_member: polynomial and basis live in different rings");
  if (f.is_zero()) return true;
  if (sb.truncation_degree()) {
    return detail::weak_normal_form(detail::to_ipoly(f), sb.reducers().polys, sb.truncation_degree()).zero();
  }
  // I is contained in I + <f> with the same diagram exactly when f is in I.
  std::vector<Polynomial> gens = sb.generators();
  gens.push_back(f);
  return standard_basis(sb.nvars(), gens).diagram() == sb.diagram();
}

Dimension quotient_dim(const StandardBasis& outer, const StandardBasis& inner) {
  if (outer.nvars() != inner.nvars()) throw DimensionError("quotient_dim: ring mismatch");
  for (const auto& g : inner.generators()) {
    if (!is_member(g, outer)) throw NotSubidealError("quotient_dim: inner ideal is not contained in the outer one");
  }
  auto diff = staircase_difference(outer.diagram(), inner.diagram());
  if (!diff) return Dimension::infinite();
  return Dimension::finite(diff->size());
}

Polynomial truncated_normal_form(const Polynomial& f, const StandardBasis& sb) {
  if (f.nvars() != sb.nvars()) throw DimensionError("truncated_normal_form: ring mismatch");
  if (!sb.truncation_degree()) throw InfiniteColengthError("truncated_normal_form needs a finite-colength ideal");
  return detail::full_reduce_truncated(f, sb.reducers().polys, *sb.truncation_degree());
}

}  // namespace branchcount
