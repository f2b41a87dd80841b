#include "branchcount/branches.hpp"

#include <algorithm>
#include <random>

#include "branchcount/error.hpp"
#include "branchcount/local_algebra.hpp"

namespace branchcount {

namespace {

std::size_t common_ring(std::span<const Polynomial> fs, const char* who) {
  if (fs.empty()) throw RangeError(std::string(who) + ": no generators");
  const std::size_t n = fs.front().nvars();
  for (const auto& f : fs) {
    if (f.nvars() != n) throw DimensionError(std::string(who) + ": generators live in different rings");
  }
  return n;
}

std::vector<Polynomial> with(std::span<const Polynomial> fs, std::span<const Polynomial> extra) {
  std::vector<Polynomial> out(fs.begin(), fs.end());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

Polynomial combine(std::span<const Polynomial> fs, std::span<const Rational> coeffs) {
  Polynomial out(fs.front().nvars());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (sgn(coeffs[j]) != 0) out += fs[j] * coeffs[j];
  }
  return out;
}

std::string diagram_text(const Diagram& d) { return d.to_string(); }

// Iso-singularity ideal of a system: the system plus its (n-1)-minors.
StandardBasis singularity_ideal(std::span<const Polynomial> fs, std::size_t n) {
  auto minors = jacobian_minors(fs, n - 1);
  auto all = with(fs, minors);
  return standard_basis(n, all);
}

}  // namespace

void GenericityConfig::validate() const {
  if (bound < 1) throw RangeError("coefficient bound must be at least 1");
  if (retries < 1) throw RangeError("retries must be at least 1");
  if (a.has_value() != b.has_value()) throw RangeError("explicit combinations need both a and b");
}

DimCertificate check_curve_dim(std::span<const Polynomial> fs, const GenericityConfig& cfg) {
  cfg.validate();
  const std::size_t n = common_ring(fs, "check_curve_dim");
  for (const auto& f : fs) {
    if (sgn(f.constant_term()) != 0) throw RangeError("check_curve_dim: generators must vanish at the origin");
  }
  auto attempt = [&](const Polynomial& a) -> std::optional<DimCertificate> {
    std::vector<Polynomial> gens(fs.begin(), fs.end());
    gens.push_back(a);
    auto sb = standard_basis(n, gens);
    Dimension c = colength(sb.diagram());
    if (!c.is_finite()) return std::nullopt;
    return DimCertificate{a, sb.diagram(), c.value()};
  };
  for (std::size_t v = n; v-- > 0;) {
    if (auto cert = attempt(Polynomial::variable(n, v))) return *cert;
  }
  std::mt19937_64 rng(cfg.seed);
  long bound = cfg.bound;
  for (unsigned t = 0; t < cfg.retries; ++t, bound *= 2) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Polynomial a(n);
    for (std::size_t v = 0; v < n; ++v) a += Polynomial::variable(n, v) * Rational(dist(rng));
    if (a.is_zero()) continue;
    if (auto cert = attempt(a)) return *cert;
  }
  throw CertificateError("curve_dim", "no linear form cuts V(f) down to the origin; dim V(f) is probably >= 2");
}

SingularityCertificate check_isolated_singularity(std::span<const Polynomial> fs) {
  const std::size_t n = common_ring(fs, "check_isolated_singularity");
  if (n < 2) throw RangeError("check_isolated_singularity needs at least two variables");
  auto sb = singularity_ideal(fs, n);
  Dimension c = colength(sb.diagram());
  if (!c.is_finite()) {
    throw CertificateError("isolated_singularity",
                           "the ideal of f and the (n-1)-minors has infinite colength, B = " +
                               diagram_text(sb.diagram()));
  }
  return {sb.diagram(), c.value()};
}

Dimension jacobian_isolation(std::span<const Polynomial> g, const Polynomial& h) {
  const std::size_t n = h.nvars();
  if (g.size() + 1 != n) throw RangeError("jacobian_isolation needs n-1 functions g");
  std::vector<Polynomial> rows{h};
  rows.insert(rows.end(), g.begin(), g.end());
  common_ring(rows, "jacobian_isolation");
  std::vector<Polynomial> gens(g.begin(), g.end());
  gens.push_back(determinant(jacobian(rows)));
  return colength(standard_basis(n, gens).diagram());
}

ReductionResult reduce_generic(std::span<const Polynomial> fs, const GenericityConfig& cfg) {
  cfg.validate();
  const std::size_t n = common_ring(fs, "reduce_generic");
  const std::size_t m = fs.size();
  if (n < 2) throw RangeError("reduce_generic needs at least two variables");
  const std::size_t r = rank_at_origin(fs);
  if (r >= n - 1) {
    throw CertificateError("rank", "rank DF(0) = " + std::to_string(r) + " is not below n-1 = " +
                                       std::to_string(n - 1));
  }
  const auto J = standard_basis(n, fs);

  // Returns an empty optional with `why` filled when the draw is rejected.
  std::string why;
  auto attempt = [&](const std::vector<std::vector<Rational>>& a,
                     const std::vector<Rational>& b) -> std::optional<ReductionResult> {
    ReductionResult res;
    res.a = a;
    res.b = b;
    for (const auto& row : a) res.g.push_back(combine(fs, row));
    res.h = combine(fs, b);
    auto iso = singularity_ideal(res.g, n);
    Dimension c = colength(iso.diagram());
    if (!c.is_finite()) {
      why = "V(g) has no isolated singularity, B = " + diagram_text(iso.diagram());
      return std::nullopt;
    }
    res.g_singularity = {iso.diagram(), c.value()};
    res.J = J;
    std::vector<Polynomial> j1 = res.g, j2 = res.g;
    j1.push_back(res.h);
    j2.push_back(res.h * res.h);
    res.J1 = standard_basis(n, j1);
    auto diff = staircase_difference(J.diagram(), res.J1.diagram());
    if (!diff) {
      why = "dim <f>/<g, h> is infinite, B(J1) = " + diagram_text(res.J1.diagram());
      return std::nullopt;
    }
    res.dim_J_over_J1 = diff->size();
    res.J2 = standard_basis(n, j2);
    return res;
  };

  if (cfg.a) {
    const auto& a = *cfg.a;
    const auto& b = *cfg.b;
    if (a.size() != n - 1) throw RangeError("explicit a must have n-1 rows");
    for (const auto& row : a) {
      if (row.size() != m) throw RangeError("explicit a must have one column per generator");
    }
    if (b.size() != m) throw RangeError("explicit b must have one entry per generator");
    auto res = attempt(a, b);
    if (!res) throw CertificateError("reduction", "the supplied combinations are not admissible: " + why);
    res->user_supplied = true;
    res->attempts = 1;
    return *res;
  }

  std::mt19937_64 rng(cfg.seed);
  long bound = cfg.bound;
  std::string failures;
  for (unsigned t = 0; t < cfg.retries; ++t, bound *= 2) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<std::vector<Rational>> a(n - 1, std::vector<Rational>(m));
    std::vector<Rational> b(m);
    for (auto& row : a) {
      for (auto& x : row) x = dist(rng);
    }
    for (auto& x : b) x = dist(rng);
    if (auto res = attempt(a, b)) {
      res->attempts = t + 1;
      res->final_bound = bound;
      return *res;
    }
    failures += "\n  attempt " + std::to_string(t + 1) + " (bound " + std::to_string(bound) + "): " + why;
  }
  throw GenericityError("no admissible combination after " + std::to_string(cfg.retries) + " draws:" + failures);
}

XiData compute_xi(const StandardBasis& J1, const StandardBasis& J2) {
  if (J1.nvars() != J2.nvars()) throw DimensionError("compute_xi: ring mismatch");
  for (const auto& g : J2.generators()) {
    if (!is_member(g, J1)) throw NotSubidealError("compute_xi: J2 is not contained in J1");
  }
  XiData out;
  if (J1.diagram() == J2.diagram()) return out;
  auto diff = staircase_difference(J1.diagram(), J2.diagram());
  if (!diff) throw CertificateError("xi", "N(J1) \\ N(J2) is infinite");
  out.difference = *diff;
  for (const auto& alpha : J1.diagram().generators()) {
    if (!J2.diagram().contains(alpha)) out.new_corners.push_back(alpha);
  }
  unsigned top = 0, low = ~0u;
  for (const auto& beta : out.difference) top = std::max(top, beta.degree());
  for (const auto& alpha : out.new_corners) low = std::min(low, alpha.degree());
  out.xi = 1 + top - low;
  return out;
}

HSystem build_H(std::span<const Polynomial> g, const Polynomial& h, unsigned xi, std::optional<unsigned> k) {
  if (xi < 1) throw RangeError("build_H: xi must be at least 1");
  const std::size_t n = h.nvars();
  if (g.size() + 1 != n) throw RangeError("build_H needs n-1 functions g");
  HSystem out;
  if (k && (*k % 2 != 0 || *k <= xi)) {
    throw CertificateError("k", "k = " + std::to_string(*k) + " must be even and greater than xi = " + std::to_string(xi));
  }
  out.k = k ? *k : xi % 2 == 0 ? xi + 2 : xi + 1;
  out.omega = Polynomial(n);
  for (std::size_t v = 0; v < n; ++v) out.omega += Polynomial::monomial(ExponentVector::unit(n, v, out.k));
  auto det_with = [&](const Polynomial& top) {
    std::vector<Polynomial> rows{top};
    rows.insert(rows.end(), g.begin(), g.end());
    return determinant(jacobian(rows));
  };
  out.h_plus = det_with(h + out.omega);
  out.h_minus = det_with(h - out.omega);
  out.H_plus = {out.h_plus};
  out.H_minus = {out.h_minus};
  out.H_plus.insert(out.H_plus.end(), g.begin(), g.end());
  out.H_minus.insert(out.H_minus.end(), g.begin(), g.end());
  return out;
}

std::string to_string(BranchReport::Path p) {
  switch (p) {
    case BranchReport::Path::general: return "general";
    case BranchReport::Path::fast: return "fast";
    case BranchReport::Path::analytic: return "analytic";
  }
  return "?";
}

BranchReport count_branches(std::span<const Polynomial> fs, const GenericityConfig& cfg) {
  cfg.validate();
  const std::size_t n = common_ring(fs, "count_branches");
  if (n < 2) throw RangeError("count_branches needs at least two variables");
  for (const auto& f : fs) {
    if (sgn(f.constant_term()) != 0) throw CertificateError("input", "every generator must vanish at the origin");
  }
  BranchReport rep;
  rep.seed = cfg.seed;
  rep.rank_at_origin = rank_at_origin(fs);
  if (rep.rank_at_origin == n) {
    // F is a local diffeomorphism onto its image in n of the coordinates,
    // so the origin is an isolated point of V.
    rep.path = BranchReport::Path::analytic;
    return rep;
  }
  if (rep.rank_at_origin == n - 1) {
    throw CertificateError("rank", "rank DF(0) = n-1 is outside the supported case; refusing to guess");
  }
  rep.curve_dim = check_curve_dim(fs, cfg);
  rep.singularity = check_isolated_singularity(fs);
  rep.reduction = reduce_generic(fs, cfg);
  const auto& red = *rep.reduction;
  rep.xi_data = compute_xi(red.J1, red.J2);
  rep.xi = rep.xi_data->xi;
  HSystem H = build_H(red.g, red.h, rep.xi, cfg.k);
  rep.k = H.k;
  rep.omega = "sum x_i^" + std::to_string(H.k);

  auto algebra = [&](const std::vector<Polynomial>& comps, const char* which) {
    try {
      return LocalAlgebra(comps, cfg.exec);
    } catch (const InfiniteColengthError&) {
      throw CertificateError(which, "the origin is not isolated in the zero set");
    }
  };
  LocalAlgebra plus = algebra(H.H_plus, "H_plus");
  LocalAlgebra minus = algebra(H.H_minus, "H_minus");
  rep.jacobian_isolated = true;
  rep.dim_plus = plus.dim();
  rep.dim_minus = minus.dim();
  rep.deg_plus = el_degree(plus, std::nullopt, cfg.exec);
  rep.deg_minus = el_degree(minus, std::nullopt, cfg.exec);
  rep.b0 = rep.deg_plus - rep.deg_minus;
  if (rep.b0 < 0 || rep.b0 % 2 != 0) {
    throw InternalError("branch count " + std::to_string(rep.b0) + " is negative or odd");
  }
  return rep;
}

BranchReport count_branches_fast(std::span<const Polynomial> fs, std::span<const Polynomial> g, Execution exec) {
  const std::size_t n = common_ring(fs, "count_branches_fast");
  if (n < 2) throw RangeError("count_branches_fast needs at least two variables");
  if (g.size() + 1 != n) throw RangeError("count_branches_fast needs n-1 functions g");
  common_ring(with(fs, g), "count_branches_fast");
  BranchReport rep;
  rep.path = BranchReport::Path::fast;
  rep.rank_at_origin = rank_at_origin(fs);
  try {
    rep.singularity = check_isolated_singularity(fs);
    check_isolated_singularity(g);
  } catch (const CertificateError& e) {
    throw CertificateError("fast_path", std::string(e.what()) + "; use the general path");
  }
  auto J = standard_basis(n, fs);
  auto G = standard_basis(n, g);
  for (const auto& p : g) {
    if (!is_member(p, J)) throw CertificateError("fast_path", "some g is not in <f>; use the general path");
  }
  if (!staircase_difference(J.diagram(), G.diagram())) {
    throw CertificateError("fast_path", "dim <f>/<g> is infinite; use the general path");
  }
  Polynomial omega(n);
  for (std::size_t v = 0; v < n; ++v) omega += Polynomial::monomial(ExponentVector::unit(n, v, 2));
  std::vector<Polynomial> rows{omega};
  rows.insert(rows.end(), g.begin(), g.end());
  std::vector<Polynomial> H1{determinant(jacobian(rows))};
  H1.insert(H1.end(), g.begin(), g.end());
  rep.k = 2;
  rep.omega = "sum x_i^2";
  LocalAlgebra alg = [&] {
    try {
      return LocalAlgebra(H1, exec);
    } catch (const InfiniteColengthError&) {
      throw CertificateError("fast_path", "H1 has no isolated zero");
    }
  }();
  rep.dim_plus = alg.dim();
  rep.deg_plus = el_degree(alg, std::nullopt, exec);
  rep.b0 = 2 * rep.deg_plus;
  if (rep.b0 < 0) throw InternalError("fast path produced a negative branch count");
  return rep;
}

}  // namespace branchcount
