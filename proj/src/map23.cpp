#include "branchcount/map23.hpp"

#include "branchcount/error.hpp"

namespace branchcount {

namespace {

constexpr std::size_t X1 = 0, X2 = 1, Y1 = 2, Y2 = 3;

ExponentVector exponent4(unsigned x1, unsigned x2, unsigned y1, unsigned y2) {
  ExponentVector e(4);
  e.set(X1, x1);
  e.set(X2, x2);
  e.set(Y1, y1);
  e.set(Y2, y2);
  return e;
}

// (u(x1, x2) - u(y1, x2)) / (x1 - y1) and (u(y1, x2) - u(y1, y2)) / (x2 - y2),
// term by term: (s^a - t^a) / (s - t) = sum_{i < a} s^i t^(a-1-i).
std::array<Polynomial, 2> divided(const Polynomial& u) {
  std::vector<Term> first, second;
  for (const auto& t : u.terms()) {
    const unsigned a = t.exponent[0], b = t.exponent[1];
    for (unsigned i = 0; i < a; ++i) first.push_back({exponent4(i, b, a - 1 - i, 0), t.coefficient});
    for (unsigned j = 0; j < b; ++j) second.push_back({exponent4(0, j, a, b - 1 - j), t.coefficient});
  }
  return {Polynomial::from_terms(4, std::move(first)), Polynomial::from_terms(4, std::move(second))};
}

FinitenessCertificate finiteness(std::size_t nvars, const std::vector<Polynomial>& gens) {
  FinitenessCertificate cert;
  StandardBasis sb = standard_basis(nvars, gens);
  cert.diagram = sb.diagram();
  cert.colength = colength(cert.diagram);
  cert.passed = cert.colength.is_finite();
  return cert;
}

}  // namespace

void MapGerm23::validate() const {
  for (const auto& p : u) {
    if (p.nvars() != 2) throw DimensionError("map germ components must live in two variables");
    if (sgn(p.constant_term()) != 0) throw RangeError("map germ must send the origin to the origin");
  }
}

std::vector<Polynomial> DoubledSystem::f() const { return {w[0], w[1], w[2], W[0], W[1], W[2]}; }

DoubledSystem divided_differences(const MapGerm23& u) {
  u.validate();
  DoubledSystem ds;
  const std::array<std::size_t, 2> to_x{X1, X2}, to_y{Y1, Y2};
  for (std::size_t i = 0; i < 3; ++i) {
    ds.c[i] = divided(u.u[i]);
    ds.w[i] = u.u[i].embed(4, to_x) - u.u[i].embed(4, to_y);
  }
  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t p = 0; p < 3; ++p) {
    const auto [i, j] = pairs[p];
    ds.W[p] = ds.c[i][0] * ds.c[j][1] - ds.c[i][1] * ds.c[j][0];
  }
  return ds;
}

std::vector<Polynomial> triple_system(const DoubledSystem& ds) {
  // Points (x, y, z) of the 6-variable ring; a pair selects two of them.
  const std::array<std::size_t, 4> xy{0, 1, 2, 3}, yz{2, 3, 4, 5}, xz{0, 1, 4, 5};
  std::vector<Polynomial> s;
  for (const auto& map : {xy, yz}) {
    for (const auto& w : ds.w) s.push_back(w.embed(6, map));
  }
  for (const auto& map : {xy, yz, xz}) {
    for (const auto& W : ds.W) s.push_back(W.embed(6, map));
  }
  return s;
}

FinitenessCertificate check_isolated_critical_point(const MapGerm23& u) {
  u.validate();
  std::vector<Polynomial> comps(u.u.begin(), u.u.end());
  FinitenessCertificate cert = finiteness(2, jacobian_minors(comps, 2));
  if (!cert.passed) {
    throw CertificateError("isolated_critical_point", "the 2x2 minors of Du do not have an isolated zero");
  }
  return cert;
}

FinitenessCertificate check_transverse(const DoubledSystem& ds) {
  std::vector<Polynomial> gens = ds.f();
  for (auto& m : jacobian_minors(ds.w, 3)) gens.push_back(std::move(m));
  return finiteness(4, gens);
}

FinitenessCertificate check_no_triple(const DoubledSystem& ds) { return finiteness(6, triple_system(ds)); }

std::string DoublePointReport::d2_text() const {
  switch (d2_status) {
    case D2Status::exact:
      return std::to_string(d2_count);
    case D2Status::upper_bound:
      return "at most " + std::to_string(d2_count);
    case D2Status::withheld:
      break;
  }
  return "withheld";
}

DoublePointReport count_double_point_branches(const MapGerm23& u, const GenericityConfig& cfg) {
  DoublePointReport rep;
  rep.critical_point = check_isolated_critical_point(u);
  const DoubledSystem ds = divided_differences(u);
  rep.transverse = check_transverse(ds);
  rep.no_triple = check_no_triple(ds);
  const auto f = ds.f();
  rep.branches = count_branches(f, cfg);
  rep.b0 = rep.branches.b0;
  // The swap (x, y) -> (y, x) pairs the half-branches of V.
  rep.d2_count = rep.b0 / 2;
  if (!rep.transverse.passed) {
    rep.d2_status = DoublePointReport::D2Status::withheld;
  } else if (!rep.no_triple.passed) {
    rep.d2_status = DoublePointReport::D2Status::upper_bound;
  } else {
    rep.d2_status = DoublePointReport::D2Status::exact;
  }
  return rep;
}

}  // namespace branchcount
