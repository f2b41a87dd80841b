#include <doctest.h>

#include <random>

#include "branchcount/branches.hpp"
#include "branchcount/error.hpp"
#include "branchcount/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<Polynomial> kPlane = Ps({"x^3", "x*(x - y)"});

GenericityConfig plane_combos() {
  GenericityConfig cfg;
  cfg.a = std::vector<std::vector<Rational>>{{1, -6}};
  cfg.b = std::vector<Rational>{1, 5};
  return cfg;
}

}  // namespace

TEST_CASE("curve dimension certificates") {
  const auto c = check_curve_dim(kPlane);
  CHECK(c.linear_form == P("y"));
  CHECK(c.colength == 2);
  CHECK(c.diagram.generators() == Es({{0, 1}, {2, 0}}));
  CHECK(check_curve_dim(Ps({"x"})).colength == 1);
  CHECK_THROWS_AS(check_curve_dim(Ps({"0"})), CertificateError);
}

TEST_CASE("isolated singularity certificates") {
  const auto s = check_isolated_singularity(kPlane);
  CHECK(s.diagram.generators() == Es({{1, 0}, {0, 1}}));
  CHECK(s.colength == 1);
  const auto g1 = check_isolated_singularity(Ps({"x^3 - 6*x^2 + 6*x*y"}));
  CHECK(g1.diagram.generators() == Es({{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(check_isolated_singularity(Ps({"x^2"})), CertificateError);
}

TEST_CASE("generic reduction with explicit combinations") {
  const auto red = reduce_generic(kPlane, plane_combos());
  CHECK(red.user_supplied);
  CHECK(red.g == Ps({"x^3 - 6*x^2 + 6*x*y"}));
  CHECK(red.h == P("x^3 + 5*x^2 - 5*x*y"));
  CHECK(red.dim_J_over_J1 == 0);
  CHECK(B(red.J) == Es({{2, 0}, {1, 2}}));
  CHECK(B(red.J1) == Es({{2, 0}, {1, 2}}));
  CHECK(B(red.J2) == Es({{2, 0}, {1, 5}}));
}

TEST_CASE("vector field example: explicit combinations are accepted") {
  const auto v = Ps({"x^2 - y^2*z", "y^2 - x*z", "z^3 + x^3"}, kXYZ);
  const auto w = Ps({"z^2 + x*y", "x^2 + y*z^2", "y^3 - x^2*z"}, kXYZ);
  const std::vector f{v[1] * w[2] - v[2] * w[1], v[0] * w[2] - v[2] * w[0], v[0] * w[1] - v[1] * w[0]};
  GenericityConfig cfg;
  cfg.a = std::vector<std::vector<Rational>>{{1, 1, 1}, {1, -1, 0}};
  cfg.b = std::vector<Rational>{0, 0, 1};
  const auto red = reduce_generic(f, cfg);
  CHECK(red.g[0] == f[0] + f[1] + f[2]);
  CHECK(red.g[1] == f[0] - f[1]);
  CHECK(red.h == f[2]);
  CHECK(B(red.J1) == Es({{4, 0, 0}, {2, 3, 0}, {1, 4, 0}, {0, 5, 1}}));
  std::vector<ExponentVector> j2 = Es({{4, 0, 0}, {2, 3, 0}, {1, 6, 0}, {1, 5, 2}, {0, 7, 2},
                                       {1, 4, 5}, {0, 6, 5}, {0, 5, 6}, {0, 12, 1}});
  std::sort(j2.begin(), j2.end(), LocalOrder{});
  CHECK(B(red.J2) == j2);
  CHECK(compute_xi(red.J1, red.J2).xi == 8);
}

TEST_CASE("xi of the first plane example") {
  const auto red = reduce_generic(kPlane, plane_combos());
  const auto xi = compute_xi(red.J1, red.J2);
  CHECK(xi.xi == 3);
  CHECK(xi.difference == Es({{1, 2}, {1, 3}, {1, 4}}));
  CHECK(xi.new_corners == Es({{1, 2}}));
  CHECK(compute_xi(red.J1, red.J1).xi == 1);
}

TEST_CASE("H maps") {
  const auto H = build_H(Ps({"x^3 - 6*x^2 + 6*x*y"}), P("x^3 + 5*x^2 - 5*x*y"), 3);
  CHECK(H.k == 4);
  CHECK(H.omega == P("x^4 + y^4"));
  const auto H3 = build_H(Ps({"x", "y"}, kXYZ), P("z", kXYZ), 8);
  CHECK(H3.k == 10);
  CHECK(H3.omega == P("x^10 + y^10 + z^10", kXYZ));
  const auto H1 = build_H(Ps({"y"}), P("x"), 3);
  CHECK(H1.h_plus == P("1 + 4*x^3"));
  CHECK(H1.H_plus == Ps({"1 + 4*x^3", "y"}));
  CHECK(build_H(Ps({"y"}), P("x"), 3, 6u).k == 6);
  CHECK_THROWS_AS(build_H(Ps({"y"}), P("x"), 3, 3u), CertificateError);
  CHECK_THROWS_AS(build_H(Ps({"y"}), P("x"), 3, 2u), CertificateError);
}

TEST_CASE("branch count of the first plane example") {
  const auto rep = count_branches(kPlane, plane_combos());
  CHECK(rep.path == BranchReport::Path::general);
  CHECK(rep.xi == 3);
  CHECK(rep.k == 4);
  CHECK(rep.deg_plus == 1);
  CHECK(rep.deg_minus == -1);
  CHECK(rep.b0 == 2);
  CHECK(rep.jacobian_isolated);
}

TEST_CASE("branch count with random combinations does not depend on the seed") {
  for (std::uint64_t seed : {1, 2, 3}) {
    GenericityConfig cfg;
    cfg.seed = seed;
    const auto rep = count_branches(kPlane, cfg);
    CHECK_FALSE(rep.reduction->user_supplied);
    CHECK(rep.b0 == 2);
  }
}

TEST_CASE("isolated real point and the rank shortcuts") {
  CHECK(count_branches(Ps({"x^2 + 2*y^2"})).b0 == 0);
  // With k = 2 the weight x^2 + y^2 is a multiple of f itself, so H+ loses
  // its isolated zero; a larger k avoids that.
  CHECK_THROWS_AS(count_branches(Ps({"x^2 + y^2"})), CertificateError);
  GenericityConfig k4;
  k4.k = 4;
  CHECK(count_branches(Ps({"x^2 + y^2"}), k4).b0 == 0);
  const auto rep = count_branches(Ps({"x", "y"}));
  CHECK(rep.path == BranchReport::Path::analytic);
  CHECK(rep.b0 == 0);
  CHECK_THROWS_AS(count_branches(Ps({"x", "y^2"})), CertificateError);  // rank n-1
}

TEST_CASE("fast path") {
  auto fast = [](const char* g) {
    const auto gs = Ps({g});
    return count_branches_fast(gs, gs);
  };
  CHECK(fast("x*y").b0 == 4);
  CHECK(fast("x^2 - y^2").b0 == 4);
  CHECK(fast("x").b0 == 2);
  CHECK(fast("x*y").deg_plus == 2);
}

TEST_CASE("fast path and general path agree on plane curves") {
  for (const char* g : {"x*y", "x^2 - y^3", "y*(x^2 - y^3)", "x^3 - x*y^2"}) {
    const auto gs = Ps({g});
    CHECK(count_branches(gs).b0 == count_branches_fast(gs, gs).b0);
  }
}

TEST_CASE("circle oracle agrees with the fast path on random square-free plane curves") {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 10) {
    const Polynomial g = random_poly(rng, 2, 2, 4, 4, 4);
    if (g.is_zero() || !squarefree_plane(g)) continue;
    CAPTURE(format_polynomial(g, kXY));
    const std::vector gs{g};
    CHECK(count_branches_fast(gs, gs).b0 == circle_half_branches(g));
    ++checked;
  }
}

TEST_CASE("general path agrees with the circle oracle on principal plane curves") {
  std::mt19937_64 rng(42);
  int checked = 0;
  while (checked < 6) {
    const Polynomial g = random_poly(rng, 2, 2, 3, 3, 4);
    if (g.is_zero() || !squarefree_plane(g) || rank_at_origin(std::vector{g}) != 0) continue;
    CAPTURE(format_polynomial(g, kXY));
    CHECK(count_branches(std::vector{g}).b0 == circle_half_branches(g));
    ++checked;
  }
}

TEST_CASE("genericity configuration is validated") {
  GenericityConfig cfg;
  cfg.bound = 0;
  CHECK_THROWS_AS(cfg.validate(), RangeError);
  cfg = {};
  cfg.retries = 0;
  CHECK_THROWS_AS(cfg.validate(), RangeError);
  cfg = {};
  cfg.a = std::vector<std::vector<Rational>>{{1, 1}};
  CHECK_THROWS_AS(cfg.validate(), RangeError);
}
