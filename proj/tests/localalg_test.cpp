#include <doctest.h>

#include <random>

#include "branchcount/branches.hpp"
#include "branchcount/error.hpp"
#include "branchcount/local_algebra.hpp"
#include "branchcount/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<Rational> coords(std::initializer_list<int> c) { return std::vector<Rational>(c.begin(), c.end()); }

}  // namespace

TEST_CASE("local algebras of monomial maps") {
  const LocalAlgebra id(Ps({"x", "y"}));
  CHECK(id.dim() == 1);
  CHECK(id.basis() == Es({{0, 0}}));
  const LocalAlgebra a(Ps({"x^2", "y"}));
  CHECK(a.dim() == 2);
  CHECK(a.basis() == Es({{0, 0}, {1, 0}}));
  CHECK(LocalAlgebra(Ps({"x^3", "y^3"})).dim() == 9);
  CHECK_THROWS_AS(LocalAlgebra(Ps({"x", "x*y"})), InfiniteColengthError);
}

TEST_CASE("normal forms in the local algebra") {
  const LocalAlgebra a(Ps({"x^2", "y"}));
  CHECK(a.normal_form(P("1")) == coords({1, 0}));
  CHECK(a.normal_form(P("x^3")) == coords({0, 0}));
  CHECK(a.normal_form(P("x*(1 + x)")) == coords({0, 1}));
  // Units are inverted in the local ring: (1 + x) * y is zero, y / (1 + x) too.
  const LocalAlgebra b(Ps({"x^3", "y - x*y"}));
  CHECK(b.normal_form(P("y")) == coords({0, 0, 0}));
}

TEST_CASE("multiplication is commutative and associative") {
  const LocalAlgebra a(Ps({"x^3 - y^2", "x*y"}));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-3, 3);
  auto draw = [&] {
    std::vector<Rational> v(a.dim());
    for (auto& x : v) x = c(rng);
    return v;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = draw(), v = draw(), w = draw();
    CHECK(a.multiply(u, v) == a.multiply(v, u));
    CHECK(a.multiply(a.multiply(u, v), w) == a.multiply(u, a.multiply(v, w)));
  }
  // m^D lies in the ideal.
  const unsigned D = a.nilpotency_bound();
  for (unsigned i = 0; i <= D; ++i) {
    CHECK(is_member(Polynomial::monomial(E({i, D - i})), a.ideal()));
  }
}

TEST_CASE("local degree examples") {
  CHECK(el_degree(Ps({"x", "y"})) == 1);
  CHECK(el_degree(Ps({"x", "y", "z"}, kXYZ)) == 1);
  CHECK(el_degree(Ps({"x^2 - y^2", "2*x*y"})) == 2);
  CHECK(el_degree(Ps({"x^3 - 3*x*y^2", "3*x^2*y - y^3"})) == 3);
  CHECK(el_degree(Ps({"x^2 + y^2", "y"})) == 0);
}

TEST_CASE("local degree of the first plane example's H maps") {
  const auto g1 = P("x^3 - 6*x^2 + 6*x*y");
  const auto h = P("x^3 + 5*x^2 - 5*x*y");
  const auto H = build_H(std::vector{g1}, h, 3);
  CHECK(el_degree(H.H_plus) == 1);
  CHECK(el_degree(H.H_minus) == -1);
}

TEST_CASE("signature of small forms") {
  auto sig = [](std::vector<std::vector<Rational>> m) { return congruence_inertia(std::move(m)); };
  CHECK(sig({{1, 0}, {0, -1}}) == Inertia{1, 1});
  CHECK(sig({{0, 1}, {1, 0}}) == Inertia{1, 1});
  CHECK(sig({{2, 0, 0}, {0, 3, 0}, {0, 0, -5}}) == Inertia{2, 1});
  CHECK(sig({{0, 0}, {0, 0}}) == Inertia{0, 0});
  CHECK(sig({{1, 2}, {2, 4}}) == Inertia{1, 0});
}

TEST_CASE("one variable: x^k has degree 1 for odd k and 0 for even k") {
  const Ring t{"t"};
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK(el_degree(std::vector{P("t^" + std::to_string(k), t)}) == (k % 2 ? 1 : 0));
  }
}

namespace {

std::vector<Polynomial> compose(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner) {
  std::vector<Polynomial> out;
  for (const auto& f : outer) out.push_back(f.compose(inner));
  return out;
}

}  // namespace

TEST_CASE("local degree agrees with the winding number on random planar maps") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 24; ++trial) {
    const auto F = random_planar_map(rng);
    CAPTURE(format_polynomial(F[0], kXY));
    CAPTURE(format_polynomial(F[1], kXY));
    CHECK(el_degree(F) == winding_degree(F));
  }
}

TEST_CASE("local degree does not depend on the admissible functional") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const LocalAlgebra a(random_planar_map(rng));
    const long base = el_degree(a);
    for (std::size_t i : admissible_functionals(a)) CHECK(el_degree(a, i) == base);
  }
}

TEST_CASE("local degree is multiplicative under composition") {
  const auto sq = Ps({"x^2 - y^2", "2*x*y"});
  const auto twice = compose(sq, sq);
  CHECK(el_degree(twice) == 4);
  CHECK(winding_degree(twice) == 4);
}

TEST_CASE("dimension is invariant under unimodular mixing of the components") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto F = random_planar_map(rng);
    const int k = c(rng);
    // [[1, k], [0, 1]] then a swap: determinant -1.
    const std::vector<Polynomial> G{F[1], F[0] + Rational(k) * F[1]};
    CHECK(LocalAlgebra(G).dim() == LocalAlgebra(F).dim());
  }
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(el_degree(Ps({"x"})), RangeError);
  const LocalAlgebra a(Ps({"x^2", "y^2"}));
  CHECK_THROWS_AS(el_degree(a, 0), RangeError);  // the Jacobian class 4xy has no constant term
}
