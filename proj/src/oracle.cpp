#include "branchcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "branchcount/error.hpp"

namespace branchcount {

namespace {

// Grid offset that keeps samples and their dyadic midpoints off the
// coordinate axes, where zeros of test inputs tend to sit.
constexpr double kPhase = 0.3183098861837907;
// Bisection depth below one grid interval before giving up on that interval.
constexpr int kMaxDepth = 50;
// Evaluation error allowance, relative to the sum of |terms| on the circle.
constexpr double kRoundoff = 1e-12;

void check_plane(std::span<const Polynomial> fs, const char* what) {
  for (const auto& f : fs) {
    if (f.nvars() != 2) throw DimensionError(std::string(what) + ": functions must live in two variables");
    if (sgn(f.constant_term()) != 0) throw RangeError(std::string(what) + ": functions must vanish at the origin");
  }
}

// f(eps cos t, eps sin t) with bounds on its first two t-derivatives:
// |d/dt cos^a sin^b| <= a + b and |d2/dt2 cos^a sin^b| <= (a + b)^2.
class OnCircle {
 public:
  OnCircle(const Polynomial& f, double eps) : eps_(eps) {
    for (const auto& t : f.terms()) {
      const unsigned a = t.exponent[0], b = t.exponent[1];
      const double c = t.coefficient.get_d();
      terms_.push_back({a, b, c});
      const double size = std::abs(c) * std::pow(eps, a + b);
      slack_ += kRoundoff * size;
      d1_ += size * (a + b);
      d2_ += size * (a + b) * (a + b);
    }
  }

  double operator()(double t) const {
    const double x = eps_ * std::cos(t), y = eps_ * std::sin(t);
    double acc = 0.0;
    for (const auto& [a, b, c] : terms_) acc += c * std::pow(x, a) * std::pow(y, b);
    return acc;
  }

  // d/dt f = -y f_x + x f_y.
  double derivative(double t) const {
    const double x = eps_ * std::cos(t), y = eps_ * std::sin(t);
    double acc = 0.0;
    for (const auto& [a, b, c] : terms_) {
      if (a > 0) acc -= c * a * std::pow(x, a - 1) * std::pow(y, b + 1);
      if (b > 0) acc += c * b * std::pow(x, a + 1) * std::pow(y, b - 1);
    }
    return acc;
  }

  double slack() const { return slack_; }
  double d1() const { return d1_; }
  double d2() const { return d2_; }

 private:
  struct DTerm {
    unsigned a, b;
    double c;
  };
  double eps_;
  std::vector<DTerm> terms_;
  double slack_ = 0.0, d1_ = 0.0, d2_ = 0.0;
};

enum class Sweep { ok, touches_zero };

struct Result {
  Sweep status;
  long value = 0;
};

using Point = std::array<double, 2>;

// Turn of F over [a, b]. On an interval of half width r around the midpoint m,
// F stays within d1 r of F(m); once that disc is inside the cone of half angle
// pi/4 the endpoint angles differ by less than pi/2 and atan2 is exact.
std::optional<double> turn_over(const OnCircle& f1, const OnCircle& f2, double a, double b, Point fa, Point fb,
                                int depth) {
  const double m = 0.5 * (a + b), r = 0.5 * (b - a);
  const Point fm{f1(m), f2(m)};
  const double radius = std::hypot(f1.d1(), f2.d1()) * r + std::hypot(f1.slack(), f2.slack());
  if (std::hypot(fm[0], fm[1]) > std::numbers::sqrt2 * radius) {
    return std::atan2(fa[0] * fb[1] - fa[1] * fb[0], fa[0] * fb[0] + fa[1] * fb[1]);
  }
  if (depth == kMaxDepth) return std::nullopt;
  auto left = turn_over(f1, f2, a, m, fa, fm, depth + 1);
  if (!left) return std::nullopt;
  auto right = turn_over(f1, f2, m, b, fm, fb, depth + 1);
  if (!right) return std::nullopt;
  return *left + *right;
}

// Sign changes of g over [a, b]: none when |g(m)| beats the first-derivative
// bound, at most one when |g'(m)| beats the second-derivative bound.
std::optional<long> changes_over(const OnCircle& g, double a, double b, double ga, double gb, int depth) {
  const double m = 0.5 * (a + b), r = 0.5 * (b - a);
  const double gm = g(m);
  if (std::abs(gm) > g.d1() * r + g.slack()) return 0;
  if (std::abs(g.derivative(m)) > g.d2() * r + kRoundoff * g.d1()) {
    if (std::abs(ga) <= g.slack() || std::abs(gb) <= g.slack()) return std::nullopt;
    return (ga < 0) != (gb < 0) ? 1 : 0;
  }
  if (depth == kMaxDepth || std::abs(gm) <= g.slack()) return std::nullopt;
  auto left = changes_over(g, a, m, ga, gm, depth + 1);
  if (!left) return std::nullopt;
  auto right = changes_over(g, m, b, gm, gb, depth + 1);
  if (!right) return std::nullopt;
  return *left + *right;
}

double angle(std::size_t s, std::size_t samples) {
  return 2.0 * std::numbers::pi * (static_cast<double>(s) + kPhase) / static_cast<double>(samples);
}

Result winding_sweep(std::span<const Polynomial> F, double eps, std::size_t samples, Execution exec) {
  const auto v = sample_circle(F, eps, samples, exec, kPhase);
  const OnCircle f1(F[0], eps), f2(F[1], eps);
  double turn = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double b = s + 1 == samples ? angle(0, samples) + 2.0 * std::numbers::pi : angle(s + 1, samples);
    auto t = turn_over(f1, f2, angle(s, samples), b, v[s], v[(s + 1) % samples], 0);
    if (!t) return {Sweep::touches_zero};
    turn += *t;
  }
  return {Sweep::ok, std::lround(turn / (2 * std::numbers::pi))};
}

Result sign_sweep(const Polynomial& g, double eps, std::size_t samples, Execution exec) {
  const auto v = sample_circle(std::span(&g, 1), eps, samples, exec, kPhase);
  const OnCircle h(g, eps);
  long changes = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double b = s + 1 == samples ? angle(0, samples) + 2.0 * std::numbers::pi : angle(s + 1, samples);
    auto c = changes_over(h, angle(s, samples), b, v[s][0], v[(s + 1) % samples][0], 0);
    if (!c) return {Sweep::touches_zero};
    changes += *c;
  }
  return {Sweep::ok, changes};
}

// A certified sweep is exact at its radius; two sample counts must still
// agree before an answer is returned. The radius halves when F comes too close
// to zero on the circle for the bounds to separate it.
template <class Sweeper>
long refine(const OracleConfig& cfg, const char* what, Sweeper sweep) {
  double eps = cfg.radius.get_d();
  for (unsigned shrink = 0; shrink <= cfg.max_shrinks; ++shrink, eps /= 2) {
    bool have_last = false, touched = false;
    long last = 0;
    for (std::size_t n = cfg.samples; n <= cfg.max_samples; n *= 2) {
      const Result r = sweep(eps, n);
      if (r.status == Sweep::touches_zero) {
        touched = true;
        break;
      }
      if (have_last && last == r.value) return r.value;
      have_last = true;
      last = r.value;
    }
    if (!touched) break;
  }
  throw OracleInconclusive(std::string(what) + ": no stable answer within the sampling limits");
}

}  // namespace

void OracleConfig::validate() const {
  if (sgn(radius) <= 0) throw RangeError("oracle radius must be positive");
  if (samples < 16) throw RangeError("oracle needs at least 16 samples");
  if (max_samples < samples) throw RangeError("oracle max_samples is below samples");
}

long winding_degree(std::span<const Polynomial> F, const OracleConfig& cfg) {
  cfg.validate();
  if (F.size() != 2) throw RangeError("winding_degree: expects two functions");
  check_plane(F, "winding_degree");
  return refine(cfg, "winding_degree", [&](double eps, std::size_t n) { return winding_sweep(F, eps, n, cfg.exec); });
}

long circle_half_branches(const Polynomial& g, const OracleConfig& cfg) {
  cfg.validate();
  check_plane(std::span(&g, 1), "circle_half_branches");
  return refine(cfg, "circle_half_branches", [&](double eps, std::size_t n) { return sign_sweep(g, eps, n, cfg.exec); });
}

}  // namespace branchcount
