#include "branchcount/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "branchcount/error.hpp"

namespace branchcount {

std::vector<Polynomial> batch_normal_forms(std::span<const Polynomial> fs, const StandardBasis& sb, Execution exec) {
  std::vector<Polynomial> out(fs.size());
  const long count = static_cast<long>(fs.size());
  if (exec == Execution::serial) {
    for (long i = 0; i < count; ++i) out[i] = truncated_normal_form(fs[i], sb);
    return out;
  }
  // Exceptions may not leave an OpenMP region; carry the first one out.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = truncated_normal_form(fs[i], sb);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

// Row-major symmetric matrix; eliminated indices are dropped from `active`.
struct Workspace {
  std::size_t n;
  std::vector<Rational> a;
  Rational& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
};

struct Pivot {
  std::size_t i, j;  // i == j for a 1x1 pivot
  std::size_t cost;
};

// Markowitz-style choice of the pivot with the smallest update. A 2x2 pivot
// pairs a row j with a_jj = 0 with a partner i, so its determinant -a_ij^2 is
// never zero; the update then touches roughly 2 r_i r_j + r_j^2 entries.
Pivot choose_pivot(Workspace& w, const std::vector<std::size_t>& active, const std::vector<std::size_t>& count) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  Pivot best{0, 0, none};
  for (std::size_t p = 0; p < active.size(); ++p) {
    const std::size_t j = active[p], rj = count[p];
    if (rj == 0) continue;
    if (sgn(w.at(j, j)) != 0) {
      const std::size_t cost = (rj - 1) * (rj - 1);
      if (cost < best.cost) best = {j, j, cost};
      continue;
    }
    if (rj * rj >= best.cost) continue;
    for (std::size_t q = 0; q < active.size(); ++q) {
      const std::size_t i = active[q];
      if (i == j || sgn(w.at(j, i)) == 0) continue;
      const std::size_t cost = 2 * count[q] * rj + (sgn(w.at(i, i)) != 0 ? rj * rj : 0);
      if (cost < best.cost) best = {i, j, cost};
    }
  }
  return best;
}

void schur_update(Workspace& w, const std::vector<std::size_t>& support, const Pivot& pv, Execution exec) {
  const long count = static_cast<long>(support.size());
  const std::size_t i = pv.i, j = pv.j;
  Rational det;
  if (i != j) det = w.at(i, i) * w.at(j, j) - w.at(i, j) * w.at(i, j);
  auto update = [&](long idx) {
    const std::size_t r = support[idx];
    if (i == j) {
      const Rational f = w.at(r, i) / w.at(i, i);
      for (std::size_t c : support) {
        if (sgn(w.at(i, c)) != 0) w.at(r, c) -= f * w.at(i, c);
      }
      return;
    }
    // (u, v) = (a_ri, a_rj) P^-1 for the pivot block P.
    const Rational u = (w.at(r, i) * w.at(j, j) - w.at(r, j) * w.at(i, j)) / det;
    const Rational v = (w.at(r, j) * w.at(i, i) - w.at(r, i) * w.at(i, j)) / det;
    for (std::size_t c : support) {
      if (sgn(u) != 0 && sgn(w.at(i, c)) != 0) w.at(r, c) -= u * w.at(i, c);
      if (sgn(v) != 0 && sgn(w.at(j, c)) != 0) w.at(r, c) -= v * w.at(j, c);
    }
  };
  if (exec == Execution::serial) {
    for (long idx = 0; idx < count; ++idx) update(idx);
  } else {
    // Rows only read the pivot rows, which are not in `support`.
#pragma omp parallel for schedule(dynamic, 1)
    for (long idx = 0; idx < count; ++idx) update(idx);
  }
}

}  // namespace

Inertia congruence_inertia(std::vector<std::vector<Rational>> m, Execution exec) {
  const std::size_t n = m.size();
  Workspace w{n, std::vector<Rational>(n * n)};
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw RangeError("congruence_inertia: matrix is not square");
    for (std::size_t c = 0; c < n; ++c) w.at(r, c) = std::move(m[r][c]);
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      if (w.at(r, c) != w.at(c, r)) throw RangeError("congruence_inertia: matrix is not symmetric");
    }
  }

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  std::vector<std::size_t> count(n);
  Inertia result;
  while (!active.empty()) {
    count.assign(active.size(), 0);
    for (std::size_t p = 0; p < active.size(); ++p) {
      for (std::size_t c : active) count[p] += sgn(w.at(active[p], c)) != 0;
    }
    const Pivot pv = choose_pivot(w, active, count);
    if (pv.cost == static_cast<std::size_t>(-1)) break;  // the rest is the zero form
    if (pv.i == pv.j) {
      (sgn(w.at(pv.i, pv.i)) > 0 ? result.positive : result.negative) += 1;
    } else {
      // One zero diagonal entry makes the determinant negative.
      result.positive += 1;
      result.negative += 1;
    }
    std::erase(active, pv.i);
    if (pv.j != pv.i) std::erase(active, pv.j);
    std::vector<std::size_t> support;
    for (std::size_t r : active) {
      if (sgn(w.at(r, pv.i)) != 0 || sgn(w.at(r, pv.j)) != 0) support.push_back(r);
    }
    schur_update(w, support, pv, exec);
  }
  return result;
}

std::vector<std::array<double, 2>> sample_circle(std::span<const Polynomial> fs, double eps, std::size_t samples,
                                                 Execution exec, double phase) {
  if (fs.empty() || fs.size() > 2) throw RangeError("sample_circle: expects one or two functions");
  struct DTerm {
    unsigned a, b;
    double c;
  };
  std::vector<std::vector<DTerm>> compiled;
  for (const auto& f : fs) {
    if (f.nvars() != 2) throw DimensionError("sample_circle: functions must live in two variables");
    std::vector<DTerm> terms;
    for (const auto& t : f.terms()) terms.push_back({t.exponent[0], t.exponent[1], t.coefficient.get_d()});
    compiled.push_back(std::move(terms));
  }
  std::vector<std::array<double, 2>> out(samples);
  const long count = static_cast<long>(samples);
  auto eval = [&](long s) {
    const double theta = 2.0 * std::numbers::pi * (static_cast<double>(s) + phase) / static_cast<double>(samples);
    const double x = eps * std::cos(theta), y = eps * std::sin(theta);
    std::array<double, 2> v{0.0, 0.0};
    for (std::size_t k = 0; k < compiled.size(); ++k) {
      double acc = 0.0;
      for (const auto& t : compiled[k]) acc += t.c * std::pow(x, t.a) * std::pow(y, t.b);
      v[k] = acc;
    }
    out[s] = v;
  };
  if (exec == Execution::serial) {
    for (long s = 0; s < count; ++s) eval(s);
  } else {
#pragma omp parallel for schedule(static)
    for (long s = 0; s < count; ++s) eval(s);
  }
  return out;
}

}  // namespace branchcount
