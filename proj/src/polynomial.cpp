#include "branchcount/polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "branchcount/error.hpp"

namespace branchcount {

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_unchecked(a.exponent, b.exponent) < 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coefficient;
    sum.canonicalize();
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) {
      sum += terms[j].coefficient;
      ++j;
    }
    if (sum != 0) {
      terms[out].exponent = terms[i].exponent;
      terms[out].coefficient = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponent.size() != nvars) throw DimensionError("term exponent length does not match ring");
  }
  Polynomial p(nvars);
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({ExponentVector(nvars), c});
  if (!p.terms_.empty()) p.terms_.front().coefficient.canonicalize();
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  Polynomial p(nvars);
  p.terms_.push_back({ExponentVector::unit(nvars, var), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.size());
  if (c != 0) p.terms_.push_back({e, c});
  if (!p.terms_.empty()) p.terms_.front().coefficient.canonicalize();
  return p;
}

const ExponentVector& Polynomial::initial_exponent() const {
  if (terms_.empty()) throw UndefinedInitialError();
  return terms_.front().exponent;
}

const Term& Polynomial::initial_term() const {
  if (terms_.empty()) throw UndefinedInitialError();
  return terms_.front();
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVector& x) {
    return compare_unchecked(t.exponent, x) < 0;
  });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().exponent.is_zero()) return terms_.front().coefficient;
  return 0;
}

unsigned Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.back().exponent.degree();
}

unsigned Polynomial::order() const { return initial_exponent().degree(); }

void Polynomial::check_ring(const Polynomial& other) const {
  if (n_ != other.n_) {
    throw DimensionError("polynomials live in rings with " + std::to_string(n_) + " and " +
                         std::to_string(other.n_) + " variables");
  }
}

std::vector<Term> Polynomial::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].exponent, subtract ? Rational(-b[j].coefficient) : b[j].coefficient});
      ++j;
      continue;
    }
    auto c = compare_unchecked(a[i].exponent, b[j].exponent);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back({b[j].exponent, subtract ? Rational(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back({a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  // A quotient built from two integers is not reduced by GMP on its own.
  Rational q = c;
  q.canonicalize();
  for (auto& t : terms_) t.coefficient *= q;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.n_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back({s.exponent + t.exponent, s.coefficient * t.coefficient});
    }
  }
  canonicalize(prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial Polynomial::times_monomial(const ExponentVector& e, const Rational& c) const {
  if (e.size() != n_) throw DimensionError("monomial length does not match ring");
  Polynomial r(n_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // The local order is compatible with addition, so sortedness is preserved.
  for (const auto& t : terms_) r.terms_.push_back({t.exponent + e, t.coefficient * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= n_) throw DimensionError("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned p = t.exponent[var];
    if (p == 0) continue;
    ExponentVector e = t.exponent;
    e.set(var, p - 1);
    out.push_back({e, t.coefficient * p});
  }
  return from_terms(n_, std::move(out));
}

Polynomial Polynomial::truncated(unsigned bound) const {
  Polynomial r(n_);
  for (const auto& t : terms_) {
    if (t.exponent.degree() >= bound) break;
    r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::embed(std::size_t target_nvars, std::span<const std::size_t> map) const {
  if (map.size() != n_) throw DimensionError("embedding map must cover every variable");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExponentVector e(target_nvars);
    for (std::size_t i = 0; i < n_; ++i) {
      if (map[i] >= target_nvars) throw DimensionError("embedding target out of range");
      e.set(map[i], e[map[i]] + t.exponent[i]);
    }
    out.push_back({e, t.coefficient});
  }
  return from_terms(target_nvars, std::move(out));
}

Polynomial Polynomial::compose(std::span<const Polynomial> values) const {
  if (values.size() != n_) throw DimensionError("composition needs one value per variable");
  if (values.empty()) return *this;
  const std::size_t m = values.front().nvars();
  std::vector<std::vector<Polynomial>> powers(n_);
  Polynomial result(m);
  for (const auto& t : terms_) {
    Polynomial term = constant(m, t.coefficient);
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned p = t.exponent[i];
      if (p == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(m, 1));
      while (cache.size() <= p) cache.push_back(cache.back() * values[i]);
      term = term * cache[p];
    }
    result += term;
  }
  return result;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != n_) throw DimensionError("evaluation point has wrong dimension");
  double sum = 0;
  for (const auto& t : terms_) {
    double v = t.coefficient.get_d();
    for (std::size_t i = 0; i < n_; ++i) {
      for (unsigned k = 0; k < t.exponent[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].exponent == b.terms_[i].exponent) || a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

Initial initial(const Polynomial& f) {
  const Term& t = f.initial_term();
  return {t.exponent, t};
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix) {
  const std::size_t k = matrix.size();
  if (k == 0) throw RangeError("determinant of an empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != k) throw RangeError("determinant needs a square matrix");
  }
  const std::size_t n = matrix[0][0].nvars();
  if (k > 20) throw RangeError("determinant too large");
  // det restricted to rows r..k-1 and the columns not in `used`.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::size_t r, std::uint32_t used) -> Polynomial {
    if (r == k) return Polynomial::constant(n, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Polynomial sum(n);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (used & (1u << c)) continue;
      const Polynomial& entry = matrix[r][c];
      if (!entry.is_zero()) {
        Polynomial minor = self(self, r + 1, used | (1u << c));
        if (!minor.is_zero()) {
          if (sign > 0) {
            sum += entry * minor;
          } else {
            sum -= entry * minor;
          }
        }
      }
      sign = -sign;
    }
    memo.emplace(used, sum);
    return sum;
  };
  return rec(rec, 0, 0);
}

std::vector<std::vector<Polynomial>> jacobian(std::span<const Polynomial> fs) {
  std::vector<std::vector<Polynomial>> jac;
  jac.reserve(fs.size());
  for (const auto& f : fs) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < f.nvars(); ++i) row.push_back(f.derivative(i));
    jac.push_back(std::move(row));
  }
  return jac;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> jacobian_minors(std::span<const Polynomial> fs, std::size_t k) {
  if (fs.empty()) throw RangeError("jacobian_minors needs at least one function");
  const std::size_t n = fs.front().nvars();
  for (const auto& f : fs) {
    if (f.nvars() != n) throw DimensionError("jacobian_minors: functions live in different rings");
  }
  if (k == 0 || k > std::min(fs.size(), n)) {
    throw RangeError("minor size " + std::to_string(k) + " out of range");
  }
  auto jac = jacobian(fs);
  std::vector<std::vector<std::size_t>> rows, cols;
  subsets(fs.size(), k, rows);
  subsets(n, k, cols);
  std::vector<Polynomial> minors;
  minors.reserve(rows.size() * cols.size());
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      std::vector<std::vector<Polynomial>> sub(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i].push_back(jac[r[i]][c[j]]);
      }
      minors.push_back(determinant(sub));
    }
  }
  return minors;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank_at_origin(std::span<const Polynomial> fs) {
  if (fs.empty()) return 0;
  const std::size_t n = fs.front().nvars();
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : fs) {
    if (f.nvars() != n) throw DimensionError("rank_at_origin: functions live in different rings");
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = f.coefficient(ExponentVector::unit(n, i));
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace branchcount
