#include "branchcount/local_algebra.hpp"

#include <algorithm>

#include "branchcount/error.hpp"

namespace branchcount {

namespace {

// Basis exponents are closed under division, so every e_i != 1 is x_var times
// an earlier basis element.
struct Predecessor {
  std::size_t index;
  std::size_t var;
};

std::vector<Predecessor> predecessors(const LocalAlgebra& a) {
  std::vector<Predecessor> out(a.dim(), {0, 0});
  for (std::size_t i = 1; i < a.dim(); ++i) {
    const ExponentVector& e = a.basis()[i];
    std::size_t var = 0;
    while (e[var] == 0) ++var;
    auto prev = a.index_of(e - ExponentVector::unit(a.nvars(), var));
    if (!prev) throw InternalError("monomial basis is not closed under division");
    out[i] = {*prev, var};
  }
  return out;
}

}  // namespace

LocalAlgebra::LocalAlgebra(std::vector<Polynomial> components, Execution exec)
    : components_(std::move(components)) {
  if (components_.empty()) throw RangeError("local algebra needs at least one component");
  n_ = components_.front().nvars();
  for (const auto& f : components_) {
    if (f.nvars() != n_) throw DimensionError("local algebra components live in different rings");
  }
  sb_ = standard_basis(n_, components_);
  if (!colength(sb_.diagram()).is_finite()) {
    throw InfiniteColengthError("the origin is not an isolated zero: colength is infinite");
  }
  if (!sb_.truncation_degree()) throw InternalError("finite colength without a truncation degree");
  bound_ = *sb_.truncation_degree();
  basis_ = basis_under_staircase(sb_.diagram());

  // x_var * e_i for every variable and basis element; products that leave
  // the basis go through one batch of normal forms.
  mult_.assign(n_, std::vector<SparseVector>(basis_.size()));
  std::vector<Polynomial> pending;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t v = 0; v < n_; ++v) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      ExponentVector e = basis_[i] + ExponentVector::unit(n_, v);
      if (auto j = index_of(e)) {
        mult_[v][i].push_back({*j, Rational(1)});
      } else {
        pending.push_back(Polynomial::monomial(e));
        slots.push_back({v, i});
      }
    }
  }
  auto forms = batch_normal_forms(pending, sb_, exec);
  for (std::size_t s = 0; s < forms.size(); ++s) {
    SparseVector& out = mult_[slots[s].first][slots[s].second];
    for (const auto& t : forms[s].terms()) {
      auto j = index_of(t.exponent);
      if (!j) throw InternalError("normal form left the monomial basis");
      out.push_back({*j, t.coefficient});
    }
  }
}

std::optional<std::size_t> LocalAlgebra::index_of(const ExponentVector& e) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), e, LocalOrder{});
  if (it == basis_.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

std::vector<Rational> LocalAlgebra::normal_form(const Polynomial& f) const {
  if (f.nvars() != n_) throw DimensionError("normal_form: polynomial lives in a different ring");
  std::vector<Rational> c(basis_.size());
  if (basis_.empty()) return c;
  const Polynomial r = truncated_normal_form(f, sb_);
  for (const auto& t : r.terms()) {
    auto j = index_of(t.exponent);
    if (!j) throw InternalError("normal form left the monomial basis");
    c[*j] = t.coefficient;
  }
  return c;
}

Polynomial LocalAlgebra::from_coordinates(std::span<const Rational> c) const {
  if (c.size() != basis_.size()) throw RangeError("coordinate vector has the wrong length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) terms.push_back({basis_[i], c[i]});
  }
  return Polynomial::from_terms(n_, std::move(terms));
}

std::vector<Rational> LocalAlgebra::apply_variable(std::size_t var, std::span<const Rational> v) const {
  std::vector<Rational> out(basis_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (const auto& [j, c] : mult_[var][i]) out[j] += c * v[i];
  }
  return out;
}

std::vector<Rational> LocalAlgebra::multiply(std::span<const Rational> a, std::span<const Rational> b) const {
  if (a.size() != dim() || b.size() != dim()) throw RangeError("multiply: coordinate vectors have the wrong length");
  const auto pred = predecessors(*this);
  std::vector<std::vector<Rational>> eb(dim());  // e_i * b
  std::vector<Rational> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    eb[i] = i == 0 ? std::vector<Rational>(b.begin(), b.end()) : apply_variable(pred[i].var, eb[pred[i].index]);
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) out[j] += a[i] * eb[i][j];
  }
  return out;
}

BilinearForm el_form(const LocalAlgebra& a, std::size_t index, int sign, Execution) {
  const std::size_t d = a.dim();
  if (index >= d) throw RangeError("el_form: functional index out of range");
  // psi_i = phi(e_i * .), built along the predecessor chain:
  // psi_i(e_j) = psi_prev(x_var * e_j).
  const auto pred = predecessors(a);
  BilinearForm form;
  form.functional_index = index;
  form.functional_sign = sign >= 0 ? 1 : -1;
  form.matrix.assign(d, std::vector<Rational>(d));
  form.matrix[0][index] = form.functional_sign;
  for (std::size_t i = 1; i < d; ++i) {
    const auto& prev = form.matrix[pred[i].index];
    auto& row = form.matrix[i];
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : a.times_variable(pred[i].var, j)) {
        if (sgn(prev[k]) != 0) row[j] += c * prev[k];
      }
    }
  }
  return form;
}

Inertia signature(const BilinearForm& form, Execution exec) { return congruence_inertia(form.matrix, exec); }

std::vector<std::size_t> admissible_functionals(const LocalAlgebra& a) {
  auto jac = a.normal_form(determinant(jacobian(a.components())));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < jac.size(); ++i) {
    if (sgn(jac[i]) != 0) out.push_back(i);
  }
  return out;
}

long el_degree(const LocalAlgebra& a, std::optional<std::size_t> functional_index, Execution exec) {
  if (a.components().size() != a.nvars()) throw RangeError("el_degree needs n components in n variables");
  if (a.dim() == 0) return 0;  // F(0) != 0
  auto jac = a.normal_form(determinant(jacobian(a.components())));
  std::size_t index = 0;
  if (functional_index) {
    index = *functional_index;
    if (index >= jac.size() || sgn(jac[index]) == 0) {
      throw RangeError("el_degree: the Jacobian class has no component at the requested functional");
    }
  } else {
    std::size_t found = jac.size();
    for (std::size_t i = jac.size(); i-- > 0;) {
      if (sgn(jac[i]) != 0) {
        found = i;
        break;
      }
    }
    if (found == jac.size()) {
      throw CertificateError("el_degree", "the Jacobian determinant vanishes in the local algebra");
    }
    index = found;
  }
  BilinearForm form = el_form(a, index, sgn(jac[index]), exec);
  Inertia in = signature(form, exec);
  if (in.rank() != a.dim()) throw InternalError("Eisenbud-Levine form is degenerate");
  return in.signature();
}

long el_degree(std::span<const Polynomial> components) {
  if (components.empty() || components.size() != components.front().nvars()) {
    throw RangeError("el_degree needs n components in n variables");
  }
  return el_degree(LocalAlgebra(std::vector<Polynomial>(components.begin(), components.end())));
}

}  // namespace branchcount
