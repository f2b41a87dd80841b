#include "mora.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "branchcount/error.hpp"
#include "branchcount/staircase.hpp"

namespace branchcount::detail {

mpz_class IPoly::make_primitive() {
  if (terms.empty()) return 1;
  mpz_class g = 0;
  for (const auto& t : terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (terms.front().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

void IPoly::truncate(unsigned bound) {
  auto it = std::find_if(terms.begin(), terms.end(), [bound](const ITerm& t) { return t.e.degree() >= bound; });
  terms.erase(it, terms.end());
}

IPoly to_ipoly(const Polynomial& p) {
  Rational unused;
  return to_ipoly(p, unused);
}

IPoly to_ipoly(const Polynomial& p, Rational& scale) {
  mpz_class den = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  IPoly r;
  r.terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class c = den / t.coefficient.get_den();
    c *= t.coefficient.get_num();
    r.terms.push_back({t.exponent, std::move(c)});
  }
  mpz_class g = r.make_primitive();
  scale = Rational(g, den);
  scale.canonicalize();
  return r;
}

Polynomial to_polynomial(std::size_t nvars, const IPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.terms.size());
  for (const auto& t : p.terms) terms.push_back({t.e, Rational(t.c)});
  return Polynomial::from_terms(nvars, std::move(terms));
}

mpz_class reduce_at(IPoly& h, std::size_t pos, const IPoly& g, unsigned bound) {
  const ExponentVector shift = h.terms[pos].e - g.lm();
  mpz_class a = h.terms[pos].c;
  mpz_class b = g.terms.front().c;
  mpz_class d;
  mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (d != 1) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
  }
  const bool scale_h = b != 1;
  std::vector<ITerm> out;
  out.reserve(h.terms.size() + g.terms.size());
  for (std::size_t i = 0; i < pos; ++i) {
    if (scale_h) {
      out.push_back({h.terms[i].e, h.terms[i].c * b});
    } else {
      out.push_back(std::move(h.terms[i]));
    }
  }
  const unsigned limit = bound == 0 ? ~0u : bound;
  std::size_t i = pos + 1, j = 1;
  const std::size_t hs = h.terms.size(), gs = g.terms.size();
  mpz_class tmp;
  while (true) {
    const bool hi = i < hs && h.terms[i].e.degree() < limit;
    ExponentVector ge;
    bool gj = false;
    if (j < gs && g.terms[j].e.degree() + shift.degree() < limit) {
      ge = g.terms[j].e + shift;
      gj = true;
    }
    if (!hi && !gj) break;
    int c;
    if (!gj) {
      c = -1;
    } else if (!hi) {
      c = 1;
    } else {
      auto o = compare_unchecked(h.terms[i].e, ge);
      c = o < 0 ? -1 : (o > 0 ? 1 : 0);
    }
    if (c < 0) {
      if (scale_h) {
        out.push_back({h.terms[i].e, h.terms[i].c * b});
      } else {
        out.push_back(std::move(h.terms[i]));
      }
      ++i;
    } else if (c > 0) {
      out.push_back({ge, -(g.terms[j].c * a)});
      ++j;
    } else {
      tmp = h.terms[i].c * b;
      tmp -= g.terms[j].c * a;
      if (tmp != 0) out.push_back({ge, tmp});
      ++i;
      ++j;
    }
  }
  h.terms = std::move(out);
  return b;
}

IPoly spoly(const IPoly& f, const IPoly& g, unsigned bound) {
  const ExponentVector l = f.lm().lcm(g.lm());
  IPoly r;
  if (bound && l.degree() >= bound) return r;
  const ExponentVector shift = l - f.lm();
  r.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) {
    if (bound && t.e.degree() + shift.degree() >= bound) break;
    r.terms.push_back({t.e + shift, t.c});
  }
  reduce_at(r, 0, g, bound);
  return r;
}

namespace {

// Index of the reducer with minimal ecart whose initial exponent divides e.
// Ties keep the earliest.
const IPoly* find_reducer(const ExponentVector& e, std::span<const IPoly> a, std::span<const IPoly> b) {
  const IPoly* best = nullptr;
  unsigned best_ecart = 0;
  for (auto span : {a, b}) {
    for (const auto& g : span) {
      if (!g.lm().divides(e)) continue;
      unsigned ec = g.ecart();
      if (!best || ec < best_ecart) {
        best = &g;
        best_ecart = ec;
        if (ec == 0) return best;
      }
    }
  }
  return best;
}

}  // namespace

IPoly weak_normal_form(IPoly h, std::span<const IPoly> reducers, std::optional<unsigned> bound) {
  const unsigned lim = bound.value_or(0);
  if (lim) h.truncate(lim);
  std::vector<IPoly> extra;
  // The content grows slowly; stripping it every step costs more than it saves.
  unsigned steps = 0;
  while (!h.zero()) {
    const IPoly* g = find_reducer(h.lm(), reducers, extra);
    if (!g) break;
    if (!bound && g->ecart() > h.ecart()) {
      IPoly old = h;
      reduce_at(h, 0, *g, lim);
      extra.push_back(std::move(old));
    } else {
      reduce_at(h, 0, *g, lim);
    }
    if (++steps % 8 == 0) h.make_primitive();
  }
  h.make_primitive();
  return h;
}

Polynomial full_reduce_truncated(const Polynomial& f, std::span<const IPoly> reducers, unsigned bound) {
  Rational scale;
  IPoly h = to_ipoly(f, scale);
  h.truncate(bound);
  std::size_t pos = 0;
  unsigned steps = 0;
  while (pos < h.terms.size()) {
    const IPoly* g = nullptr;
    for (const auto& r : reducers) {
      if (r.lm().divides(h.terms[pos].e)) {
        g = &r;
        break;
      }
    }
    if (!g) {
      ++pos;
      continue;
    }
    mpz_class mult = reduce_at(h, pos, *g, bound);
    if (mult != 1) scale /= Rational(mult);
    if (++steps % 8 == 0) scale *= Rational(h.make_primitive());
  }
  if (h.zero()) return Polynomial(f.nvars());
  scale *= Rational(h.make_primitive());
  Polynomial r = to_polynomial(f.nvars(), h);
  return r * scale;
}

namespace {

std::vector<IPoly> minimal(std::vector<IPoly> basis) {
  std::vector<IPoly> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].lm();
      const auto& lj = basis[j].lm();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(basis[i]);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const IPoly& a, const IPoly& b) { return compare_unchecked(a.lm(), b.lm()) < 0; });
  return out;
}

struct PendingItem {
  ExponentVector lcm;
  int i;  // basis index, or input index when j < 0
  int j;
};

struct PendingOrder {
  bool operator()(const PendingItem& a, const PendingItem& b) const {
    auto c = compare_unchecked(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }
};

class Engine {
 public:
  /// `bound`: a degree D already known to satisfy m^D in the ideal.
  Engine(std::size_t n, std::optional<unsigned> bound) : n_(n), bound_(bound) {}

  EngineResult run(std::vector<IPoly> inputs) {
    for (auto& g : inputs) {
      if (g.zero()) continue;
      inputs_.push_back(std::move(g));
      const int idx = static_cast<int>(inputs_.size()) - 1;
      pending_.insert({inputs_.back().lm(), idx, -1});
    }
    while (!pending_.empty()) {
      PendingItem item = *pending_.begin();
      pending_.erase(pending_.begin());
      const unsigned lim = bound_.value_or(0);
      if (lim && item.lcm.degree() >= lim) continue;
      IPoly p;
      if (item.j < 0) {
        p = inputs_[item.i];
        if (lim) p.truncate(lim);
      } else {
        p = spoly(basis_[item.i], basis_[item.j], lim);
      }
      if (p.zero()) continue;
      p.make_primitive();
      IPoly h = weak_normal_form(std::move(p), basis_, bound_);
      if (!h.zero()) add(std::move(h));
    }
    return finish();
  }

 private:
  std::size_t n_;
  std::vector<IPoly> inputs_;
  std::vector<IPoly> basis_;
  std::set<PendingItem, PendingOrder> pending_;
  std::optional<unsigned> bound_;

  void add(IPoly h) {
    const int t = static_cast<int>(basis_.size());
    const ExponentVector lt = h.lm();
    basis_.push_back(std::move(h));
    update_pairs(t, lt);
    update_truncation(lt);
  }

  // Gebauer-Moeller installation of the pairs created by basis element t.
  void update_pairs(int t, const ExponentVector& lt) {
    struct Cand {
      ExponentVector lcm;
      int i;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (int i = 0; i < t; ++i) {
      const ExponentVector& li = basis_[i].lm();
      cand.push_back({li.lcm(lt), i, li.coprime(lt)});
    }
    // M: drop (i,t) when some (j,t) has an lcm properly dividing it.
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.alive = false;
          break;
        }
      }
    }
    // F: one pair per lcm; a whole class goes when any member is coprime.
    for (std::size_t x = 0; x < cand.size(); ++x) {
      if (!cand[x].alive) continue;
      bool any_coprime = cand[x].coprime;
      for (std::size_t y = x + 1; y < cand.size(); ++y) {
        if (cand[y].alive && cand[y].lcm == cand[x].lcm) {
          any_coprime = any_coprime || cand[y].coprime;
          cand[y].alive = false;
        }
      }
      if (any_coprime) cand[x].alive = false;
    }
    // B: old pairs whose lcm is divisible by lt without touching the new lcms.
    for (auto it = pending_.begin(); it != pending_.end();) {
      if (it->j >= 0 && lt.divides(it->lcm)) {
        const ExponentVector li = basis_[it->i].lm().lcm(lt);
        const ExponentVector lj = basis_[it->j].lm().lcm(lt);
        if (!(li == it->lcm) && !(lj == it->lcm)) {
          it = pending_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (const auto& c : cand) {
      if (c.alive) pending_.insert({c.lcm, c.i, t});
    }
  }

  // Once every variable has a pure power among the initial exponents, the
  // ideal contains m^D for D = 1 + max degree below the staircase; from then
  // on the whole computation runs modulo m^D.
  void update_truncation(const ExponentVector& lt) {
    std::vector<ExponentVector> lms;
    lms.reserve(basis_.size());
    for (const auto& b : basis_) lms.push_back(b.lm());
    Diagram d = Diagram::from_exponents(n_, std::move(lms));
    if (!d.has_finite_complement()) return;
    if (bound_ && lt.degree() >= *bound_) return;
    unsigned top = 0;
    for (const auto& e : basis_under_staircase(d)) top = std::max(top, e.degree());
    const unsigned bound = top + 1;
    if (bound_ && bound >= *bound_) return;
    bound_ = bound;
    for (auto& b : basis_) {
      if (b.lm().degree() >= bound) {
        b.terms.resize(1);
        b.terms.front().c = 1;
      } else {
        b.truncate(bound);
      }
    }
  }

  // Monomials of degree D lie in the ideal; any not yet below an initial
  // exponent join the basis so the diagram is complete.
  void complete_top_degree() {
    std::vector<ExponentVector> lms;
    for (const auto& b : basis_) lms.push_back(b.lm());
    const Diagram d = Diagram::from_exponents(n_, std::move(lms));
    ExponentVector e(n_);
    const unsigned top = *bound_;
    // Enumerate compositions of `top` into n parts.
    std::vector<unsigned> parts(n_, 0);
    parts[n_ - 1] = top;
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) e.set(v, parts[v]);
      if (!d.contains(e)) basis_.push_back(IPoly{{ITerm{e, 1}}});
      // Next composition: move one unit from the last nonzero slot left.
      std::size_t k = n_ - 1;
      while (k > 0 && parts[k] == 0) --k;
      if (k == 0) break;
      const unsigned rest = parts[k];
      parts[k] = 0;
      parts[k - 1] += 1;
      parts[n_ - 1] = rest - 1;
    }
  }

  EngineResult finish() {
    if (bound_) complete_top_degree();
    return {minimal(std::move(basis_)), bound_};
  }
};

}  // namespace

namespace {

// A homogeneous polynomial of K[t, x] stored dehomogenized together with its
// degree. Its leading monomial under the order "degree, then the local order
// on the x-part" is t^(deg - |lm|) x^lm.
struct HPoly {
  IPoly p;
  unsigned deg = 0;
  unsigned t() const { return deg - p.lm().degree(); }
};

struct HMon {
  ExponentVector x;
  unsigned t;
  unsigned degree() const { return x.degree() + t; }
  HMon lcm(const HMon& o) const { return {x.lcm(o.x), std::max(t, o.t)}; }
  bool divides(const HMon& o) const { return t <= o.t && x.divides(o.x); }
  bool coprime(const HMon& o) const { return (t == 0 || o.t == 0) && x.coprime(o.x); }
  friend bool operator==(const HMon& a, const HMon& b) { return a.t == b.t && a.x == b.x; }
};

struct HItem {
  HMon lcm;
  int i;  // basis index, or input index when j < 0
  int j;
};

struct HItemOrder {
  bool operator()(const HItem& a, const HItem& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = compare_unchecked(a.lcm.x, b.lcm.x);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }
};

// Lazard's method: a Groebner basis of the homogenized generators under a
// degree order that breaks ties by the local order dehomogenizes to a
// standard basis. Reduction never raises the degree, so there is no
// normal-form chase on ideals of positive dimension. The run stops early
// once the initial exponents found so far leave finitely many monomials
// uncovered; then m^D lies in the ideal and `bound` is set.
class Homogeneous {
 public:
  explicit Homogeneous(std::size_t n) : n_(n) {}

  struct Outcome {
    std::vector<IPoly> elements;
    std::optional<unsigned> bound;
  };

  Outcome run(const std::vector<IPoly>& inputs) {
    for (const auto& g : inputs) {
      if (g.zero()) continue;
      inputs_.push_back({g, g.max_degree()});
      const int idx = static_cast<int>(inputs_.size()) - 1;
      pending_.insert({lead(inputs_.back()), idx, -1});
    }
    unsigned current = 0;
    bool grown = false;
    while (!pending_.empty()) {
      HItem item = *pending_.begin();
      if (item.lcm.degree() > current) {
        if (grown) {
          if (auto bound = highest_corner()) return {elements(), bound};
          grown = false;
        }
        current = item.lcm.degree();
      }
      pending_.erase(pending_.begin());
      HPoly h;
      if (item.j < 0) {
        h = inputs_[item.i];
      } else {
        h.p = spoly(basis_[item.i].p, basis_[item.j].p, 0);
        h.deg = item.lcm.degree();
      }
      if (h.p.zero()) continue;
      h.p.make_primitive();
      top_reduce(h);
      if (!h.p.zero()) {
        add(std::move(h));
        grown = true;
      }
    }
    if (grown) {
      if (auto bound = highest_corner()) return {elements(), bound};
    }
    return {elements(), std::nullopt};
  }

 private:
  std::size_t n_;
  std::vector<HPoly> inputs_;
  std::vector<HPoly> basis_;
  std::set<HItem, HItemOrder> pending_;

  static HMon lead(const HPoly& h) { return {h.p.lm(), h.t()}; }

  void top_reduce(HPoly& h) const {
    unsigned steps = 0;
    while (!h.p.zero()) {
      const HMon lh = lead(h);
      const HPoly* best = nullptr;
      for (const auto& g : basis_) {
        if (!lead(g).divides(lh)) continue;
        if (!best || g.t() < best->t()) best = &g;
        if (best->t() == 0) break;
      }
      if (!best) break;
      reduce_at(h.p, 0, best->p, 0);
      if (++steps % 8 == 0) h.p.make_primitive();
    }
    h.p.make_primitive();
  }

  std::vector<IPoly> elements() const {
    std::vector<IPoly> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.push_back(b.p);
    return out;
  }

  std::optional<unsigned> highest_corner() const {
    std::vector<ExponentVector> lms;
    for (const auto& b : basis_) lms.push_back(b.p.lm());
    Diagram d = Diagram::from_exponents(n_, std::move(lms));
    if (!d.has_finite_complement()) return std::nullopt;
    unsigned top = 0;
    for (const auto& e : basis_under_staircase(d)) top = std::max(top, e.degree());
    return top + 1;
  }

  void add(HPoly h) {
    const int t = static_cast<int>(basis_.size());
    const HMon lt = lead(h);
    basis_.push_back(std::move(h));
    struct Cand {
      HMon lcm;
      int i;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (int i = 0; i < t; ++i) {
      const HMon li = lead(basis_[i]);
      cand.push_back({li.lcm(lt), i, li.coprime(lt)});
    }
    for (auto& a : cand) {
      for (const auto& b : cand) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.alive = false;
          break;
        }
      }
    }
    for (std::size_t x = 0; x < cand.size(); ++x) {
      if (!cand[x].alive) continue;
      bool any_coprime = cand[x].coprime;
      for (std::size_t y = x + 1; y < cand.size(); ++y) {
        if (cand[y].alive && cand[y].lcm == cand[x].lcm) {
          any_coprime = any_coprime || cand[y].coprime;
          cand[y].alive = false;
        }
      }
      if (any_coprime) cand[x].alive = false;
    }
    for (auto it = pending_.begin(); it != pending_.end();) {
      if (it->j >= 0 && lt.divides(it->lcm)) {
        const HMon li = lead(basis_[it->i]).lcm(lt);
        const HMon lj = lead(basis_[it->j]).lcm(lt);
        if (!(li == it->lcm) && !(lj == it->lcm)) {
          it = pending_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (const auto& c : cand) {
      if (c.alive) pending_.insert({c.lcm, c.i, t});
    }
  }
};

}  // namespace

namespace {

constexpr double kMaxTruncatedMonomials = 40000;

// Number of monomials of degree < E in n variables.
double monomials_below(std::size_t n, unsigned E) {
  double c = 1;
  for (std::size_t i = 1; i <= n; ++i) c = c * static_cast<double>(E - 1 + i) / static_cast<double>(i);
  return c;
}

}  // namespace

EngineResult compute_standard_basis(std::size_t nvars, std::span<const Polynomial> gens) {
  std::vector<IPoly> inputs;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw DimensionError("standard_basis: generator lives in a different ring");
    if (!g.is_zero()) inputs.push_back(to_ipoly(g));
  }
  // Mora modulo m^E for growing E. When the highest corner shows up below E,
  // m^D lies in <gens> + m^E with D < E, hence in <gens> by Nakayama, and
  // the truncated result is exact. Cheap when the colength is finite; the
  // homogeneous engine covers the rest.
  for (unsigned E = 8; monomials_below(nvars, E) <= kMaxTruncatedMonomials; E *= 2) {
    auto r = Engine(nvars, E).run(inputs);
    if (r.truncation && *r.truncation < E) return r;
  }
  auto h = Homogeneous(nvars).run(inputs);
  if (!h.bound) return {minimal(std::move(h.elements)), std::nullopt};
  // Finite colength: finish with Mora's algorithm modulo m^D, seeded with
  // the elements that certified the bound.
  for (auto& e : h.elements) inputs.push_back(std::move(e));
  return Engine(nvars, h.bound).run(std::move(inputs));
}

}  // namespace branchcount::detail
