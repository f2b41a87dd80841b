#include "branchcount/job.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "branchcount/branches.hpp"
#include "branchcount/error.hpp"
#include "branchcount/local_algebra.hpp"
#include "branchcount/map23.hpp"
#include "branchcount/oracle.hpp"
#include "branchcount/staircase.hpp"

namespace branchcount {

namespace {

using json = nlohmann::json;

constexpr std::array kCommands{"staircase", "dim", "degree", "branches", "map23", "oracle"};

json exponents(std::vector<ExponentVector> es) {
  std::sort(es.begin(), es.end(), LocalOrder{});
  json out = json::array();
  for (const auto& e : es) out.push_back(e.entries());
  return out;
}

json dimension(const Dimension& d) { return d.is_finite() ? json(d.value()) : json("infinite"); }

json polys(const std::vector<Polynomial>& fs, const Ring& ring) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(format_polynomial(f, ring));
  return out;
}

json rationals(const std::vector<Rational>& qs) {
  json out = json::array();
  for (const auto& q : qs) out.push_back(rational_to_string(q));
  return out;
}

json basis_json(const StandardBasis& sb, const Ring& ring) {
  json out{{"diagram", exponents(sb.diagram().generators())},
           {"colength", dimension(colength(sb.diagram()))},
           {"generators", polys(sb.generators(), ring)}};
  out["truncation_degree"] = sb.truncation_degree() ? json(*sb.truncation_degree()) : json(nullptr);
  return out;
}

Rational parse_rational(const std::string& text) {
  const Polynomial p = parse_polynomial(text, Ring{"t"});
  for (const auto& t : p.terms()) {
    if (!t.exponent.is_zero()) throw ParseError("combination entry '" + text + "' is not a rational number", 0);
  }
  return p.constant_term();
}

GenericityConfig genericity(const Job& job) {
  GenericityConfig cfg;
  cfg.seed = job.seed;
  cfg.bound = job.bound;
  cfg.retries = job.retries;
  cfg.k = job.k;
  if (job.a) {
    std::vector<std::vector<Rational>> a;
    for (const auto& row : *job.a) {
      a.emplace_back();
      for (const auto& s : row) a.back().push_back(parse_rational(s));
    }
    cfg.a = std::move(a);
  }
  if (job.b) {
    std::vector<Rational> b;
    for (const auto& s : *job.b) b.push_back(parse_rational(s));
    cfg.b = std::move(b);
  }
  return cfg;
}

json branch_json(const BranchReport& r, const Ring& ring) {
  json out{{"path", to_string(r.path)},
           {"b0", r.b0},
           {"deg_plus", r.deg_plus},
           {"deg_minus", r.deg_minus},
           {"rank_at_origin", r.rank_at_origin},
           {"seed", r.seed}};
  if (r.path == BranchReport::Path::analytic) return out;
  out["xi"] = r.xi;
  out["k"] = r.k;
  out["omega"] = r.omega;
  out["dim_plus"] = r.dim_plus;
  out["dim_minus"] = r.dim_minus;
  out["jacobian_isolated"] = r.jacobian_isolated;
  if (r.curve_dim) {
    out["curve_dim"] = {{"linear_form", format_polynomial(r.curve_dim->linear_form, ring)},
                        {"diagram", exponents(r.curve_dim->diagram.generators())},
                        {"colength", r.curve_dim->colength}};
  }
  if (r.singularity) {
    out["isolated_singularity"] = {{"diagram", exponents(r.singularity->diagram.generators())},
                                   {"colength", r.singularity->colength}};
  }
  if (r.reduction) {
    const auto& red = *r.reduction;
    json a = json::array();
    for (const auto& row : red.a) a.push_back(rationals(row));
    out["reduction"] = {{"g", polys(red.g, ring)},
                        {"h", format_polynomial(red.h, ring)},
                        {"a", a},
                        {"b", rationals(red.b)},
                        {"user_supplied", red.user_supplied},
                        {"draws", red.attempts},
                        {"final_bound", red.final_bound},
                        {"g_singularity",
                         {{"diagram", exponents(red.g_singularity.diagram.generators())},
                          {"colength", red.g_singularity.colength}}},
                        {"J", exponents(red.J.diagram().generators())},
                        {"J1", exponents(red.J1.diagram().generators())},
                        {"J2", exponents(red.J2.diagram().generators())},
                        {"dim_J_over_J1", red.dim_J_over_J1}};
  }
  if (r.xi_data) {
    out["N_J1_minus_N_J2"] = exponents(r.xi_data->difference);
    out["new_corners"] = exponents(r.xi_data->new_corners);
  }
  return out;
}

json certificate_json(const FinitenessCertificate& c) {
  return {{"passed", c.passed}, {"diagram", exponents(c.diagram.generators())}, {"colength", dimension(c.colength)}};
}

std::string d2_status_name(DoublePointReport::D2Status s) {
  switch (s) {
    case DoublePointReport::D2Status::exact: return "exact";
    case DoublePointReport::D2Status::upper_bound: return "upper_bound";
    case DoublePointReport::D2Status::withheld: return "withheld";
  }
  return "?";
}

// Fills `out` and returns the human summary.
std::string dispatch(const Job& job, const std::vector<Polynomial>& gens, json& out) {
  const std::size_t n = job.ring.size();
  std::ostringstream text;
  if (job.command == "staircase") {
    const auto sb = standard_basis(n, gens);
    out["result"] = basis_json(sb, job.ring);
    text << "diagram " << sb.diagram().to_string() << "\ncolength " << colength(sb.diagram()).to_string() << '\n';
  } else if (job.command == "dim") {
    const GenericityConfig cfg = genericity(job);
    const auto dc = check_curve_dim(gens, cfg);
    out["result"] = {{"linear_form", format_polynomial(dc.linear_form, job.ring)},
                     {"diagram", exponents(dc.diagram.generators())},
                     {"colength", dc.colength},
                     {"dim_at_most_one", true}};
    text << "dim V <= 1: <f, " << format_polynomial(dc.linear_form, job.ring) << "> has colength " << dc.colength
         << '\n';
  } else if (job.command == "degree") {
    if (gens.size() != n) throw RangeError("degree needs as many generators as variables");
    const LocalAlgebra alg(gens);
    const auto admissible = admissible_functionals(alg);
    if (admissible.empty()) throw CertificateError("el_degree", "the Jacobian determinant vanishes in the local algebra");
    const long deg = el_degree(alg, admissible.back());
    out["result"] = {{"degree", deg},
                     {"local_algebra_dim", alg.dim()},
                     {"diagram", exponents(alg.ideal().diagram().generators())},
                     {"functional", alg.basis()[admissible.back()].entries()}};
    text << "local algebra dim " << alg.dim() << "\ndegree " << deg << '\n';
  } else if (job.command == "branches") {
    const auto rep = count_branches(gens, genericity(job));
    out["result"] = branch_json(rep, job.ring);
    text << "path " << to_string(rep.path) << "\ndeg+ " << rep.deg_plus << "\ndeg- " << rep.deg_minus << "\nb0 "
         << rep.b0 << '\n';
  } else if (job.command == "map23") {
    if (n != 2 || gens.size() != 3) throw RangeError("map23 needs three generators in two variables");
    const MapGerm23 u{{gens[0], gens[1], gens[2]}};
    const auto ds = divided_differences(u);
    const auto rep = count_double_point_branches(u, genericity(job));
    const Ring doubled{"x1", "x2", "y1", "y2"};
    json c = json::array(), w = json::array(), W = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      c.push_back({format_polynomial(ds.c[i][0], doubled), format_polynomial(ds.c[i][1], doubled)});
      w.push_back(format_polynomial(ds.w[i], doubled));
      W.push_back(format_polynomial(ds.W[i], doubled));
    }
    out["result"] = {{"doubled_ring", doubled},
                     {"c", c},
                     {"w", w},
                     {"W", W},
                     {"critical_point", certificate_json(rep.critical_point)},
                     {"transverse", certificate_json(rep.transverse)},
                     {"no_triple", certificate_json(rep.no_triple)},
                     {"branches", branch_json(rep.branches, doubled)},
                     {"b0", rep.b0},
                     {"d2_count", rep.d2_count},
                     {"d2_status", d2_status_name(rep.d2_status)},
                     {"d2_text", rep.d2_text()}};
    text << "deg+ " << rep.branches.deg_plus << "\ndeg- " << rep.branches.deg_minus << "\nb0 " << rep.b0
         << "\ntransverse " << (rep.transverse.passed ? "pass" : "fail") << "\nno triple points "
         << (rep.no_triple.passed ? "pass" : "fail") << "\nD2 half-branches " << rep.d2_text() << '\n';
  } else if (job.command == "oracle") {
    if (n != 2 || gens.empty() || gens.size() > 2) throw RangeError("oracle needs one or two generators in two variables");
    if (gens.size() == 2) {
      const long d = winding_degree(gens);
      out["result"] = {{"winding_degree", d}};
      text << "winding degree " << d << '\n';
    } else {
      const long c = circle_half_branches(gens[0]);
      out["result"] = {{"circle_half_branches", c}};
      text << "sign changes " << c << '\n';
    }
  }
  return text.str();
}

}  // namespace

bool known_command(std::string_view command) {
  return std::find(kCommands.begin(), kCommands.end(), command) != kCommands.end();
}

Job load_job(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("job: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("job: expected a JSON object", 0);
  Job job;
  auto fail = [](const std::string& what) -> ParseError { return ParseError("job: " + what, 0); };
  auto rational_text = [&](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw fail("combination entries must be integers or rational strings");
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "command") {
        job.command = v.get<std::string>();
      } else if (key == "ring") {
        if (v.is_string()) {
          job.ring = parse_ring(v.get<std::string>());
        } else {
          std::string joined;
          for (const auto& name : v) joined += (joined.empty() ? "" : ",") + name.get<std::string>();
          job.ring = parse_ring(joined);
        }
      } else if (key == "generators") {
        job.generators = v.get<std::vector<std::string>>();
      } else if (key == "seed") {
        job.seed = v.get<std::uint64_t>();
      } else if (key == "bound") {
        job.bound = v.get<long>();
      } else if (key == "retries") {
        job.retries = v.get<unsigned>();
      } else if (key == "k") {
        job.k = v.get<unsigned>();
      } else if (key == "a") {
        std::vector<std::vector<std::string>> a;
        for (const auto& row : v) {
          a.emplace_back();
          for (const auto& x : row) a.back().push_back(rational_text(x));
        }
        job.a = std::move(a);
      } else if (key == "b") {
        std::vector<std::string> b;
        for (const auto& x : v) b.push_back(rational_text(x));
        job.b = std::move(b);
      } else {
        throw fail("unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw fail(e.what());
  }
  if (job.ring.empty()) throw fail("missing ring");
  if (job.generators.empty()) throw fail("missing generators");
  return job;
}

JobOutcome run_job(const Job& job) {
  JobOutcome res;
  json out{{"command", job.command},
           {"ring", job.ring},
           {"seed", job.seed},
           {"bound", job.bound},
           {"retries", job.retries}};
  auto record = [&](int code, const std::string& stage, const std::string& message, const std::string& text) {
    res.exit_code = code;
    out["error"] = {{"stage", stage}, {"message", message}};
    res.text = text;
  };
  std::vector<Polynomial> gens;
  std::size_t current = 0;
  try {
    if (!known_command(job.command)) throw ParseError("unknown command '" + job.command + "'", 0);
    for (; current < job.generators.size(); ++current) gens.push_back(parse_polynomial(job.generators[current], job.ring));
    current = job.generators.size();
    out["generators"] = polys(gens, job.ring);
    res.text = dispatch(job, gens, out);
  } catch (const ParseError& e) {
    const std::string text = current < job.generators.size()
                                 ? caret_diagnostic(job.generators[current], e.position(), e.what())
                                 : std::string(e.what());
    record(exit_code::parse, "parse", e.what(), text + '\n');
  } catch (const CertificateError& e) {
    record(exit_code::certificate, e.stage(), e.what(), std::string(e.what()) + '\n');
  } catch (const GenericityError& e) {
    record(exit_code::genericity, "genericity", e.what(), std::string(e.what()) + '\n');
  } catch (const InternalError& e) {
    record(exit_code::internal, "internal", e.what(), std::string(e.what()) + '\n');
  } catch (const OracleInconclusive& e) {
    record(exit_code::certificate, "oracle", e.what(), std::string(e.what()) + '\n');
  } catch (const Error& e) {
    record(exit_code::certificate, "precondition", e.what(), std::string(e.what()) + '\n');
  }
  out["exit_code"] = res.exit_code;
  res.report = out.dump(2) + '\n';
  return res;
}

}  // namespace branchcount
