#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "branchcount/kernels.hpp"
#include "branchcount/polynomial.hpp"
#include "branchcount/staircase.hpp"

namespace branchcount {

struct GenericityConfig {
  std::uint64_t seed = 0;
  long bound = 10;
  unsigned retries = 8;
  /// Explicit combinations: g_t = sum_j a[t][j] f_j, h = sum_j b[j] f_j.
  std::optional<std::vector<std::vector<Rational>>> a;
  std::optional<std::vector<Rational>> b;
  /// Explicit exponent for omega; must be even and exceed xi.
  std::optional<unsigned> k;
  Execution exec = Execution::parallel;

  void validate() const;
};

struct DimCertificate {
  Polynomial linear_form;
  Diagram diagram;
  std::size_t colength = 0;
};

struct SingularityCertificate {
  Diagram diagram;
  std::size_t colength = 0;
};

/// Finds a linear form a with <fs, a> of finite colength, which shows
/// dim V(fs) <= 1. The coordinate functions x_n, ..., x_1 are tried first,
/// then random forms. Throws CertificateError("curve_dim") on failure.
DimCertificate check_curve_dim(std::span<const Polynomial> fs, const GenericityConfig& cfg = {});

/// <fs> plus all (n-1)-minors of D(fs) must have finite colength. Throws
/// CertificateError("isolated_singularity") otherwise.
SingularityCertificate check_isolated_singularity(std::span<const Polynomial> fs);

/// Colength of <det D(h, g_1, ..., g_{n-1}), g_1, ..., g_{n-1}>. When finite,
/// V(f) has an isolated singularity for any f whose ideal contains the g's.
Dimension jacobian_isolation(std::span<const Polynomial> g, const Polynomial& h);

struct ReductionResult {
  std::vector<Polynomial> g;
  Polynomial h;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  bool user_supplied = false;
  unsigned attempts = 0;
  long final_bound = 0;
  SingularityCertificate g_singularity;  // <g> plus the (n-1)-minors of Dg
  StandardBasis J, J1, J2;               // <f>, <g, h>, <g, h^2>
  std::size_t dim_J_over_J1 = 0;
};

/// Generic combinations g_1..g_{n-1}, h of the f's. Needs rank DF(0) < n-1.
ReductionResult reduce_generic(std::span<const Polynomial> fs, const GenericityConfig& cfg = {});

struct XiData {
  unsigned xi = 1;
  std::vector<ExponentVector> difference;  // N(J1) \ N(J2)
  std::vector<ExponentVector> new_corners; // B(J1) \ N(J2)
};

XiData compute_xi(const StandardBasis& J1, const StandardBasis& J2);

struct HSystem {
  unsigned k = 0;
  Polynomial omega;
  Polynomial h_plus, h_minus;
  std::vector<Polynomial> H_plus, H_minus;
};

/// k = smallest even integer > xi unless given, omega = sum x_i^k, and
/// h_pm = det D(h +- omega, g_1, ..., g_{n-1}). An explicit k that is odd or
/// not above xi throws CertificateError("k").
HSystem build_H(std::span<const Polynomial> g, const Polynomial& h, unsigned xi,
                std::optional<unsigned> k = std::nullopt);

struct BranchReport {
  enum class Path { general, fast, analytic };
  Path path = Path::general;
  long b0 = 0;
  long deg_plus = 0;
  long deg_minus = 0;
  unsigned xi = 0;
  unsigned k = 0;
  std::string omega;
  std::uint64_t seed = 0;
  std::size_t rank_at_origin = 0;
  std::optional<DimCertificate> curve_dim;
  std::optional<SingularityCertificate> singularity;
  std::optional<ReductionResult> reduction;
  std::optional<XiData> xi_data;
  std::size_t dim_plus = 0;   // local algebra of H+ (or H1 on the fast path)
  std::size_t dim_minus = 0;
  bool jacobian_isolated = false;  // <h_pm, g> both of finite colength
};

std::string to_string(BranchReport::Path p);

/// b0 = deg(H+) - deg(H-), the number of real half-branches of V(fs) at 0.
BranchReport count_branches(std::span<const Polynomial> fs, const GenericityConfig& cfg = {});

/// b0 = 2 deg(H1) with H1 = (det D(Omega, g), g), Omega = sum x_i^2.
/// Throws CertificateError("fast_path") when the hypotheses fail.
BranchReport count_branches_fast(std::span<const Polynomial> fs, std::span<const Polynomial> g,
                                 Execution exec = Execution::parallel);

}  // namespace branchcount
