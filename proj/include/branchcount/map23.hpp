#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "branchcount/branches.hpp"
#include "branchcount/polynomial.hpp"
#include "branchcount/staircase.hpp"

namespace branchcount {

/// u = (u1, u2, u3) : (R^2, 0) -> (R^3, 0), polynomials in (x1, x2).
struct MapGerm23 {
  std::array<Polynomial, 3> u;

  /// Throws DimensionError unless each u_i lives in 2 variables and
  /// RangeError unless u(0) = 0.
  void validate() const;
};

/// Ring (x1, x2, y1, y2) with w_i = u_i(x) - u_i(y) = c_i1 (x1 - y1) + c_i2 (x2 - y2)
/// and W_ij = c_i1 c_j2 - c_i2 c_j1.
struct DoubledSystem {
  std::array<std::array<Polynomial, 2>, 3> c;
  std::array<Polynomial, 3> w;
  std::array<Polynomial, 3> W;  // W12, W13, W23

  /// f = (w1, w2, w3, W12, W13, W23).
  std::vector<Polynomial> f() const;
};

/// c_i1 = (u_i(x1, x2) - u_i(y1, x2)) / (x1 - y1),
/// c_i2 = (u_i(y1, x2) - u_i(y1, y2)) / (x2 - y2).
DoubledSystem divided_differences(const MapGerm23& u);

/// S1..S15 in the ring (x1, x2, y1, y2, z1, z2): the w's on (x, y) and (y, z),
/// then the W's on (x, y), (y, z) and (x, z).
std::vector<Polynomial> triple_system(const DoubledSystem& ds);

struct FinitenessCertificate {
  bool passed = false;
  Diagram diagram;
  Dimension colength = Dimension::infinite();
};

/// The 2x2 minors of Du have an isolated zero. Throws
/// CertificateError("isolated_critical_point") otherwise.
FinitenessCertificate check_isolated_critical_point(const MapGerm23& u);

/// <f1..f6> plus the 3x3 minors of Dw has finite colength. A failure is
/// reported, not thrown.
FinitenessCertificate check_transverse(const DoubledSystem& ds);

/// <S1..S15> has finite colength, so u has no triple points. A failure only
/// means u may have triple points.
FinitenessCertificate check_no_triple(const DoubledSystem& ds);

struct DoublePointReport {
  FinitenessCertificate critical_point, transverse, no_triple;
  BranchReport branches;  // on V = V(f) in 4 variables
  long b0 = 0;
  /// exact: D^2(u) has b0/2 half-branches. upper_bound: u may have triple
  /// points, so at most b0/2. withheld: transversality is not certified.
  enum class D2Status { exact, upper_bound, withheld };
  D2Status d2_status = D2Status::withheld;
  long d2_count = 0;
  /// "3", "at most 3" or "withheld".
  std::string d2_text() const;
};

/// Half-branches of the double point curve D^2(u).
DoublePointReport count_double_point_branches(const MapGerm23& u, const GenericityConfig& cfg = {});

}  // namespace branchcount
