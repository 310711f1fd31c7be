#pragma once

#include <utility>
#include <vector>

#include "japprox/green.hpp"
#include "japprox/nodes.hpp"
#include "japprox/poly.hpp"

namespace japprox {

/// Magnitude in the log domain with the unit phase kept alongside, so
/// products over hundreds of factors neither overflow nor lose the sign.
struct LogMagnitude {
  double log_abs = 0.0;
  Complex phase = Complex(1.0); // unit modulus; 1 when log_abs = -inf

  Complex value() const;
  static LogMagnitude of(Complex v);
  LogMagnitude operator*(const LogMagnitude& o) const {
    return {log_abs + o.log_abs, phase * o.phase};
  }
  LogMagnitude operator/(const LogMagnitude& o) const {
    return {log_abs - o.log_abs, phase / o.phase};
  }
};

/// Nodes plus the nodal-polynomial derivative data Delta^(k) = prod_{j != k}
/// (zeta_k - zeta_j) in log form, and the index j_n of the smallest |Delta|.
struct LagrangeSystem {
  NodeArray nodes;
  std::vector<LogMagnitude> deltas;
  int j_n = 0;

  int n() const { return nodes.n(); }
};

/// w(z) = prod_k (z - zeta_k) over every point of the array.
LogMagnitude nodal_eval(const NodeArray& nodes, Complex z);

/// Build the Delta system; cross-checked against w'(zeta_k) of the expanded
/// nodal polynomial while that expansion is still well conditioned (n <= 16).
LagrangeSystem deltas(const NodeArray& nodes);

/// log V = sum_{j<k} log|zeta_j - zeta_k| = (1/2) sum_k deltas[k].log_abs;
/// both computations run and must agree.
double vandermonde_log(const NodeArray& nodes);

struct LagrangeValue {
  Complex value;
  double log_abs;
};

/// Fundamental Lagrange polynomial L^(j)(z) = prod_{k != j} (z - zeta_k) /
/// (zeta_j - zeta_k), evaluated as ratio products paired by sorted magnitude.
LagrangeValue lagrange_eval(const LagrangeSystem& sys, int j, Complex z);

/// Lebesgue function Lambda_n(z) = sum_j |L^(j)(z)|; exactly 1 at the nodes.
double lebesgue_function(const LagrangeSystem& sys, Complex z);

/// Mesh maximum of the Lebesgue function (maximum principle: the sup over the
/// set is attained on the outer boundary, so a boundary mesh suffices).
double lebesgue_constant(const LagrangeSystem& sys, const BoundaryMesh& mesh);

struct LebesgueReport {
  double value;   // max over the m-point boundary mesh
  double refined; // max over the 2m-point mesh
};

/// Lebesgue constant with a self-consistency estimate on a twice-finer mesh.
LebesgueReport lebesgue_constant_refined(const LagrangeSystem& sys,
                                         const PlanarSet& set, int m);

/// (Lambda_n(E)^(1/n), min_k |Delta_k|^(1/n) / cap): the two equivalent
/// convergence diagnostics; both tend to 1 for good node families.
std::pair<double, double> main_theorem_diagnostic(const LagrangeSystem& sys,
                                                  const BoundaryMesh& mesh,
                                                  double cap);

/// (max_k |Delta_k|)^(1/n) / cap; always >= the min-based diagnostic.
double max_delta_diagnostic(const LagrangeSystem& sys, double cap);

struct NormLn {
  double value; // mesh sup of |L^(j_n)|
  double root;  // value^(1/n)
};

NormLn norm_Ln(const LagrangeSystem& sys, const BoundaryMesh& mesh);

struct BoundsReport {
  double value;  // g(z) - (1/n) log|L^(j_n)(z)|
  double lower;  // (1/n) log(1 / ||L_n||_mesh)
  double upper;  // (3/n) log[(n+1) Theta(E)] + omega(1/n^2)
  bool fekete;   // Fekete provenance: value >= 0 additionally required
  bool ok;
};

/// Two-sided bracket on the Green function in terms of the selected
/// fundamental polynomial, valid on D_n = {dist(z, set) >= 1/n^2}.
BoundsReport bounds_check(const LagrangeSystem& sys, const GreenModel& green,
                          const HolderData& holder, const PlanarSet& set,
                          const BoundaryMesh& mesh, Complex z);

/// Diagnostic row used by the CSV export.
struct LebesgueDiagnostic {
  int n;
  double lebesgue_const;
  double lebesgue_root;
  double min_delta_root_over_cap;
  double max_delta_root_over_cap;
  double norm_Ln_root;
};

LebesgueDiagnostic lebesgue_diagnostic(const LagrangeSystem& sys,
                                       const BoundaryMesh& mesh, double cap);

} // namespace japprox
