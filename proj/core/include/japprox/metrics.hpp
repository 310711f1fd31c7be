#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "japprox/dynamics.hpp"
#include "japprox/geometry.hpp"
#include "japprox/green.hpp"

namespace japprox {

struct HausdorffReport {
  double value = 0.0;
  double slack = 0.0; // discretization error bound: sum of the mesh spacings
};

/// chi(X, Y) = max(sup_{y in Y} dist(y, X), sup_{x in X} dist(x, Y)) on the
/// sampled boundaries.
HausdorffReport hausdorff(const BoundaryMesh& a, const BoundaryMesh& b);

/// Gamma(E, F) = max(||g_E||_F, ||g_F||_E), sups taken over the boundary
/// meshes (both Green functions are subharmonic off their sets, so the sup
/// over each compact is attained on its outer boundary).
double klimek(const GreenModel& green_a, const GreenModel& green_b,
              const BoundaryMesh& mesh_a, const BoundaryMesh& mesh_b);

/// chi(E, F) <= (Gamma(E, F) / B)^(1/beta) for nested E within F within the
/// set where the Lojasiewicz-Siciak bound holds.
double ls_chi_bound(const LSData& ls, double gamma);

/// Gamma(E, K(P)) measured from both directions: the dynamical Green on E's
/// boundary mesh and g_E on the raster-extracted Julia boundary pixels.
struct GammaMeasurement {
  double value = 0.0;
  double julia_green_on_set = 0.0; // sup of g_{K(P)} over the set boundary
  double set_green_on_julia = 0.0; // sup of g_E over J(P) pixel centers
  double raster_slack = 0.0;       // Hoelder modulus of 2 pixel diagonals
  double max_set_green_bounded = 0.0; // sup of g_E over all bounded pixels
  double chi = 0.0;                // sup of dist(., E) over bounded pixels
};

GammaMeasurement measure_gamma(const JuliaApprox& ja, const PlanarSet& set,
                               const HolderData& holder, int resolution);

struct MetricReport {
  int n = 0;
  double s_n = 0.0;
  double gamma = 0.0;
  double gamma_bound = 0.0; // (3A+12) log(n+1)/n for alpha >= 1/2, else n^-2a
  double chi = 0.0;
  std::optional<double> chi_bound; // ls_chi_bound(ls, gamma_bound)
  bool chi_nested = false; // certificates pass and K(P) stayed inside E^1
  bool pass = false;
  std::string note;
};

/// (3A + 12) * (log(n+1)/n for alpha in [1/2, 1], n^(-2 alpha) below 1/2).
double gamma_bound_value(const HolderData& holder, int n);

struct RateTableOptions {
  int resolution = 512;
  int iteration_cap = 1000;
  int samples = 1000;
  std::uint64_t seed = 1;
  double slack = 0.05; // relative mesh/raster allowance on the pass gates
  BuildOptions build;
  std::optional<HolderData> holder_override; // synthetic exponent experiments
};

/// One construction per n at the rate-sequence s_n: measure Gamma and chi,
/// compare against the corollary bounds.  Failed rows carry the error text
/// and pass = false; the table is emitted either way.
std::vector<MetricReport> gamma_rate_table(const PlanarSet& set,
                                           const std::vector<int>& ns,
                                           const RateTableOptions& opt = {});

} // namespace japprox
