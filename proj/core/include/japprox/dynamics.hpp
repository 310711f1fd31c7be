#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "japprox/geometry.hpp"
#include "japprox/green.hpp"
#include "japprox/lagrange.hpp"
#include "japprox/poly.hpp"

namespace japprox {

/// basic: max(1, (1 + sum |c_k|) / |c_d|) on the effective coefficients --
/// beyond it every orbit grows.  doubling: |P(z)| >= 2|z| holds outside it,
/// so escape is geometric and K(P) lies inside the doubling disk.
struct EscapeRadius {
  double basic = 1.0;
  double doubling = 1.0;
  double effective() const { return basic > doubling ? basic : doubling; }
};

EscapeRadius escape_radius(const ScaledPoly& P);
EscapeRadius escape_radius(const FactoredPoly& P);

struct OrbitResult {
  bool escaped = false;
  int steps = 0; // first index past the escape radius, or the iteration cap
};

/// Iterate until |w| exceeds the effective escape radius (Escaped), |w| falls
/// into the trap disk (Bounded, certified), or the cap runs out (Bounded at
/// this resolution).
OrbitResult bounded_orbit(const ScaledPoly& P, Complex z, int cap = 1000,
                          double trap_radius = 0.0);
OrbitResult bounded_orbit(const FactoredPoly& P, Complex z, int cap = 1000,
                          double trap_radius = 0.0);

struct Window {
  double x0 = -2.0, x1 = 2.0, y0 = -2.0, y1 = 2.0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

/// Escape-time raster over pixel centers; 0 = escaped, 255 = bounded,
/// 128 = bounded pixel 4-adjacent to an escaped pixel (J(P) at this
/// resolution).  Row 0 is the top of the window, matching P5 layout.
struct Raster {
  int width = 0, height = 0;
  Window win;
  std::vector<std::uint8_t> pix;

  double pixel_w() const { return win.width() / width; }
  double pixel_h() const { return win.height() / height; }
  Complex center(int row, int col) const {
    return Complex(win.x0 + (col + 0.5) * pixel_w(),
                   win.y1 - (row + 0.5) * pixel_h());
  }
  std::uint8_t at(int row, int col) const { return pix[row * width + col]; }

  long bounded_count() const;
  double bounded_area() const;
  std::vector<Complex> boundary_centers() const;
  std::vector<Complex> bounded_centers() const;
};

Raster filled_julia_raster(const ScaledPoly& P, Window win, int resolution,
                           int cap = 1000, double trap_radius = 0.0);
Raster filled_julia_raster(const FactoredPoly& P, Window win, int resolution,
                           int cap = 1000, double trap_radius = 0.0);

/// s_n = max(3A/n^2a + (9/n)log(n+1) + (3/n)log(diam+2),
///           (6/n) log||Q_n||, (6/n) log((R+1)/r)); needs 0 interior.
double rate_s_general(const SetData& data, const HolderData& holder,
                      double log_norm_Q, int n);

/// s_n = 3A/n^2a + (9/n)log(n+1) + (3/n)log(diam+3) and
/// tau_n = (3/n)(log(n+1) - log(diam+3)) for the Fekete-node variant.
std::pair<double, double> rate_s_fekete(const HolderData& holder, double diam,
                                        int n);

/// The four conditions gating the construction at degree parameter n:
/// (1) omega(1/n^2) < s, (2) B_n + omega(1/n^2) <= s/3 with
/// B_n = (3/n)log[(n+1)Theta], (3) exp(ns/3) > (R+1)/r,
/// (4) exp(-ns/3)||Q_n|| <= r/(R+1).
struct ConditionReport {
  int n = 0;
  double s = 0.0;
  double omega = 0.0;       // omega(1/n^2)
  double Bn = 0.0;          // (3/n) log[(n+1) Theta]
  double Bn_working = 0.0;  // Bn + (1/n) log||Q_n||_mesh, recorded only
  double log_norm_Q = 0.0;
  double lhs3 = 0.0, rhs3 = 0.0; // ns/3 vs log((R+1)/r)
  double lhs4 = 0.0, rhs4 = 0.0; // log||Q|| - ns/3 vs log(r/(R+1))
  bool c1 = false, c2 = false, c3 = false, c4 = false;

  bool all() const { return c1 && c2 && c3 && c4; }
  std::string failing() const; // "2,4" style list of failed indices
};

/// A constructed approximation E <= K(P) <= E_s, kept in build coordinates
/// (after the Step III translation, if any).
struct JuliaApprox {
  FactoredPoly P;       // z * exp(-ns/3) * L^(j_n)(z), iteration form
  ScaledPoly P_coeffs;  // expanded coefficients, reporting only
  double s = 0.0;       // rate the construction certifies
  int n = 0;            // degree parameter; deg P = n+1
  double eps = 0.0;     // requested Hausdorff target (eps mode), else 0
  ConditionReport conditions;
  LagrangeSystem sys;   // nodes and Deltas on the construction boundary
  SetData data;         // construction-set geometry (r, R, diam)
  GreenModel build_green;   // Green model of the construction set (E or E_s')
  GreenModel target_green;  // Green model of E itself, build coordinates
  double s_prime = 0.0;     // Step II level shift (0 = Step I)
  Complex translation{0.0}; // Step III: original set = build set + translation
  double trap_radius = 0.0; // r of the construction set: P-invariant disk
  double escape_threshold = 0.0;
  int iteration_cap = 1000;

  JuliaApprox(GreenModel build_g, GreenModel target_g)
      : build_green(std::move(build_g)), target_green(std::move(target_g)) {}

  /// Dynamical Green model of K(P) with the certified trap installed.
  GreenModel julia_green() const;
  /// Square window just covering the escape-threshold disk.
  Window default_window(double margin = 1.1) const;
};

/// Core constructor: P_n(z) = z exp(-ns/3) Q_n(z) with Q_n = L^(j_n) from
/// `sys`; throws PreconditionNotMet listing the failed conditions.
JuliaApprox build_Pn(const SetData& data, const HolderData& holder,
                     const LagrangeSystem& sys, double s,
                     GreenModel build_green, GreenModel target_green,
                     double s_prime = 0.0, Complex translation = Complex(0.0),
                     int iteration_cap = 1000);

struct BuildOptions {
  int n = 0;                  // 0 = smallest passing n by doubling search
  double C_target = 2.0;      // pseudo Leja Edrei target
  bool fekete = false;        // discrete Fekete nodes instead of pseudo Leja
  double split = 0.5;         // Step II: s' = split * s
  bool adaptive_split = true; // at fixed n, shrink the split until it fits
  int iteration_cap = 1000;
  int max_n = 4096;           // doubling-search ceiling
  int mesh_size = 0;          // node-selection boundary mesh (0 = auto)
};

/// Steps I-III dispatcher: 0 interior builds on E directly; 0 in E without
/// interior builds on the sublevel set E_s'; 0 outside E translates first.
JuliaApprox build_with_shift(const PlanarSet& set, const GreenModel& green,
                             double s, const BuildOptions& opt = {});

/// Fixed-n construction with s chosen as the rate-sequence value of the build
/// set (nodes first, then s from ||Q_n||), so the four conditions hold by the
/// choice of s.  When 0 is not interior the sublevel split is picked to
/// minimize the certified end-to-end rate s' + s; the holder data is the
/// caller's (synthetic overrides included).
JuliaApprox build_rate_n(const PlanarSet& set, const GreenModel& green,
                         const HolderData& holder, int n,
                         const BuildOptions& opt = {});

/// Largest rate certain to land K(P) inside the eps-neighborhood of the
/// hull: 0.98 * min g over sampled points at dist eps from the set.
double s_from_eps(const PlanarSet& set, const GreenModel& green, double eps);

JuliaApprox approximate_eps(const PlanarSet& set, const GreenModel& green,
                            double eps, const BuildOptions& opt = {});

struct CertCheck {
  std::string name;
  int samples = 0;
  std::vector<Complex> failures;
  bool pass() const { return failures.empty(); }
};

struct Certificate {
  CertCheck set_bounded;   // (a) samples of E keep bounded orbits
  CertCheck one_step;      // (b) |P| <= r on the construction boundary
  CertCheck level_escapes; // (c) samples of {g_E = 1.01 s} escape
  int cap = 0;
  bool pass() const {
    return set_bounded.pass() && one_step.pass() && level_escapes.pass();
  }
};

/// Three sample-based inclusion checks; `set` is the original descriptor
/// (the Step III translation is re-applied internally).
Certificate certify_inclusions(const JuliaApprox& ja, const PlanarSet& set,
                               int samples, std::uint64_t seed);

} // namespace japprox
