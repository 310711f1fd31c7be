#pragma once

#include <functional>
#include <variant>

#include "japprox/geometry.hpp"
#include "japprox/poly.hpp"

namespace japprox {

struct DiskSource {
  Complex center;
  double radius;
};

struct SegmentSource {
  Complex a;
  Complex b;
};

/// g = (1/deg p) * max(0, log|p|); the set is p^{-1}(closed unit disk).
struct PreimageSource {
  ComplexPoly p;
};

/// Escape-rate Green function of the filled Julia set K(P), deg P >= 2.
struct DynamicalSource {
  std::variant<ScaledPoly, FactoredPoly> form;
  int iteration_cap = 1000;
  // Radius of a certified forward-invariant disk inside K(P) (0 = none):
  // orbits reaching it are bounded without exhausting the iteration cap.
  double trap_radius = 0.0;
  double doubling = 0.0; // |P(z)| >= 2|z| outside this radius; factory-set

  int degree() const {
    return std::visit([](const auto& p) { return p.degree(); }, form);
  }
  double log_abs_lead() const {
    return std::visit([](const auto& p) { return p.log_abs_lead(); }, form);
  }
};

/// Numerically backed model, e.g. the n-th-root Lagrange surrogate
/// max(0, log|L_n|^(1/n)); err_lo/err_hi bracket g - surrogate.
struct CustomSource {
  std::function<double(Complex)> eval;
  double err_lo = 0.0;
  double err_hi = 0.0;
  int order = 0;
};

/// Green function with pole at infinity for a compact set, plus the sublevel
/// shift: the model for E_eps = {g_E <= eps} evaluates max(0, g_E - eps) and
/// its capacity is cap(E) * e^eps.
class GreenModel {
public:
  using Source = std::variant<DiskSource, SegmentSource, PreimageSource,
                              DynamicalSource, CustomSource>;

  static GreenModel disk(Complex center, double radius);
  static GreenModel segment(Complex a, Complex b);
  static GreenModel preimage(ComplexPoly p);
  static GreenModel dynamical(ScaledPoly P, int iteration_cap = 1000);
  static GreenModel dynamical(FactoredPoly P, int iteration_cap = 1000,
                              double trap_radius = 0.0);
  static GreenModel custom(std::function<double(Complex)> eval, double capacity,
                           Complex anchor, double err_lo = 0.0, double err_hi = 0.0,
                           int order = 0);

  double eval(Complex z) const;
  double capacity() const; // includes the sublevel factor e^shift
  double shift() const { return shift_; }
  Complex anchor() const { return anchor_; }
  const Source& source() const { return source_; }

  /// Model of the sublevel set {g <= eps}: same source, shift accumulated.
  GreenModel sublevel(double eps) const;

private:
  GreenModel(Source s, double base_capacity, Complex anchor)
      : source_(std::move(s)), base_capacity_(base_capacity), anchor_(anchor) {}
  Source source_;
  double base_capacity_;
  Complex anchor_;
  double shift_ = 0.0;
};

inline double green_eval(const GreenModel& m, Complex z) { return m.eval(z); }
inline double capacity(const GreenModel& m) { return m.capacity(); }

bool sublevel_contains(const GreenModel& m, double eps, Complex z);

/// Traces {g = eps} by bisection along rays from the model anchor, to green
/// accuracy 1e-9 per point.
BoundaryMesh sublevel_boundary(const GreenModel& m, double eps, int samples);

/// Hoelder modulus data: g_E(z) <= A * dist(z, E)^alpha near E.
struct HolderData {
  double A = 1.0;
  double alpha = 1.0;
};

inline double modulus_bound(const HolderData& h, double delta) {
  return h.A * std::pow(delta, h.alpha);
}

/// Fits (A, alpha) with alpha restricted to {1, 1/2}; analytic override for
/// disks.  Rejects an exponent whose ratio g / dist^alpha diverges as the
/// offset shrinks (factor > 10 across the sampled decades).
HolderData holder_fit(const GreenModel& m, const PlanarSet& set);

struct MarkovBound {
  double value = 0.0;
  bool continuum = true; // false when a disconnected union used the fallback
};

/// Markov inequality constant bound for degree-n polynomials: exact n/r for a
/// disk (including its sublevel disks), else 2^(1/n-1) n^2 / cap.
double markov_bound(const GreenModel& m, int n);

/// Same, but flags disconnected unions of disks and falls back to the
/// component-wise maximum with per-component capacity lower bounds.
MarkovBound markov_bound_checked(const PlanarSet& set, const GreenModel& m, int n);

/// Lojasiewicz-Siciak data on U = E^1: g_E >= B * dist^beta.
struct LSData {
  double B = 0.0;
  double beta = 1.0;
};

/// Analytic for disks (B = log(1 + 1/r), beta = 1); segments use beta = 1/2
/// with B the sampled minimum of g/sqrt(dist) above a documented offset floor
/// (the pointwise infimum degenerates along the flat sides); other variants
/// fit beta = 1.
LSData ls_bound_data(const PlanarSet& set, const GreenModel& m);

/// Green model for a set descriptor: analytic where a closed form exists
/// (disk, segment, polynomial preimage, union collapsing to one disk), and a
/// Lagrange-backed surrogate on discrete-Fekete nodes otherwise (polygons,
/// genuine unions -- the model then represents the polynomially convex hull).
/// Defined alongside the Lagrange machinery.
GreenModel green_for(const PlanarSet& set, int surrogate_degree = 64);

} // namespace japprox
