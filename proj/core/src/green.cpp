#include "japprox/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "japprox/dynamics.hpp" // escape_radius for the doubling threshold
#include "japprox/errors.hpp"

namespace japprox {

namespace {

double disk_green(const DiskSource& s, Complex z) {
  double d = std::abs(z - s.center);
  return d <= s.radius ? 0.0 : std::log(d / s.radius);
}

double segment_green(const SegmentSource& s, Complex z) {
  Complex zeta = (2.0 * z - s.a - s.b) / (s.b - s.a);
  Complex w = zeta + std::sqrt(zeta * zeta - 1.0);
  double aw = std::abs(w);
  if (aw == 0.0) return 0.0; // zeta = -1 with the principal branch collapsing
  return std::abs(std::log(aw));
}

double preimage_green(const PreimageSource& s, Complex z) {
  double lp = s.p.log_abs_eval(z);
  return lp <= 0.0 ? 0.0 : lp / s.p.degree();
}

// All roots of the iterated polynomial lie inside this radius.
double form_root_bound(const DynamicalSource& s) {
  if (const auto* p = std::get_if<ScaledPoly>(&s.form)) {
    double m = 0.0; // Cauchy bound; the overall scale cancels in the ratios
    for (int k = 0; k < p->base.degree(); ++k)
      m = std::max(m, std::abs(p->base.coeffs()[k]));
    return 1.0 + m / std::abs(p->base.lead());
  }
  return std::max(1.0, std::get<FactoredPoly>(s.form).max_root_abs());
}

Complex form_eval(const DynamicalSource& s, Complex w) {
  return std::visit([&](const auto& p) { return p.eval(w); }, s.form);
}

std::pair<double, Complex> form_log_eval(const DynamicalSource& s, double la,
                                         Complex dir) {
  return std::visit([&](const auto& p) { return log_eval_dir(p, la, dir); },
                    s.form);
}

double dynamical_green(const DynamicalSource& s, Complex z) {
  const int d = s.degree();
  const double corr = s.log_abs_lead() / (d - 1);
  const double rb = form_root_bound(s);
  const double T = std::max(2.0 * rb, s.doubling);
  double scale = 1.0; // d^{-k}
  int used = 0;
  Complex w = z;
  double la = 0.0;
  Complex dir(1.0);
  // Complex phase: plain iteration while |w| stays inside the doubling disk.
  for (;;) {
    double aw = std::abs(w);
    if (s.trap_radius > 0.0 && aw <= s.trap_radius) return 0.0;
    if (aw > T) {
      la = std::log(aw);
      dir = w / aw;
      break;
    }
    if (used == s.iteration_cap) return 0.0; // bounded at this resolution
    Complex next = form_eval(s, w);
    scale /= d;
    ++used;
    if (!std::isfinite(std::abs(next))) {
      // One step overflowed doubles; redo it in the log domain.
      std::tie(la, dir) = form_log_eval(s, std::log(aw), w / aw);
      break;
    }
    w = next;
  }
  // Log phase: track (log|w|, w/|w|), immune to overflow at any magnitude.
  for (;;) {
    // Tail of the escape-rate limit beyond step k is under d^{-k} 4 rb / |w|.
    double tail = la >= 710.0 ? 0.0 : scale * 4.0 * rb * std::exp(-la);
    if (tail < 5e-13 || la > 1e15 || used == s.iteration_cap) break;
    std::tie(la, dir) = form_log_eval(s, la, dir);
    scale /= d;
    ++used;
  }
  return std::max(0.0, scale * (la + corr));
}

} // namespace

GreenModel GreenModel::disk(Complex center, double radius) {
  if (!(radius > 0.0)) fail(ErrorCode::InvalidInput, "disk radius must be positive");
  return GreenModel(DiskSource{center, radius}, radius, center);
}

GreenModel GreenModel::segment(Complex a, Complex b) {
  double len = std::abs(a - b);
  if (len == 0.0) fail(ErrorCode::InvalidInput, "segment endpoints coincide");
  return GreenModel(SegmentSource{a, b}, len / 4.0, 0.5 * (a + b));
}

GreenModel GreenModel::preimage(ComplexPoly p) {
  if (p.degree() < 1) fail(ErrorCode::InvalidInput, "preimage polynomial must be non-constant");
  int d = p.degree();
  double cap = std::pow(std::abs(p.lead()), -1.0 / d);
  std::vector<Complex> roots = p.roots();
  Complex anchor(0.0);
  for (Complex r : roots) anchor += r / static_cast<double>(roots.size());
  return GreenModel(PreimageSource{std::move(p)}, cap, anchor);
}

GreenModel GreenModel::dynamical(ScaledPoly P, int iteration_cap) {
  if (P.degree() < 2)
    fail(ErrorCode::InvalidInput, "dynamical Green needs degree >= 2");
  double cap = std::exp(-P.log_abs_lead() / (P.degree() - 1));
  double dbl = escape_radius(P).doubling;
  return GreenModel(DynamicalSource{std::move(P), iteration_cap, 0.0, dbl}, cap,
                    Complex(0.0));
}

GreenModel GreenModel::dynamical(FactoredPoly P, int iteration_cap,
                                 double trap_radius) {
  if (P.degree() < 2)
    fail(ErrorCode::InvalidInput, "dynamical Green needs degree >= 2");
  double cap = std::exp(-P.log_abs_lead() / (P.degree() - 1));
  double dbl = escape_radius(P).doubling;
  return GreenModel(DynamicalSource{std::move(P), iteration_cap, trap_radius, dbl},
                    cap, Complex(0.0));
}

GreenModel GreenModel::custom(std::function<double(Complex)> eval, double capacity,
                              Complex anchor, double err_lo, double err_hi, int order) {
  if (!(capacity > 0.0)) fail(ErrorCode::InvalidInput, "capacity must be positive");
  return GreenModel(CustomSource{std::move(eval), err_lo, err_hi, order}, capacity, anchor);
}

double GreenModel::eval(Complex z) const {
  double g = std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiskSource>) return disk_green(s, z);
        else if constexpr (std::is_same_v<T, SegmentSource>) return segment_green(s, z);
        else if constexpr (std::is_same_v<T, PreimageSource>) return preimage_green(s, z);
        else if constexpr (std::is_same_v<T, DynamicalSource>) return dynamical_green(s, z);
        else return std::max(0.0, s.eval(z));
      },
      source_);
  return std::max(0.0, g - shift_);
}

double GreenModel::capacity() const { return base_capacity_ * std::exp(shift_); }

GreenModel GreenModel::sublevel(double eps) const {
  if (!(eps >= 0.0)) fail(ErrorCode::InvalidInput, "sublevel offset must be >= 0");
  GreenModel m = *this;
  m.shift_ += eps;
  return m;
}

bool sublevel_contains(const GreenModel& m, double eps, Complex z) {
  return m.eval(z) <= eps;
}

BoundaryMesh sublevel_boundary(const GreenModel& m, double eps, int samples) {
  if (!(eps > 0.0)) fail(ErrorCode::InvalidInput, "level must be positive");
  if (samples < 4) fail(ErrorCode::InvalidInput, "level trace needs >= 4 samples");
  Complex c = m.anchor();
  if (m.eval(c) >= eps)
    fail(ErrorCode::MeshFailure, "anchor is not below the requested level");
  // Outside |z - c| > cap * e^eps * 8 + |c| the level is certainly exceeded
  // for every source we model; march there geometrically.
  double t_max = 8.0 * m.capacity() * std::exp(eps) + 8.0 * (1.0 + std::abs(c));
  BoundaryMesh mesh;
  mesh.points.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    double ang = 2.0 * M_PI * k / samples;
    Complex dir(std::cos(ang), std::sin(ang));
    double lo = 0.0, hi = -1.0;
    for (double t = 1e-3 * t_max; t <= t_max * 1.0001; t *= 1.3) {
      if (m.eval(c + t * dir) > eps) { hi = t; break; }
      lo = t;
    }
    if (hi < 0.0)
      fail(ErrorCode::MeshFailure, "level trace ray never crossed the level");
    Complex pt;
    for (int it = 0; it < 300; ++it) {
      double mid = 0.5 * (lo + hi);
      pt = c + mid * dir;
      double g = m.eval(pt);
      if (std::abs(g - eps) <= 1e-9) { lo = hi = mid; break; }
      (g > eps ? hi : lo) = mid;
    }
    if (std::abs(m.eval(pt) - eps) > 1e-9)
      fail(ErrorCode::MeshFailure, "level trace bisection stalled");
    mesh.points.push_back(pt);
  }
  double gap = 0.0;
  for (int k = 0; k < samples; ++k)
    gap = std::max(gap, std::abs(mesh.points[(k + 1) % samples] - mesh.points[k]));
  mesh.spacing = gap;
  mesh.closed = true;
  return mesh;
}

namespace {

struct FitSamples {
  std::vector<double> dist;
  std::vector<double> g;
};

FitSamples collect_offset_samples(const GreenModel& m, const PlanarSet& set,
                                  double t_lo, double t_hi, int boundary_pts,
                                  int directions, double phase) {
  BoundaryMesh mesh = boundary_sample(set, boundary_pts);
  FitSamples out;
  int decades = 24;
  for (Complex b : mesh.points) {
    for (int d = 0; d < directions; ++d) {
      double ang = 2.0 * M_PI * (d + phase) / directions;
      Complex dir(std::cos(ang), std::sin(ang));
      for (int j = 0; j < decades; ++j) {
        double t = t_lo * std::pow(t_hi / t_lo, j / double(decades - 1));
        Complex z = b + t * dir;
        double dist = dist_to_set(set, z);
        if (dist <= 0.0) continue;
        out.dist.push_back(dist);
        out.g.push_back(m.eval(z));
      }
    }
  }
  return out;
}

// Largest ratio g / dist^alpha over samples restricted to [lo, hi].
double max_ratio(const FitSamples& s, double alpha, double lo, double hi) {
  double r = 0.0;
  for (std::size_t i = 0; i < s.dist.size(); ++i)
    if (s.dist[i] >= lo && s.dist[i] <= hi)
      r = std::max(r, s.g[i] / std::pow(s.dist[i], alpha));
  return r;
}

double min_ratio(const FitSamples& s, double beta, double lo, double hi) {
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.dist.size(); ++i)
    if (s.dist[i] >= lo && s.dist[i] <= hi)
      r = std::min(r, s.g[i] / std::pow(s.dist[i], beta));
  return r;
}

} // namespace

HolderData holder_fit(const GreenModel& m, const PlanarSet& set) {
  if (const DiskSource* d = std::get_if<DiskSource>(&m.source()); d && m.shift() == 0.0)
    return HolderData{1.0 / d->radius, 1.0};

  double scale = std::max(1.0, diameter(set));
  double t_lo = 1e-6 * scale, t_hi = 1e-1 * scale;
  FitSamples fit = collect_offset_samples(m, set, t_lo, t_hi, 192, 12, 0.0);
  FitSamples check = collect_offset_samples(m, set, t_lo * 2.0, t_hi * 0.5, 96, 12, 0.5);
  if (fit.dist.empty()) fail(ErrorCode::FitFailure, "no exterior offset samples");

  for (double alpha : {1.0, 0.5}) {
    double a_small = max_ratio(fit, alpha, t_lo * 0.5, t_lo * 1e2);
    double a_large = max_ratio(fit, alpha, t_hi * 1e-1, t_hi * 2.0);
    if (a_small > 10.0 * a_large) continue; // ratio diverges: exponent too large
    double A = std::max(max_ratio(fit, alpha, 0.0, t_hi * 2.0),
                        max_ratio(check, alpha, 0.0, t_hi * 2.0));
    if (A > 0.0 && std::isfinite(A)) return HolderData{A, alpha};
  }
  fail(ErrorCode::FitFailure, "no admissible Hoelder exponent in {1, 1/2}");
}

double markov_bound(const GreenModel& m, int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "Markov bound needs n >= 1");
  if (const DiskSource* d = std::get_if<DiskSource>(&m.source()))
    return n / (d->radius * std::exp(m.shift())); // sublevel of a disk is a disk
  return std::pow(2.0, 1.0 / n - 1.0) * n * static_cast<double>(n) / m.capacity();
}

MarkovBound markov_bound_checked(const PlanarSet& set, const GreenModel& m, int n) {
  const UnionOfDisks* u = set.get_if<UnionOfDisks>();
  if (!u || m.shift() > 0.0) return MarkovBound{markov_bound(m, n), true};

  std::size_t nd = u->disks.size();
  std::vector<std::size_t> comp(nd);
  for (std::size_t i = 0; i < nd; ++i) comp[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (comp[i] != i) i = comp[i] = comp[comp[i]];
    return i;
  };
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = i + 1; j < nd; ++j)
      if (std::abs(u->disks[i].center - u->disks[j].center) <=
          u->disks[i].radius + u->disks[j].radius)
        comp[find(i)] = find(j);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < nd; ++i)
    if (find(i) == i) ++roots;
  if (roots <= 1) return MarkovBound{markov_bound(m, n), true};

  // Disconnected: conservative component-wise maximum; each component
  // capacity is bounded below by its largest disk radius (monotonicity).
  double worst = 0.0;
  for (std::size_t r = 0; r < nd; ++r) {
    if (find(r) != r) continue;
    double cap_lo = 0.0;
    for (std::size_t i = 0; i < nd; ++i)
      if (find(i) == r) cap_lo = std::max(cap_lo, u->disks[i].radius);
    worst = std::max(worst, std::pow(2.0, 1.0 / n - 1.0) * n * static_cast<double>(n) / cap_lo);
  }
  return MarkovBound{worst, false};
}

LSData ls_bound_data(const PlanarSet& set, const GreenModel& m) {
  if (const DiskSource* d = std::get_if<DiskSource>(&m.source()); d && m.shift() == 0.0)
    return LSData{std::log1p(1.0 / d->radius), 1.0};

  double scale = std::max(1.0, diameter(set));
  double beta = set.get_if<Segment>() ? 0.5 : 1.0;
  // Offset floor: along flat boundary pieces the ratio g / dist^beta can sink
  // toward 0 as dist -> 0 when beta < 1, so B is quoted above this floor.
  double floor = 1e-3 * scale;
  FitSamples fit = collect_offset_samples(m, set, floor, 1.0, 192, 12, 0.0);
  FitSamples check = collect_offset_samples(m, set, floor * 1.5, 0.75, 96, 12, 0.5);
  double B = std::min(min_ratio(fit, beta, floor, 1.0), min_ratio(check, beta, floor, 1.0));
  if (!(B > 0.0) || !std::isfinite(B))
    fail(ErrorCode::FitFailure, "Lojasiewicz-Siciak fit degenerated");
  return LSData{B, beta};
}

} // namespace japprox
