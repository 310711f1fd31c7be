#include "japprox/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "japprox/errors.hpp"
#include "japprox/nodes.hpp"
#include "japprox/parallel.hpp"

namespace japprox {

namespace {

// Smallest t with h(t) >= 0 for h increasing on (t_min, inf); h(t) <= 0 near
// t_min and the caller guarantees h -> +inf.
template <typename H>
double rising_root(H h, double t_min, double hi0) {
  double lo = t_min;
  double hi = std::max(hi0, t_min + 1.0);
  int guard = 0;
  while (h(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 4000) fail(ErrorCode::Internal, "escape radius bracket diverged");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= t_min || h(mid) < 0.0) lo = mid;
    else hi = mid;
  }
  return hi;
}

} // namespace

EscapeRadius escape_radius(const ScaledPoly& P) {
  const int d = P.degree();
  if (d < 2) fail(ErrorCode::InvalidInput, "escape radius needs degree >= 2");
  const auto& c = P.base.coeffs();
  const double L = P.log_scale;
  const double A = std::abs(c[d]);
  double S = 0.0;
  for (int k = 0; k < d; ++k) S += std::abs(c[k]);
  EscapeRadius er;
  // |P(z)| >= e^L t^{d-1} (A t - S) >= t once A t - S >= e^{-L} and t >= 1.
  er.basic = std::max(1.0, (std::exp(-L) + S) / A);
  // Doubling: e^L t^{d-2} (A t - S) >= 2, increasing in t beyond S / A.
  double target = std::log(2.0) - L;
  er.doubling = rising_root(
      [&](double t) { return (d - 2) * std::log(t) + std::log(A * t - S) - target; },
      S / A, er.basic);
  er.doubling = std::max(er.doubling, er.basic);
  return er;
}

EscapeRadius escape_radius(const FactoredPoly& P) {
  const int d = P.degree();
  if (d < 2) fail(ErrorCode::InvalidInput, "escape radius needs degree >= 2");
  const double rho = P.max_root_abs();
  const double ll = P.lead_log;
  // |P(z)| >= e^ll (t - rho)^d for |z| = t > rho.
  auto solve = [&](double extra) {
    return rising_root(
        [&](double t) { return ll + d * std::log(t - rho) - std::log(t) - extra; },
        rho, 2.0 * std::max(rho, 1.0));
  };
  EscapeRadius er;
  er.basic = std::max(1.0, solve(0.0));
  er.doubling = std::max(er.basic, solve(std::log(2.0)));
  return er;
}

namespace {

template <typename Form>
OrbitResult orbit_at(const Form& P, Complex z, int cap, double trap, double esc) {
  Complex w = z;
  for (int k = 0; k <= cap; ++k) {
    double aw = std::abs(w);
    if (!(aw <= esc)) return {true, k}; // also catches an overflowed step
    if (trap > 0.0 && aw <= trap) return {false, k};
    if (k == cap) break;
    w = P.eval(w);
  }
  return {false, cap};
}

} // namespace

OrbitResult bounded_orbit(const ScaledPoly& P, Complex z, int cap, double trap_radius) {
  return orbit_at(P, z, cap, trap_radius, escape_radius(P).effective());
}

OrbitResult bounded_orbit(const FactoredPoly& P, Complex z, int cap, double trap_radius) {
  return orbit_at(P, z, cap, trap_radius, escape_radius(P).effective());
}

long Raster::bounded_count() const {
  long c = 0;
  for (std::uint8_t v : pix) c += (v != 0);
  return c;
}

double Raster::bounded_area() const {
  return static_cast<double>(bounded_count()) * pixel_w() * pixel_h();
}

std::vector<Complex> Raster::boundary_centers() const {
  std::vector<Complex> out;
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (at(r, c) == 128) out.push_back(center(r, c));
  return out;
}

std::vector<Complex> Raster::bounded_centers() const {
  std::vector<Complex> out;
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      if (at(r, c) != 0) out.push_back(center(r, c));
  return out;
}

namespace {

template <typename Form>
Raster raster_impl(const Form& P, Window win, int resolution, int cap, double trap) {
  if (resolution < 2) fail(ErrorCode::InvalidInput, "raster needs resolution >= 2");
  if (!(win.width() > 0.0) || !(win.height() > 0.0))
    fail(ErrorCode::InvalidInput, "raster window is empty");
  Raster r;
  r.width = resolution;
  r.height = resolution;
  r.win = win;
  r.pix.assign(static_cast<std::size_t>(resolution) * resolution, 0);
  const double esc = escape_radius(P).effective();
  parallel_for(resolution, [&](std::size_t rb, std::size_t re) {
    for (std::size_t row = rb; row < re; ++row)
      for (int col = 0; col < resolution; ++col) {
        OrbitResult o = orbit_at(P, r.center(static_cast<int>(row), col), cap, trap, esc);
        r.pix[row * resolution + col] = o.escaped ? 0 : 255;
      }
  });
  // Mark the inner boundary: bounded pixels 4-adjacent to an escaped pixel.
  auto escaped = [&](int row, int col) {
    return row >= 0 && row < resolution && col >= 0 && col < resolution &&
           r.at(row, col) == 0;
  };
  std::vector<std::uint8_t> marked = r.pix;
  for (int row = 0; row < resolution; ++row)
    for (int col = 0; col < resolution; ++col)
      if (r.at(row, col) != 0 &&
          (escaped(row - 1, col) || escaped(row + 1, col) ||
           escaped(row, col - 1) || escaped(row, col + 1)))
        marked[static_cast<std::size_t>(row) * resolution + col] = 128;
  r.pix = std::move(marked);
  return r;
}

} // namespace

Raster filled_julia_raster(const ScaledPoly& P, Window win, int resolution,
                           int cap, double trap_radius) {
  return raster_impl(P, win, resolution, cap, trap_radius);
}

Raster filled_julia_raster(const FactoredPoly& P, Window win, int resolution,
                           int cap, double trap_radius) {
  return raster_impl(P, win, resolution, cap, trap_radius);
}

double rate_s_general(const SetData& data, const HolderData& holder,
                      double log_norm_Q, int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "rate needs n >= 1");
  if (!data.inner_r || !(*data.inner_r > 0.0))
    fail(ErrorCode::PreconditionNotMet, "rate sequence needs 0 interior to the set");
  double tn = 3.0 * holder.A / std::pow(n, 2.0 * holder.alpha) +
              (9.0 / n) * std::log(n + 1.0) +
              (3.0 / n) * std::log(data.diam + 2.0);
  double s = tn;
  s = std::max(s, (6.0 / n) * log_norm_Q);
  s = std::max(s, (6.0 / n) * std::log((data.outer_R + 1.0) / *data.inner_r));
  return s;
}

std::pair<double, double> rate_s_fekete(const HolderData& holder, double diam, int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "rate needs n >= 1");
  double s = 3.0 * holder.A / std::pow(n, 2.0 * holder.alpha) +
             (9.0 / n) * std::log(n + 1.0) + (3.0 / n) * std::log(diam + 3.0);
  double tau = (3.0 / n) * (std::log(n + 1.0) - std::log(diam + 3.0));
  return {s, tau};
}

std::string ConditionReport::failing() const {
  std::string out;
  auto add = [&](int i) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  };
  if (!c1) add(1);
  if (!c2) add(2);
  if (!c3) add(3);
  if (!c4) add(4);
  return out;
}

namespace {

ConditionReport make_conditions(const SetData& data, const HolderData& holder,
                                double s, double log_norm_Q, int n) {
  if (!data.inner_r || !(*data.inner_r > 0.0))
    fail(ErrorCode::PreconditionNotMet,
         "construction needs 0 interior to the build set");
  const double r = *data.inner_r;
  ConditionReport c;
  c.n = n;
  c.s = s;
  c.log_norm_Q = log_norm_Q;
  c.omega = modulus_bound(holder, 1.0 / (static_cast<double>(n) * n));
  double Theta = std::cbrt(2.0 + data.diam);
  c.Bn = (3.0 / n) * std::log((n + 1) * Theta);
  c.Bn_working = c.Bn + log_norm_Q / n;
  c.lhs3 = n * s / 3.0;
  c.rhs3 = std::log((data.outer_R + 1.0) / r);
  c.lhs4 = log_norm_Q - n * s / 3.0;
  c.rhs4 = std::log(r / (data.outer_R + 1.0));
  c.c1 = c.omega < s;
  // (2) holds with equality when s is exactly the rate sequence value; leave
  // room for the differing association orders of the two sides.
  c.c2 = c.Bn + c.omega <= s / 3.0 + 1e-12 * std::max(1.0, s);
  c.c3 = c.lhs3 > c.rhs3;
  c.c4 = c.lhs4 <= c.rhs4 + 1e-12 * std::max(1.0, std::abs(c.rhs4));
  return c;
}

} // namespace

GreenModel JuliaApprox::julia_green() const {
  return GreenModel::dynamical(P, iteration_cap, trap_radius);
}

Window JuliaApprox::default_window(double margin) const {
  double half = margin * escape_threshold;
  return Window{-half, half, -half, half};
}

JuliaApprox build_Pn(const SetData& data, const HolderData& holder,
                     const LagrangeSystem& sys, double s, GreenModel build_green,
                     GreenModel target_green, double s_prime, Complex translation,
                     int iteration_cap) {
  const int n = sys.n();
  if (n < 1) fail(ErrorCode::InvalidInput, "construction needs n >= 1");
  NormLn nl = norm_Ln(sys, sys.nodes.mesh);
  double log_norm_Q =
      std::isfinite(nl.value) ? std::log(nl.value) : n * std::log(nl.root);

  ConditionReport rep = make_conditions(data, holder, s, log_norm_Q, n);
  if (!rep.all())
    fail(ErrorCode::PreconditionNotMet,
         "construction conditions failed at n = " + std::to_string(n) + ": " +
             rep.failing());

  FactoredPoly P;
  P.roots.reserve(n + 1);
  P.roots.push_back(Complex(0.0));
  for (int k = 0; k <= n; ++k)
    if (k != sys.j_n) P.roots.push_back(sys.nodes.points[k]);
  P.lead_log = -n * s / 3.0 - sys.deltas[sys.j_n].log_abs;
  P.lead_phase = std::conj(sys.deltas[sys.j_n].phase);

  JuliaApprox ja(std::move(build_green), std::move(target_green));
  ja.P = std::move(P);
  ja.P_coeffs = ja.P.expanded();
  ja.s = s;
  ja.n = n;
  ja.conditions = rep;
  ja.sys = sys;
  ja.data = data;
  ja.s_prime = s_prime;
  ja.translation = translation;
  ja.trap_radius = *data.inner_r;
  ja.escape_threshold = escape_radius(ja.P).effective();
  ja.iteration_cap = iteration_cap;
  return ja;
}

namespace {

// g_{E + t}(z) = g_E(z - t); analytic sources are rebuilt, the rest wrap.
GreenModel translate_green(const GreenModel& g, Complex t) {
  const auto& src = g.source();
  if (const auto* d = std::get_if<DiskSource>(&src)) {
    GreenModel m = GreenModel::disk(d->center + t, d->radius);
    return g.shift() > 0.0 ? m.sublevel(g.shift()) : m;
  }
  if (const auto* sg = std::get_if<SegmentSource>(&src)) {
    GreenModel m = GreenModel::segment(sg->a + t, sg->b + t);
    return g.shift() > 0.0 ? m.sublevel(g.shift()) : m;
  }
  double lo = 0.0, hi = 0.0;
  int order = 0;
  if (const auto* c = std::get_if<CustomSource>(&src)) {
    lo = c->err_lo;
    hi = c->err_hi;
    order = c->order;
  }
  GreenModel base = g; // eval of the copy already includes any shift
  return GreenModel::custom([base, t](Complex z) { return base.eval(z - t); },
                            g.capacity(), g.anchor() + t, lo, hi, order);
}

// A point of the set to translate onto the origin for Step III.
Complex inset_anchor(const PlanarSet& set) {
  std::vector<Complex> cands;
  if (const auto* d = set.get_if<Disk>()) {
    cands.push_back(d->center);
  } else if (const auto* sg = set.get_if<Segment>()) {
    cands.push_back(0.5 * (sg->a + sg->b));
  } else if (const auto* pg = set.get_if<SimplePolygon>()) {
    Complex c(0.0);
    for (Complex v : pg->vertices) c += v;
    cands.push_back(c / static_cast<double>(pg->vertices.size()));
  } else if (const auto* u = set.get_if<UnionOfDisks>()) {
    std::size_t big = 0;
    for (std::size_t i = 1; i < u->disks.size(); ++i)
      if (u->disks[i].radius > u->disks[big].radius) big = i;
    cands.push_back(u->disks[big].center);
    for (const Disk& d : u->disks) cands.push_back(d.center);
  } else if (const auto* pp = set.get_if<PolyPreimage>()) {
    for (Complex r : pp->p.roots()) cands.push_back(r); // |p| = 0 <= 1 there
  }
  BoundaryMesh bm = boundary_sample(set, 64);
  for (Complex p : bm.points) cands.push_back(p);
  for (Complex c : cands)
    if (contains(set, c)) return c;
  fail(ErrorCode::Internal, "found no anchor point inside the set");
}

template <typename Attempt>
JuliaApprox with_auto_n(const Attempt& attempt, const BuildOptions& opt) {
  if (opt.n > 0) return attempt(opt.n);
  int lo = 1; // highest failing n seen
  for (int n = 2; n <= opt.max_n; n *= 2) {
    std::optional<JuliaApprox> best;
    try {
      best = attempt(n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionNotMet) throw;
      lo = n;
      continue;
    }
    int hi = n; // smallest known passing n; shrink the bracket
    while (hi - lo > 1) {
      int mid = lo + (hi - lo) / 2;
      try {
        best = attempt(mid);
        hi = mid;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionNotMet) throw;
        lo = mid;
      }
    }
    return std::move(*best);
  }
  fail(ErrorCode::PreconditionNotMet,
       "construction conditions fail for every n up to the search ceiling");
}

JuliaApprox build_step1(const PlanarSet& set, const GreenModel& green,
                        const SetData& data, const HolderData& holder, double s,
                        const BuildOptions& opt) {
  auto attempt = [&](int n) {
    std::optional<BoundaryMesh> over;
    if (opt.mesh_size > 0) over = boundary_sample(set, opt.mesh_size);
    NodeArray nodes =
        opt.fekete
            ? discrete_fekete(set, n, over ? &*over : nullptr)
            : pseudo_leja(set, green, n, opt.C_target, over ? &*over : nullptr);
    LagrangeSystem sys = deltas(nodes);
    return build_Pn(data, holder, sys, s, green, green, 0.0, Complex(0.0),
                    opt.iteration_cap);
  };
  return with_auto_n(attempt, opt);
}

JuliaApprox build_step2(const PlanarSet& set, const GreenModel& green,
                        const HolderData& holder, double s,
                        const BuildOptions& opt) {
  std::vector<double> splits{opt.split};
  if (opt.adaptive_split && opt.n > 0)
    for (double f : {1.0 / 3.0, 0.25, 1.0 / 6.0, 0.1, 0.05})
      if (f < splits.front() - 1e-12) splits.push_back(f);

  std::optional<Error> last;
  for (double f : splits) {
    const double sp = f * s;
    auto attempt = [&](int n) {
      int M = opt.mesh_size > 0 ? opt.mesh_size : std::max(4096, 64 * (n + 1));
      BoundaryMesh mesh = sublevel_boundary(green, sp, M);
      SetData d2 = cloud_set_data(mesh.points);
      GreenModel g2 = green.sublevel(sp);
      NodeArray nodes = opt.fekete
                            ? discrete_fekete(set, n, &mesh)
                            : pseudo_leja(set, g2, n, opt.C_target, &mesh);
      LagrangeSystem sys = deltas(nodes);
      // The build set inherits E's Hoelder data: g_{E_sp} = g_E - sp off the
      // sublevel set, and g_E moves by at most A d^alpha over distance d.
      return build_Pn(d2, holder, sys, s, g2, green, sp, Complex(0.0),
                      opt.iteration_cap);
    };
    try {
      return with_auto_n(attempt, opt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionNotMet) throw;
      last = e;
    }
  }
  throw *last;
}

} // namespace

JuliaApprox build_with_shift(const PlanarSet& set, const GreenModel& green,
                             double s, const BuildOptions& opt) {
  if (!(s > 0.0)) fail(ErrorCode::InvalidInput, "rate s must be positive");
  if (!contains(set, Complex(0.0))) {
    Complex w = inset_anchor(set);
    PlanarSet moved = translate(set, -w);
    if (!contains(moved, Complex(0.0)))
      fail(ErrorCode::Internal, "translation failed to move the anchor to 0");
    JuliaApprox ja = build_with_shift(moved, translate_green(green, -w), s, opt);
    ja.translation = w;
    return ja;
  }
  SetData data = set_data(set);
  HolderData holder = holder_fit(green, set);
  if (data.inner_r && *data.inner_r > 0.0)
    return build_step1(set, green, data, holder, s, opt);
  return build_step2(set, green, holder, s, opt);
}

namespace {

NodeArray rate_nodes(const PlanarSet& set, const GreenModel& green, int n,
                     const BuildOptions& opt, const BoundaryMesh* over) {
  return opt.fekete ? discrete_fekete(set, n, over)
                    : pseudo_leja(set, green, n, opt.C_target, over);
}

} // namespace

JuliaApprox build_rate_n(const PlanarSet& set, const GreenModel& green,
                         const HolderData& holder, int n, const BuildOptions& opt) {
  if (n < 1) fail(ErrorCode::InvalidInput, "rate construction needs n >= 1");
  if (!contains(set, Complex(0.0))) {
    Complex w = inset_anchor(set);
    PlanarSet moved = translate(set, -w);
    JuliaApprox ja = build_rate_n(moved, translate_green(green, -w), holder, n, opt);
    ja.translation = w;
    return ja;
  }
  SetData data = set_data(set);
  if (data.inner_r && *data.inner_r > 0.0) {
    std::optional<BoundaryMesh> over;
    if (opt.mesh_size > 0) over = boundary_sample(set, opt.mesh_size);
    NodeArray nodes = rate_nodes(set, green, n, opt, over ? &*over : nullptr);
    LagrangeSystem sys = deltas(nodes);
    NormLn nl = norm_Ln(sys, sys.nodes.mesh);
    double s = rate_s_general(data, holder, std::log(nl.value), n);
    return build_Pn(data, holder, sys, s, green, green, 0.0, Complex(0.0),
                    opt.iteration_cap);
  }

  // 0 on the boundary: nodes go on a sublevel curve.  The level is a fraction
  // of the rate pre-estimate of E itself; smaller fractions shrink the
  // certified total s' + s until the inner-radius terms take over, so try the
  // ladder and keep the best.
  double pre = 3.0 * holder.A / std::pow(n, 2.0 * holder.alpha) +
               (9.0 / n) * std::log(n + 1.0) +
               (3.0 / n) * std::log(data.diam + 2.0);
  std::vector<double> splits{opt.split};
  if (opt.adaptive_split)
    for (double f : {1.0 / 3.0, 0.25, 1.0 / 6.0, 0.1, 0.05})
      if (f < splits.front() - 1e-12) splits.push_back(f);

  std::optional<JuliaApprox> best;
  double best_total = std::numeric_limits<double>::infinity();
  std::optional<Error> last;
  for (double f : splits) {
    const double sp = f * pre;
    try {
      int M = opt.mesh_size > 0 ? opt.mesh_size : std::max(4096, 64 * (n + 1));
      BoundaryMesh mesh = sublevel_boundary(green, sp, M);
      SetData d2 = cloud_set_data(mesh.points);
      GreenModel g2 = green.sublevel(sp);
      NodeArray nodes = rate_nodes(set, g2, n, opt, &mesh);
      LagrangeSystem sys = deltas(nodes);
      NormLn nl = norm_Ln(sys, sys.nodes.mesh);
      double s = rate_s_general(d2, holder, std::log(nl.value), n);
      if (sp + s < best_total) {
        best = build_Pn(d2, holder, sys, s, g2, green, sp, Complex(0.0),
                        opt.iteration_cap);
        best_total = sp + s;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionNotMet) throw;
      last = e;
    }
  }
  if (best) return std::move(*best);
  if (last) throw *last;
  fail(ErrorCode::PreconditionNotMet, "no sublevel split admits the construction");
}

double s_from_eps(const PlanarSet& set, const GreenModel& green, double eps) {
  if (!(eps > 0.0)) fail(ErrorCode::InvalidInput, "eps must be positive");
  BoundaryMesh bm = boundary_sample(set, 256);
  constexpr int kDirs = 24;
  double best = std::numeric_limits<double>::infinity();
  for (Complex b : bm.points)
    for (int k = 0; k < kDirs; ++k) {
      Complex cand = b + eps * std::polar(1.0, 2.0 * M_PI * k / kDirs);
      if (dist_to_set(set, cand) < 0.999 * eps) continue; // inward probe
      best = std::min(best, green.eval(cand));
    }
  if (!std::isfinite(best))
    fail(ErrorCode::MeshFailure, "no exterior probes at the requested offset");
  if (!(best > 0.0))
    fail(ErrorCode::PreconditionNotMet,
         "Green level at the eps offset is not positive");
  return 0.98 * best;
}

JuliaApprox approximate_eps(const PlanarSet& set, const GreenModel& green,
                            double eps, const BuildOptions& opt) {
  double s = s_from_eps(set, green, eps);
  BuildOptions o = opt;
  o.adaptive_split = false;
  JuliaApprox ja = build_with_shift(set, green, s, o);
  ja.eps = eps;
  return ja;
}

Certificate certify_inclusions(const JuliaApprox& ja, const PlanarSet& set,
                               int samples, std::uint64_t seed) {
  if (samples < 1) fail(ErrorCode::InvalidInput, "certification needs samples >= 1");
  Certificate cert;
  cert.cap = ja.iteration_cap;
  PlanarSet work = translate(set, -ja.translation); // build coordinates
  const double esc = ja.escape_threshold;

  // (a) sampled points of E keep bounded orbits.
  BoundaryMesh bm = boundary_sample(work, std::max(8, samples / 2));
  std::vector<Complex> pts = bm.points;
  if (static_cast<int>(pts.size()) < samples) {
    double x0 = pts[0].real(), x1 = x0, y0 = pts[0].imag(), y1 = y0;
    for (Complex p : pts) {
      x0 = std::min(x0, p.real());
      x1 = std::max(x1, p.real());
      y0 = std::min(y0, p.imag());
      y1 = std::max(y1, p.imag());
    }
    Rng rng(seed ? seed : 1);
    int want = samples - static_cast<int>(pts.size());
    // Sets with empty interior never accept: cap the rejection attempts.
    for (long t = 0; t < 64L * want && want > 0; ++t) {
      Complex c(rng.uniform(x0, x1), rng.uniform(y0, y1));
      if (contains(work, c)) {
        pts.push_back(c);
        --want;
      }
    }
  }
  cert.set_bounded.name = "set-orbits-bounded";
  cert.set_bounded.samples = static_cast<int>(pts.size());
  for (Complex z : pts)
    if (orbit_at(ja.P, z, ja.iteration_cap, ja.trap_radius, esc).escaped)
      cert.set_bounded.failures.push_back(z);

  // (b) one application of P maps the build boundary into the trap disk; by
  // the maximum principle that covers the whole build set.
  cert.one_step.name = "one-step-contraction";
  const auto& mesh = ja.sys.nodes.mesh.points;
  cert.one_step.samples = static_cast<int>(mesh.size());
  const double log_r = std::log(ja.trap_radius);
  for (Complex z : mesh)
    if (ja.P.log_abs_eval(z) > log_r + 1e-9) cert.one_step.failures.push_back(z);

  // (c) the level curve {g_E = 1.01 s} lies outside E^s, hence outside K(P).
  cert.level_escapes.name = "outer-level-escapes";
  BoundaryMesh lv =
      sublevel_boundary(ja.target_green, 1.01 * ja.s, std::max(256, samples));
  cert.level_escapes.samples = static_cast<int>(lv.points.size());
  for (Complex z : lv.points)
    if (!orbit_at(ja.P, z, ja.iteration_cap, ja.trap_radius, esc).escaped)
      cert.level_escapes.failures.push_back(z);

  return cert;
}

} // namespace japprox
