#include "japprox/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "japprox/errors.hpp"
#include "japprox/parallel.hpp"

namespace japprox {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

Complex LogMagnitude::value() const {
  if (log_abs == kNegInf) return Complex(0.0);
  return phase * std::exp(log_abs);
}

LogMagnitude LogMagnitude::of(Complex v) {
  double a = std::abs(v);
  if (a == 0.0) return {kNegInf, Complex(1.0)};
  return {std::log(a), v / a};
}

LogMagnitude nodal_eval(const NodeArray& nodes, Complex z) {
  LogMagnitude w{0.0, Complex(1.0)};
  for (Complex zeta : nodes.points) w = w * LogMagnitude::of(z - zeta);
  return w;
}

LagrangeSystem deltas(const NodeArray& nodes) {
  const auto& pts = nodes.points;
  const std::size_t m = pts.size();
  if (m < 2) fail(ErrorCode::InvalidInput, "need at least two nodes");

  double diam = cloud_diameter(pts);
  double min_allowed = 1e-14 * diam;
  LagrangeSystem sys;
  sys.nodes = nodes;
  sys.deltas.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    LogMagnitude d{0.0, Complex(1.0)};
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      Complex gap = pts[k] - pts[j];
      if (std::abs(gap) < min_allowed)
        fail(ErrorCode::DegenerateNodes, "node gap below 1e-14 of the diameter");
      d = d * LogMagnitude::of(gap);
    }
    sys.deltas[k] = d;
  }
  sys.j_n = 0;
  for (std::size_t k = 1; k < m; ++k)
    if (sys.deltas[k].log_abs < sys.deltas[sys.j_n].log_abs)
      sys.j_n = static_cast<int>(k);
  // symmetric node sets tie within rounding: settle on the first such index
  for (std::size_t k = 0; k < static_cast<std::size_t>(sys.j_n); ++k)
    if (sys.deltas[k].log_abs <= sys.deltas[sys.j_n].log_abs + 1e-12) {
      sys.j_n = static_cast<int>(k);
      break;
    }

  if (m <= 17) {
    // Delta^(k) = w'(zeta_k): expand the nodal polynomial and compare.
    ComplexPoly w({-pts[0], Complex(1.0)});
    for (std::size_t k = 1; k < m; ++k)
      w = w * ComplexPoly({-pts[k], Complex(1.0)});
    ComplexPoly dw = w.derivative();
    for (std::size_t k = 0; k < m; ++k) {
      double ref = std::abs(dw.eval(pts[k]));
      double got = std::exp(sys.deltas[k].log_abs);
      if (std::abs(ref - got) > 1e-7 * std::max(1.0, std::max(ref, got)))
        fail(ErrorCode::Internal, "Delta disagrees with the expanded w'(zeta_k)");
    }
  }
  return sys;
}

double vandermonde_log(const NodeArray& nodes) {
  const auto& pts = nodes.points;
  if (pts.size() < 2) fail(ErrorCode::InvalidInput, "need at least two nodes");
  double direct = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j)
    for (std::size_t k = j + 1; k < pts.size(); ++k)
      direct += std::log(std::abs(pts[j] - pts[k]));
  LagrangeSystem sys = deltas(nodes);
  double half_sum = 0.0;
  for (const auto& d : sys.deltas) half_sum += d.log_abs;
  half_sum *= 0.5;
  if (std::abs(direct - half_sum) > 1e-9 * std::max(1.0, std::abs(direct)))
    fail(ErrorCode::Internal, "log V disagrees with (1/2) sum of Deltas");
  return half_sum;
}

LagrangeValue lagrange_eval(const LagrangeSystem& sys, int j, Complex z) {
  const auto& pts = sys.nodes.points;
  const int m = static_cast<int>(pts.size());
  if (j < 0 || j >= m) fail(ErrorCode::InvalidInput, "Lagrange index out of range");

  std::vector<Complex> num, den;
  num.reserve(m - 1);
  den.reserve(m - 1);
  for (int k = 0; k < m; ++k) {
    if (k == j) continue;
    num.push_back(z - pts[k]);
    den.push_back(pts[j] - pts[k]);
  }
  auto by_abs = [](Complex a, Complex b) { return std::norm(a) < std::norm(b); };
  std::sort(num.begin(), num.end(), by_abs);
  std::sort(den.begin(), den.end(), by_abs);

  double log_abs = 0.0;
  double log_extra = 0.0;
  Complex prod(1.0);
  for (std::size_t i = 0; i < num.size(); ++i) {
    double an = std::abs(num[i]);
    log_abs += (an > 0.0 ? std::log(an) : kNegInf) - std::log(std::abs(den[i]));
    prod *= num[i] / den[i];
    double ap = std::abs(prod);
    if (ap > 1e100 || (ap < 1e-100 && ap > 0.0)) {
      log_extra += std::log(ap);
      prod /= ap;
    }
  }
  Complex value = prod;
  if (log_extra != 0.0) value *= std::exp(log_extra);
  return {value, log_abs};
}

double lebesgue_function(const LagrangeSystem& sys, Complex z) {
  const auto& pts = sys.nodes.points;
  const int m = static_cast<int>(pts.size());
  double logw = 0.0;
  std::vector<double> gaps(m);
  for (int k = 0; k < m; ++k) {
    gaps[k] = std::abs(z - pts[k]);
    if (gaps[k] == 0.0) return 1.0; // cardinal property, exact at nodes
    logw += std::log(gaps[k]);
  }
  // |L^(j)(z)| = |w(z)| / (|z - zeta_j| |Delta_j|); sum with the largest
  // exponent factored out so the sum itself cannot overflow.
  double tmax = kNegInf;
  std::vector<double> t(m);
  for (int k = 0; k < m; ++k) {
    t[k] = logw - std::log(gaps[k]) - sys.deltas[k].log_abs;
    tmax = std::max(tmax, t[k]);
  }
  double acc = 0.0;
  for (int k = 0; k < m; ++k) acc += std::exp(t[k] - tmax);
  return std::exp(tmax) * acc;
}

double lebesgue_constant(const LagrangeSystem& sys, const BoundaryMesh& mesh) {
  if (mesh.points.empty()) fail(ErrorCode::InvalidInput, "empty evaluation mesh");
  return parallel_argmax(mesh.points.size(),
                         [&](std::size_t i) {
                           return lebesgue_function(sys, mesh.points[i]);
                         })
      .second;
}

LebesgueReport lebesgue_constant_refined(const LagrangeSystem& sys,
                                         const PlanarSet& set, int m) {
  BoundaryMesh coarse = boundary_sample(set, m);
  BoundaryMesh fine = boundary_sample(set, 2 * m);
  return {lebesgue_constant(sys, coarse), lebesgue_constant(sys, fine)};
}

std::pair<double, double> main_theorem_diagnostic(const LagrangeSystem& sys,
                                                  const BoundaryMesh& mesh,
                                                  double cap) {
  if (!(cap > 0.0)) fail(ErrorCode::InvalidInput, "capacity must be positive");
  int n = sys.n();
  if (n < 1) fail(ErrorCode::InvalidInput, "need n >= 1");
  double lam = lebesgue_constant(sys, mesh);
  double min_delta_root = std::exp(sys.deltas[sys.j_n].log_abs / n);
  return {std::pow(lam, 1.0 / n), min_delta_root / cap};
}

double max_delta_diagnostic(const LagrangeSystem& sys, double cap) {
  if (!(cap > 0.0)) fail(ErrorCode::InvalidInput, "capacity must be positive");
  int n = sys.n();
  if (n < 1) fail(ErrorCode::InvalidInput, "need n >= 1");
  double mx = kNegInf;
  for (const auto& d : sys.deltas) mx = std::max(mx, d.log_abs);
  return std::exp(mx / n) / cap;
}

NormLn norm_Ln(const LagrangeSystem& sys, const BoundaryMesh& mesh) {
  if (mesh.points.empty()) fail(ErrorCode::InvalidInput, "empty evaluation mesh");
  double sup = parallel_argmax(mesh.points.size(),
                               [&](std::size_t i) {
                                 return lagrange_eval(sys, sys.j_n, mesh.points[i])
                                     .log_abs;
                               })
                   .second;
  sup = std::max(sup, 0.0); // attained at the node itself, |L| = 1 there
  int n = std::max(1, sys.n());
  return {std::exp(sup), std::exp(sup / n)};
}

BoundsReport bounds_check(const LagrangeSystem& sys, const GreenModel& green,
                          const HolderData& holder, const PlanarSet& set,
                          const BoundaryMesh& mesh, Complex z) {
  int n = sys.n();
  if (n < 1) fail(ErrorCode::InvalidInput, "need n >= 1");
  double dn = 1.0 / (static_cast<double>(n) * n);
  if (dist_to_set(set, z) < dn)
    fail(ErrorCode::PreconditionNotMet,
         "z outside D_n: dist(z, set) < 1/n^2 so the bracket does not apply");

  BoundsReport rep;
  rep.value = green.eval(z) - lagrange_eval(sys, sys.j_n, z).log_abs / n;
  rep.lower = -std::log(norm_Ln(sys, mesh).value) / n;
  rep.upper = (3.0 / n) * std::log((n + 1) * theta(set)) + modulus_bound(holder, dn);
  rep.fekete = sys.nodes.provenance == NodeProvenance::DiscreteFekete;
  rep.ok = rep.value >= rep.lower - 1e-8 && rep.value <= rep.upper + 1e-12 &&
           (!rep.fekete || rep.value >= -1e-8);
  return rep;
}

LebesgueDiagnostic lebesgue_diagnostic(const LagrangeSystem& sys,
                                       const BoundaryMesh& mesh, double cap) {
  LebesgueDiagnostic d;
  d.n = sys.n();
  d.lebesgue_const = lebesgue_constant(sys, mesh);
  d.lebesgue_root = std::pow(d.lebesgue_const, 1.0 / d.n);
  auto [lam_root, min_root] = main_theorem_diagnostic(sys, mesh, cap);
  (void)lam_root;
  d.min_delta_root_over_cap = min_root;
  d.max_delta_root_over_cap = max_delta_diagnostic(sys, cap);
  d.norm_Ln_root = norm_Ln(sys, mesh).root;
  return d;
}

GreenModel green_for(const PlanarSet& set, int surrogate_degree) {
  if (const auto* d = set.get_if<Disk>())
    return GreenModel::disk(d->center, d->radius);
  if (const auto* s = set.get_if<Segment>()) return GreenModel::segment(s->a, s->b);
  if (const auto* p = set.get_if<PolyPreimage>()) return GreenModel::preimage(p->p);
  if (const auto* u = set.get_if<UnionOfDisks>()) {
    // A disk containing every other one carries the exact Green function.
    for (const Disk& big : u->disks) {
      bool covers = true;
      for (const Disk& d : u->disks)
        if (std::abs(d.center - big.center) + d.radius >
            big.radius * (1.0 + 1e-12))
          covers = false;
      if (covers) return GreenModel::disk(big.center, big.radius);
    }
  }

  // Polygon / union of disks: n-th-root surrogate from a discrete Fekete
  // nodal polynomial, g ~ (1/m) log(|w_m(z)| / ||w_m||), capacity from the
  // transfinite-diameter estimate V^(2/(m(m+1))).
  int m = std::max(8, surrogate_degree);
  NodeArray fk = discrete_fekete(set, m);
  const std::size_t m1 = fk.points.size();
  double log_norm =
      parallel_argmax(fk.mesh.points.size(),
                      [&](std::size_t i) {
                        return nodal_eval(fk, fk.mesh.points[i]).log_abs;
                      })
          .second;
  double log_v = vandermonde_log(fk);
  double cap_est = std::exp(2.0 * log_v / (static_cast<double>(m1) * (m1 - 1)));

  Complex anchor(0.0);
  for (Complex p : fk.mesh.points) anchor += p;
  anchor /= static_cast<double>(fk.mesh.points.size());

  std::vector<Complex> pts = fk.points;
  auto eval = [pts, log_norm, m1](Complex z) {
    double s = 0.0;
    for (Complex p : pts) {
      double a = std::abs(z - p);
      if (a == 0.0) return 0.0;
      s += std::log(a);
    }
    return std::max(0.0, (s - log_norm) / static_cast<double>(m1));
  };
  double err = (3.0 / m) * std::log((m + 1) * theta(set));
  return GreenModel::custom(std::move(eval), cap_est, anchor, -err, err, m);
}

} // namespace japprox
