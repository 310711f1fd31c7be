#include "japprox/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "japprox/errors.hpp"
#include "japprox/parallel.hpp"

namespace japprox {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

int selection_mesh_size(int n) { return std::max(4096, 64 * (n + 1)); }

void add_log_factor(std::vector<double>& logw, const std::vector<Complex>& mesh,
                    Complex a) {
  parallel_for(mesh.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      double d = std::abs(mesh[i] - a);
      logw[i] += d > 0.0 ? std::log(d) : kNegInf;
    }
  });
}

std::pair<std::size_t, double> mesh_argmax(const std::vector<double>& logw) {
  return parallel_argmax(logw.size(), [&](std::size_t i) { return logw[i]; });
}

double min_gap(const std::vector<Complex>& pts) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      g = std::min(g, std::abs(pts[i] - pts[j]));
  return g;
}

} // namespace

NodeArray circle_leja(int n, Complex start) {
  if (n < 0) fail(ErrorCode::InvalidInput, "node count must be >= 0");
  if (std::abs(std::abs(start) - 1.0) > 1e-9)
    fail(ErrorCode::InvalidInput, "circle Leja start must lie on the unit circle");
  start /= std::abs(start);

  const int M = 4096 * (n + 1);
  NodeArray out;
  out.provenance = NodeProvenance::CircleLeja;
  out.mesh.points.reserve(M);
  for (int k = 0; k < M; ++k) {
    double ang = 2.0 * M_PI * k / M;
    out.mesh.points.push_back(start * Complex(std::cos(ang), std::sin(ang)));
  }
  out.mesh.spacing = 2.0 * M_PI / M;
  out.mesh.closed = true;

  out.points.push_back(out.mesh.points[0]);
  out.mesh_indices.push_back(0);
  std::vector<double> logw(M, 0.0);
  for (int k = 1; k <= n; ++k) {
    add_log_factor(logw, out.mesh.points, out.points.back());
    auto [idx, sup] = mesh_argmax(logw);
    // Symmetric configurations tie within rounding; break toward the smallest
    // argument so the sequence is deterministic (e.g. i before -i from 1, -1).
    std::size_t first = idx;
    for (std::size_t i = 0; i < idx; ++i)
      if (logw[i] >= sup - 1e-11) {
        first = i;
        break;
      }
    out.points.push_back(out.mesh.points[first]);
    out.mesh_indices.push_back(first);
    out.edrei.push_back(1.0); // argmax over the full mesh: realized C_k = 1
  }
  return out;
}

NodeArray pseudo_leja(const PlanarSet& set, const GreenModel& green, int n,
                      double C_target, const BoundaryMesh* mesh_override) {
  if (n < 0) fail(ErrorCode::InvalidInput, "node count must be >= 0");
  if (!(C_target >= 1.0))
    fail(ErrorCode::InvalidInput, "Edrei target must be >= 1");

  NodeArray out;
  out.provenance = NodeProvenance::PseudoLeja;
  out.mesh = mesh_override ? *mesh_override
                           : boundary_sample(set, selection_mesh_size(n));
  const auto& pts = out.mesh.points;
  const std::size_t M = pts.size();
  if (M <= static_cast<std::size_t>(n) + 1)
    fail(ErrorCode::MeshFailure, "selection mesh smaller than the node count");

  out.points.push_back(pts[0]);
  out.mesh_indices.push_back(0);
  std::vector<double> logw(M, 0.0);
  std::vector<char> covered(M);

  for (int k = 1; k <= n; ++k) {
    add_log_factor(logw, pts, out.points.back());
    double Mk = markov_bound_checked(set, green, k).value;
    double rk = std::log(2.0 - 1.0 / C_target) / Mk;
    out.markov.push_back(Mk);

    auto [sup_idx, sup] = mesh_argmax(logw);
    std::size_t best = sup_idx;
    double best_val = sup;
    if (rk >= 2.0 * out.mesh.spacing) {
      // Candidate restriction: one representative per covering disk of
      // radius rk; a forward walk suffices (extra representatives from
      // non-contiguous near points only enlarge the candidate set).
      std::fill(covered.begin(), covered.end(), 0);
      best_val = kNegInf;
      for (std::size_t i = 0; i < M; ++i) {
        if (covered[i]) continue;
        if (logw[i] > best_val) { best_val = logw[i]; best = i; }
        for (std::size_t j = i + 1; j < M && std::abs(pts[j] - pts[i]) <= rk; ++j)
          covered[j] = 1;
      }
    }
    double Ck = std::exp(sup - best_val);
    if (!(Ck <= C_target * 1.1))
      fail(ErrorCode::EdreiViolation,
           "realized Edrei constant exceeded its target beyond mesh slack");
    out.points.push_back(pts[best]);
    out.mesh_indices.push_back(best);
    out.edrei.push_back(Ck);
  }
  if (n >= 1 && !(min_gap(out.points) > 0.0))
    fail(ErrorCode::DegenerateNodes, "pseudo Leja points collided on the mesh");
  return out;
}

Complex ExteriorMap::apply(Complex u) const {
  return std::visit(
      [&](const auto& m) -> Complex {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Affine>) {
          return m.c + m.scale * u;
        } else {
          Complex ru = m.rho * u;
          return m.c + m.s * (ru + 1.0 / ru);
        }
      },
      v);
}

NodeArray conformal_image_nodes(const ExteriorMap& map, int n) {
  if (const auto* a = std::get_if<ExteriorMap::Affine>(&map.v)) {
    if (std::abs(a->scale) == 0.0)
      fail(ErrorCode::InvalidInput, "affine map must be nondegenerate");
  } else {
    const auto& j = std::get<ExteriorMap::Joukowski>(map.v);
    if (!(j.rho >= 1.0) || j.s == 0.0)
      fail(ErrorCode::InvalidInput, "Joukowski map needs rho >= 1 and s != 0");
  }

  NodeArray base = circle_leja(n, Complex(1.0));
  NodeArray out;
  out.provenance = NodeProvenance::ConformalImage;
  out.mesh_indices = base.mesh_indices;
  out.mesh.closed = base.mesh.closed;
  out.mesh.points.reserve(base.mesh.points.size());
  for (Complex u : base.mesh.points) out.mesh.points.push_back(map.apply(u));
  double gap = 0.0;
  for (std::size_t i = 0; i < out.mesh.points.size(); ++i)
    gap = std::max(gap, std::abs(out.mesh.points[(i + 1) % out.mesh.points.size()] -
                                 out.mesh.points[i]));
  out.mesh.spacing = gap;
  for (Complex u : base.points) out.points.push_back(map.apply(u));

  double scale = 1.0;
  for (Complex z : out.points) scale = std::max(scale, std::abs(z));
  if (min_gap(out.points) <= 1e-12 * scale)
    fail(ErrorCode::DegenerateNodes,
         "conformal images collide (degenerate map or conjugate pair)");

  // Realized constants relative to the mapped mesh.
  std::vector<double> logw(out.mesh.points.size(), 0.0);
  for (int k = 1; k <= n; ++k) {
    add_log_factor(logw, out.mesh.points, out.points[k - 1]);
    auto [idx, sup] = mesh_argmax(logw);
    (void)idx;
    out.edrei.push_back(std::exp(sup - logw[out.mesh_indices[k]]));
  }
  return out;
}

NodeArray discrete_fekete(const PlanarSet& set, int n,
                          const BoundaryMesh* mesh_override, int exchange_rounds) {
  if (n < 0) fail(ErrorCode::InvalidInput, "node count must be >= 0");
  NodeArray out;
  out.provenance = NodeProvenance::DiscreteFekete;
  out.mesh = mesh_override ? *mesh_override
                           : boundary_sample(set, selection_mesh_size(n));
  const auto& pts = out.mesh.points;
  const std::size_t M = pts.size();
  if (4 * (static_cast<std::size_t>(n) + 1) > M)
    fail(ErrorCode::MeshFailure, "selection mesh must hold at least 4(n+1) points");

  std::vector<std::size_t> idx;
  idx.push_back(0);
  std::vector<double> S(M, 0.0); // S(z) = sum_k log|z - a_k| over current nodes
  for (int k = 1; k <= n; ++k) {
    add_log_factor(S, pts, pts[idx.back()]);
    idx.push_back(mesh_argmax(S).first);
  }
  add_log_factor(S, pts, pts[idx.back()]);

  auto slot_value = [&](std::size_t slot) {
    double v = 0.0;
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (j != slot) v += std::log(std::abs(pts[idx[slot]] - pts[idx[j]]));
    return v;
  };

  for (int round = 0; round < exchange_rounds; ++round) {
    bool moved = false;
    for (std::size_t slot = 0; slot <= static_cast<std::size_t>(n); ++slot) {
      // argmax over mesh of S(z) - log|z - a_slot| = Vandermonde increment
      // of replacing slot by z; the slot's own contribution is removed.
      Complex a_old = pts[idx[slot]];
      auto [best, best_val] = parallel_argmax(M, [&](std::size_t i) {
        double d = std::abs(pts[i] - a_old);
        return d > 0.0 ? S[i] - std::log(d) : kNegInf;
      });
      if (best == idx[slot]) continue;
      double cur_val = slot_value(slot);
      if (best_val > cur_val + 1e-12 * std::max(1.0, std::abs(cur_val))) {
        parallel_for(M, [&](std::size_t b, std::size_t e) {
          for (std::size_t i = b; i < e; ++i) {
            double d_old = std::abs(pts[i] - a_old);
            double d_new = std::abs(pts[i] - pts[best]);
            S[i] += (d_new > 0.0 ? std::log(d_new) : kNegInf) -
                    (d_old > 0.0 ? std::log(d_old) : kNegInf);
          }
        });
        idx[slot] = best;
        moved = true;
      }
    }
    if (!moved) break;
    // refresh S to shed accumulated +-log rounding
    std::fill(S.begin(), S.end(), 0.0);
    for (std::size_t j = 0; j < idx.size(); ++j) add_log_factor(S, pts, pts[idx[j]]);
  }

  for (std::size_t i : idx) out.points.push_back(pts[i]);
  out.mesh_indices = idx;

  // Reorder so index 0 attains min_k |Delta^(k)| (swapping points permutes
  // nothing but the labels).
  std::size_t jmin = 0;
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < out.points.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < out.points.size(); ++j)
      if (j != k) s += std::log(std::abs(out.points[k] - out.points[j]));
    if (s < dmin) { dmin = s; jmin = k; }
  }
  std::swap(out.points[0], out.points[jmin]);
  std::swap(out.mesh_indices[0], out.mesh_indices[jmin]);
  return out;
}

NodeArray roots_of_unity_nodes(int n, Complex center, double radius) {
  if (n < 0) fail(ErrorCode::InvalidInput, "node count must be >= 0");
  if (!(radius > 0.0)) fail(ErrorCode::InvalidInput, "radius must be positive");
  NodeArray out;
  out.provenance = NodeProvenance::DiscreteFekete;
  for (int k = 0; k <= n; ++k) {
    double ang = 2.0 * M_PI * k / (n + 1);
    out.points.push_back(center + radius * Complex(std::cos(ang), std::sin(ang)));
  }
  out.mesh = boundary_sample(PlanarSet::disk(center, radius), 4096);
  return out;
}

SeparationSigma separation_sigma(const NodeArray& nodes, int k) {
  if (nodes.provenance != NodeProvenance::PseudoLeja &&
      nodes.provenance != NodeProvenance::CircleLeja)
    fail(ErrorCode::PreconditionNotMet,
         "separation bound needs recorded Edrei constants (pseudo Leja)");
  if (k < 1 || k > nodes.n())
    fail(ErrorCode::InvalidInput, "separation index out of range");
  SeparationSigma s;
  s.sigma = std::numeric_limits<double>::infinity();
  for (int j = 0; j < k; ++j)
    s.sigma = std::min(s.sigma, std::abs(nodes.points[k] - nodes.points[j]));
  double Ck = nodes.edrei[k - 1];
  double Mk = nodes.markov.empty() ? static_cast<double>(k) // circle: exact n/r, r = 1
                                   : nodes.markov[k - 1];
  s.bound_log = std::log1p(1.0 / Ck) / Mk;
  s.bound_simple = 1.0 / (2.0 * Ck * Mk);
  s.ok = s.sigma >= s.bound_log * (1.0 - 1e-12) &&
         s.sigma >= s.bound_simple * (1.0 - 1e-12);
  return s;
}

RhoSeparation separation_rho(const NodeArray& nodes, const GreenModel& green, int n) {
  if (nodes.provenance != NodeProvenance::PseudoLeja &&
      nodes.provenance != NodeProvenance::CircleLeja)
    fail(ErrorCode::PreconditionNotMet,
         "rho separation needs recorded Edrei constants (pseudo Leja)");
  if (n < 1 || n > nodes.n())
    fail(ErrorCode::InvalidInput, "rho separation index out of range");

  double level = std::log1p(1.0 / n);
  std::function<double(Complex)> rho;
  std::vector<Complex> trace;
  if (const DiskSource* d = std::get_if<DiskSource>(&green.source());
      d && green.shift() == 0.0) {
    double level_r = d->radius * std::exp(level);
    Complex c = d->center;
    rho = [level_r, c](Complex z) { return std::abs(std::abs(z - c) - level_r); };
  } else {
    trace = sublevel_boundary(green, level, 1024).points;
    rho = [&trace](Complex z) {
      double best = std::numeric_limits<double>::infinity();
      for (Complex p : trace) best = std::min(best, std::abs(z - p));
      return best;
    };
  }

  double Cn = nodes.edrei[n - 1];
  double factor = 1.0 / (2.0 * std::exp(1.0) * Cn);
  RhoSeparation rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  double rho_n = rho(nodes.points[n]);
  for (int j = 0; j < n; ++j) {
    double lhs = std::abs(nodes.points[j] - nodes.points[n]);
    double rhs = factor * std::max(rho(nodes.points[j]), rho_n);
    if (rhs <= 0.0) continue;
    double margin = lhs / rhs;
    rep.min_margin = std::min(rep.min_margin, margin);
    if (margin < 1.0 - 1e-9) rep.violations += 1;
  }
  return rep;
}

} // namespace japprox
