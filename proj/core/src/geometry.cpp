#include "japprox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "japprox/errors.hpp"

namespace japprox {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double geom_tol(double scale) { return 1e-12 * std::max(1.0, scale); }

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorCode::InvalidInput, std::string(what) + " is not finite");
}

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool on_segment_collinear(Complex p, Complex a, Complex b) {
  return std::min(a.real(), b.real()) - 1e-15 <= p.real() &&
         p.real() <= std::max(a.real(), b.real()) + 1e-15 &&
         std::min(a.imag(), b.imag()) - 1e-15 <= p.imag() &&
         p.imag() <= std::max(a.imag(), b.imag()) + 1e-15;
}

bool segments_intersect(Complex a, Complex b, Complex c, Complex d) {
  double d1 = cross(c, d, a), d2 = cross(c, d, b);
  double d3 = cross(a, b, c), d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment_collinear(a, c, d)) return true;
  if (d2 == 0 && on_segment_collinear(b, c, d)) return true;
  if (d3 == 0 && on_segment_collinear(c, a, b)) return true;
  if (d4 == 0 && on_segment_collinear(d, a, b)) return true;
  return false;
}

double polygon_signed_area(const std::vector<Complex>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex& p = v[i];
    const Complex& q = v[(i + 1) % v.size()];
    s += p.real() * q.imag() - q.real() * p.imag();
  }
  return 0.5 * s;
}

bool polygon_contains_strict(const std::vector<Complex>& v, Complex z) {
  // Crossing-number parity with the half-open edge rule.
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    bool straddles = (v[i].imag() > z.imag()) != (v[j].imag() > z.imag());
    if (straddles) {
      double x = v[j].real() + (z.imag() - v[j].imag()) /
                                   (v[i].imag() - v[j].imag()) *
                                   (v[i].real() - v[j].real());
      if (z.real() < x) inside = !inside;
    }
  }
  return inside;
}

double polygon_boundary_dist(const std::vector<Complex>& v, Complex z) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    d = std::min(d, detail::point_segment_dist(z, v[i], v[(i + 1) % v.size()]));
  return d;
}

// --- filled polynomial preimage boundary trace ------------------------------

// Outside |z| > radius the magnitude |p| exceeds 1, so every boundary ray
// crossing happens before it.
double preimage_outer_bound(const ComplexPoly& p) {
  double s = 0.0;
  for (int k = 0; k < p.degree(); ++k) s += std::abs(p.coeffs()[k]);
  return std::max(1.0, (1.0 + s) / std::abs(p.lead()));
}

std::vector<Complex> cluster_points(std::vector<Complex> pts, double tol) {
  std::vector<Complex> reps;
  for (Complex z : pts) {
    bool dup = false;
    for (Complex r : reps)
      if (std::abs(z - r) <= tol) { dup = true; break; }
    if (!dup) reps.push_back(z);
  }
  return reps;
}

std::vector<Complex> trace_preimage(const ComplexPoly& p, int m) {
  if (m < 4) fail(ErrorCode::InvalidInput, "preimage boundary sample needs m >= 4");
  double bound = preimage_outer_bound(p);
  std::vector<Complex> roots = p.roots();
  std::vector<Complex> reps = cluster_points(std::move(roots), 1e-8 * bound);
  if (reps.empty()) fail(ErrorCode::MeshFailure, "preimage polynomial has no roots");

  int per = m / static_cast<int>(reps.size());
  int extra = m - per * static_cast<int>(reps.size());
  if (per == 0) fail(ErrorCode::MeshFailure, "mesh size below root-cluster count");

  std::vector<Complex> out;
  out.reserve(m);
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    int rays = per + (static_cast<int>(ri) < extra ? 1 : 0);
    Complex x0 = reps[ri];
    double t_max = std::abs(x0) + bound + 1.0;
    ComplexPoly dp = p.derivative();
    for (int k = 0; k < rays; ++k) {
      double ang = kTwoPi * k / rays;
      Complex dir(std::cos(ang), std::sin(ang));
      auto f = [&](double t) { return p.log_abs_eval(x0 + t * dir); };
      // Bracket the first |p| = 1 crossing by outward marching.
      double t0 = 1e-9 * (1.0 + std::abs(x0));
      while (f(t0) >= 0.0 && t0 > 1e-300) t0 *= 0.25; // start strictly inside
      double lo = t0, hi = t0;
      bool bracketed = false;
      for (double t = std::max(t0 * 2.0, 1e-6 * bound); t <= t_max * 1.01; t *= 1.25) {
        if (f(t) > 0.0) { hi = t; bracketed = true; break; }
        lo = t;
      }
      if (!bracketed)
        fail(ErrorCode::MeshFailure, "preimage boundary ray failed to exit the set");
      // Bisection with a Newton polish on log|p| along the ray.
      for (int it = 0; it < 200 && (hi - lo) > 1e-17 * (1.0 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? hi : lo) = mid;
      }
      double t = 0.5 * (lo + hi);
      for (int it = 0; it < 4; ++it) {
        Complex z = x0 + t * dir;
        Complex pz = p.eval(z);
        double apz = std::abs(pz);
        if (apz == 0.0) break;
        double deriv = (dp.eval(z) / pz * dir).real();
        if (!std::isfinite(deriv) || deriv == 0.0) break;
        double step = std::log(apz) / deriv;
        double tn = t - step;
        if (tn <= lo || tn >= hi) break; // keep the bisection bracket authoritative
        t = tn;
      }
      out.push_back(x0 + t * dir);
    }
  }
  return out;
}

double max_consecutive_gap(const std::vector<Complex>& pts, bool closed) {
  double g = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    g = std::max(g, std::abs(pts[i + 1] - pts[i]));
  if (closed && pts.size() > 1) g = std::max(g, std::abs(pts.front() - pts.back()));
  return g;
}

double point_arc_dist(Complex z, Complex c, double r, double lo, double hi) {
  double ang = std::atan2((z - c).imag(), (z - c).real());
  double rel = ang - lo;
  rel -= kTwoPi * std::floor(rel / kTwoPi);
  if (rel <= hi - lo) return std::abs(std::abs(z - c) - r);
  Complex e0 = c + r * Complex(std::cos(lo), std::sin(lo));
  Complex e1 = c + r * Complex(std::cos(hi), std::sin(hi));
  return std::min(std::abs(z - e0), std::abs(z - e1));
}

} // namespace

namespace detail {

double point_segment_dist(Complex z, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

std::vector<CircleArcs> outer_arcs(const UnionOfDisks& u) {
  std::vector<CircleArcs> result;
  for (std::size_t i = 0; i < u.disks.size(); ++i) {
    const Disk& di = u.disks[i];
    bool fully_covered = false;
    std::vector<std::pair<double, double>> covered;
    for (std::size_t j = 0; j < u.disks.size() && !fully_covered; ++j) {
      if (j == i) continue;
      const Disk& dj = u.disks[j];
      double d = std::abs(dj.center - di.center);
      if (d + di.radius < dj.radius) { fully_covered = true; break; }
      if (d >= di.radius + dj.radius) continue; // touches at most one point
      if (d + dj.radius <= di.radius) continue; // j inside i, covers nothing
      double ca = (di.radius * di.radius + d * d - dj.radius * dj.radius) /
                  (2.0 * di.radius * d);
      if (ca >= 1.0) continue;
      double psi = std::acos(std::clamp(ca, -1.0, 1.0));
      double phi = std::atan2((dj.center - di.center).imag(),
                              (dj.center - di.center).real());
      double lo = phi - psi, hi = phi + psi;
      // normalize to [0, 2pi), splitting wrapped intervals
      lo -= kTwoPi * std::floor(lo / kTwoPi);
      hi = lo + 2.0 * psi;
      if (hi <= kTwoPi) {
        covered.emplace_back(lo, hi);
      } else {
        covered.emplace_back(lo, kTwoPi);
        covered.emplace_back(0.0, hi - kTwoPi);
      }
    }
    CircleArcs ca;
    ca.disk = i;
    if (fully_covered) { result.push_back(std::move(ca)); continue; }
    if (covered.empty()) {
      ca.arcs.emplace_back(0.0, kTwoPi);
      result.push_back(std::move(ca));
      continue;
    }
    std::sort(covered.begin(), covered.end());
    std::vector<std::pair<double, double>> merged;
    for (auto& iv : covered) {
      if (!merged.empty() && iv.first <= merged.back().second)
        merged.back().second = std::max(merged.back().second, iv.second);
      else
        merged.push_back(iv);
    }
    double cursor = 0.0;
    for (auto& iv : merged) {
      if (iv.first > cursor) ca.arcs.emplace_back(cursor, iv.first);
      cursor = std::max(cursor, iv.second);
    }
    if (cursor < kTwoPi) ca.arcs.emplace_back(cursor, kTwoPi);
    // stitch a wrap-around pair [a, 2pi) + [0, b) into one arc [a, b + 2pi)
    if (ca.arcs.size() >= 2 && ca.arcs.front().first == 0.0 &&
        ca.arcs.back().second == kTwoPi) {
      ca.arcs.back().second = kTwoPi + ca.arcs.front().second;
      ca.arcs.erase(ca.arcs.begin());
    }
    result.push_back(std::move(ca));
  }
  return result;
}

} // namespace detail

// --- construction & validation ----------------------------------------------

PlanarSet PlanarSet::disk(Complex center, double radius) {
  require_finite(center, "disk center");
  if (!(radius > 0.0) || !std::isfinite(radius))
    fail(ErrorCode::InvalidInput, "disk radius must be positive and finite");
  return PlanarSet(Disk{center, radius});
}

PlanarSet PlanarSet::segment(Complex a, Complex b) {
  require_finite(a, "segment endpoint");
  require_finite(b, "segment endpoint");
  if (std::abs(a - b) == 0.0)
    fail(ErrorCode::InvalidInput, "segment endpoints coincide (diameter 0)");
  return PlanarSet(Segment{a, b});
}

PlanarSet PlanarSet::polygon(std::vector<Complex> vertices) {
  if (vertices.size() < 3)
    fail(ErrorCode::InvalidInput, "polygon needs at least 3 vertices");
  for (Complex v : vertices) require_finite(v, "polygon vertex");
  std::size_t n = vertices.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(vertices[i] - vertices[(i + 1) % n]));
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(vertices[i] - vertices[(i + 1) % n]) <= 1e-14 * scale)
      fail(ErrorCode::InvalidInput, "polygon has a degenerate edge");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(vertices[i], vertices[(i + 1) % n], vertices[j],
                             vertices[(j + 1) % n]))
        fail(ErrorCode::InvalidInput, "polygon not simple");
    }
  }
  double area = polygon_signed_area(vertices);
  if (std::abs(area) <= 1e-14 * scale * scale)
    fail(ErrorCode::InvalidInput, "polygon is degenerate (zero area)");
  if (area < 0.0) std::reverse(vertices.begin(), vertices.end());
  return PlanarSet(SimplePolygon{std::move(vertices)});
}

PlanarSet PlanarSet::union_of_disks(std::vector<Disk> disks) {
  if (disks.empty())
    fail(ErrorCode::InvalidInput, "union of disks needs at least one disk");
  std::vector<Disk> kept;
  for (const Disk& d : disks) {
    require_finite(d.center, "disk center");
    if (!(d.radius > 0.0) || !std::isfinite(d.radius))
      fail(ErrorCode::InvalidInput, "disk radius must be positive and finite");
    bool dup = false;
    for (const Disk& k : kept)
      if (std::abs(k.center - d.center) <= 1e-14 * (k.radius + d.radius) &&
          std::abs(k.radius - d.radius) <= 1e-14 * (k.radius + d.radius))
        dup = true;
    if (!dup) kept.push_back(d);
  }
  return PlanarSet(UnionOfDisks{std::move(kept)});
}

PlanarSet PlanarSet::poly_preimage(ComplexPoly p) {
  if (p.degree() < 1)
    fail(ErrorCode::InvalidInput, "preimage polynomial must be non-constant");
  PolyPreimage pre{std::move(p), {}};
  pre.cached_boundary = trace_preimage(pre.p, 4096);
  return PlanarSet(std::move(pre));
}

// --- scalar summaries --------------------------------------------------------

double diameter(const PlanarSet& set) {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return 2.0 * s.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return std::abs(s.a - s.b);
        } else if constexpr (std::is_same_v<T, SimplePolygon>) {
          double d = 0.0;
          for (std::size_t i = 0; i < s.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
              d = std::max(d, std::abs(s.vertices[i] - s.vertices[j]));
          return d;
        } else if constexpr (std::is_same_v<T, UnionOfDisks>) {
          double d = 0.0;
          for (std::size_t i = 0; i < s.disks.size(); ++i)
            for (std::size_t j = i; j < s.disks.size(); ++j)
              d = std::max(d, std::abs(s.disks[i].center - s.disks[j].center) +
                                  s.disks[i].radius + s.disks[j].radius);
          return d;
        } else {
          return cloud_diameter(s.cached_boundary);
        }
      },
      set.v());
}

double theta(const PlanarSet& set) { return std::cbrt(2.0 + diameter(set)); }

double outer_radius(const PlanarSet& set) {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return std::abs(s.center) + s.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return std::max(std::abs(s.a), std::abs(s.b));
        } else if constexpr (std::is_same_v<T, SimplePolygon>) {
          double r = 0.0;
          for (Complex v : s.vertices) r = std::max(r, std::abs(v));
          return r;
        } else if constexpr (std::is_same_v<T, UnionOfDisks>) {
          double r = 0.0;
          for (const Disk& d : s.disks) r = std::max(r, std::abs(d.center) + d.radius);
          return r;
        } else {
          double r = 0.0;
          for (Complex z : s.cached_boundary) r = std::max(r, std::abs(z));
          return r;
        }
      },
      set.v());
}

double inner_radius(const PlanarSet& set) {
  if (const Disk* d = set.get_if<Disk>()) {
    if (std::abs(d->center) >= d->radius)
      fail(ErrorCode::PreconditionNotMet, "origin not interior to the disk");
    return d->radius - std::abs(d->center);
  }
  if (set.get_if<Segment>())
    fail(ErrorCode::PreconditionNotMet, "segment has empty interior");
  if (const SimplePolygon* p = set.get_if<SimplePolygon>()) {
    double bd = polygon_boundary_dist(p->vertices, Complex(0.0));
    if (!polygon_contains_strict(p->vertices, Complex(0.0)) || bd == 0.0)
      fail(ErrorCode::PreconditionNotMet, "origin not interior to the polygon");
    return bd;
  }
  if (const UnionOfDisks* u = set.get_if<UnionOfDisks>()) {
    bool inside = false;
    for (const Disk& d : u->disks)
      if (std::abs(d.center) < d.radius) inside = true;
    if (!inside)
      fail(ErrorCode::PreconditionNotMet, "origin not interior to the union");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ca : detail::outer_arcs(*u))
      for (const auto& arc : ca.arcs)
        best = std::min(best, point_arc_dist(Complex(0.0), u->disks[ca.disk].center,
                                             u->disks[ca.disk].radius, arc.first,
                                             arc.second));
    return best;
  }
  const PolyPreimage& pre = *set.get_if<PolyPreimage>();
  if (std::abs(pre.p.eval(Complex(0.0))) >= 1.0)
    fail(ErrorCode::PreconditionNotMet, "origin not interior to the preimage set");
  double best = std::numeric_limits<double>::infinity();
  for (Complex z : pre.cached_boundary) best = std::min(best, std::abs(z));
  return best;
}

// --- predicates --------------------------------------------------------------

bool contains(const PlanarSet& set, Complex z) {
  double tol = geom_tol(diameter(set));
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return std::abs(z - s.center) <= s.radius + tol;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return detail::point_segment_dist(z, s.a, s.b) <= tol;
        } else if constexpr (std::is_same_v<T, SimplePolygon>) {
          if (polygon_boundary_dist(s.vertices, z) <= tol) return true;
          return polygon_contains_strict(s.vertices, z);
        } else if constexpr (std::is_same_v<T, UnionOfDisks>) {
          for (const Disk& d : s.disks)
            if (std::abs(z - d.center) <= d.radius + tol) return true;
          return false;
        } else {
          return std::abs(s.p.eval(z)) <= 1.0 + tol;
        }
      },
      set.v());
}

double dist_to_set(const PlanarSet& set, Complex z) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return std::max(0.0, std::abs(z - s.center) - s.radius);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return detail::point_segment_dist(z, s.a, s.b);
        } else if constexpr (std::is_same_v<T, SimplePolygon>) {
          if (polygon_contains_strict(s.vertices, z)) return 0.0;
          return polygon_boundary_dist(s.vertices, z);
        } else if constexpr (std::is_same_v<T, UnionOfDisks>) {
          double d = std::numeric_limits<double>::infinity();
          for (const Disk& k : s.disks)
            d = std::min(d, std::max(0.0, std::abs(z - k.center) - k.radius));
          return d;
        } else {
          // Mesh fallback: exact inside, within one cached-mesh spacing outside.
          if (std::abs(s.p.eval(z)) <= 1.0) return 0.0;
          double d = std::numeric_limits<double>::infinity();
          for (Complex b : s.cached_boundary) d = std::min(d, std::abs(z - b));
          return d;
        }
      },
      set.v());
}

// --- boundary sampling -------------------------------------------------------

BoundaryMesh boundary_sample(const PlanarSet& set, int m) {
  if (m < 2) fail(ErrorCode::InvalidInput, "boundary sample needs m >= 2");
  BoundaryMesh mesh;
  if (const Disk* d = set.get_if<Disk>()) {
    mesh.points.reserve(m);
    for (int k = 0; k < m; ++k) {
      double ang = kTwoPi * k / m;
      mesh.points.push_back(d->center + d->radius * Complex(std::cos(ang), std::sin(ang)));
    }
    mesh.spacing = kTwoPi * d->radius / m;
    mesh.closed = true;
    return mesh;
  }
  if (const Segment* s = set.get_if<Segment>()) {
    // Chebyshev-Lobatto abscissae mapped onto the segment; endpoints included.
    // Odd counts also include the midpoint, which extremal node selections
    // (the Fekete triple, equispaced examples) must be able to hit exactly.
    if (m % 2 == 0) ++m;
    Complex mid = 0.5 * (s->a + s->b), half = 0.5 * (s->b - s->a);
    mesh.points.reserve(m);
    for (int k = 0; k < m; ++k)
      mesh.points.push_back(mid + half * std::cos(M_PI * k / (m - 1)));
    mesh.spacing = max_consecutive_gap(mesh.points, false);
    mesh.closed = false;
    return mesh;
  }
  if (const SimplePolygon* p = set.get_if<SimplePolygon>()) {
    const auto& v = p->vertices;
    std::size_t n = v.size();
    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      cum[i + 1] = cum[i] + std::abs(v[(i + 1) % n] - v[i]);
    double perim = cum[n];
    mesh.points.reserve(m);
    std::size_t edge = 0;
    for (int k = 0; k < m; ++k) {
      double s = perim * k / m;
      while (edge + 1 < n && cum[edge + 1] <= s) ++edge;
      double t = (s - cum[edge]) / (cum[edge + 1] - cum[edge]);
      mesh.points.push_back(v[edge] + t * (v[(edge + 1) % n] - v[edge]));
    }
    mesh.spacing = perim / m;
    mesh.closed = true;
    return mesh;
  }
  if (const UnionOfDisks* u = set.get_if<UnionOfDisks>()) {
    struct ArcRef { std::size_t disk; double lo, hi, len; };
    std::vector<ArcRef> arcs;
    double total = 0.0;
    for (const auto& ca : detail::outer_arcs(*u))
      for (const auto& a : ca.arcs) {
        double len = (a.second - a.first) * u->disks[ca.disk].radius;
        arcs.push_back({ca.disk, a.first, a.second, len});
        total += len;
      }
    if (arcs.empty()) fail(ErrorCode::MeshFailure, "union has no outer boundary arcs");
    if (static_cast<std::size_t>(m) < arcs.size())
      fail(ErrorCode::MeshFailure, "mesh size below outer-arc count");
    // Largest-remainder apportionment with a floor of one point per arc.
    std::vector<int> counts(arcs.size(), 1);
    int left = m - static_cast<int>(arcs.size());
    std::vector<double> quota(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) quota[i] = arcs[i].len / total * left;
    int assigned = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      int q = static_cast<int>(std::floor(quota[i]));
      counts[i] += q;
      assigned += q;
    }
    std::vector<std::size_t> order(arcs.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return quota[a] - std::floor(quota[a]) > quota[b] - std::floor(quota[b]);
    });
    for (int i = 0; i < left - assigned; ++i) counts[order[i % order.size()]] += 1;
    double worst = 0.0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const ArcRef& a = arcs[i];
      const Disk& d = u->disks[a.disk];
      double step = (a.hi - a.lo) / counts[i];
      for (int k = 0; k < counts[i]; ++k) {
        double ang = a.lo + (k + 0.5) * step;
        mesh.points.push_back(d.center + d.radius * Complex(std::cos(ang), std::sin(ang)));
      }
      worst = std::max(worst, step * d.radius);
    }
    mesh.spacing = worst;
    mesh.closed = false; // several arcs: no single closed parametrization
    return mesh;
  }
  const PolyPreimage& pre = *set.get_if<PolyPreimage>();
  mesh.points = trace_preimage(pre.p, m);
  mesh.spacing = max_consecutive_gap(mesh.points, true);
  mesh.closed = true;
  return mesh;
}

PlanarSet translate(const PlanarSet& set, Complex w) {
  require_finite(w, "translation vector");
  return std::visit(
      [&](const auto& s) -> PlanarSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return PlanarSet::disk(s.center + w, s.radius);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return PlanarSet::segment(s.a + w, s.b + w);
        } else if constexpr (std::is_same_v<T, SimplePolygon>) {
          std::vector<Complex> v = s.vertices;
          for (Complex& z : v) z += w;
          return PlanarSet::polygon(std::move(v));
        } else if constexpr (std::is_same_v<T, UnionOfDisks>) {
          std::vector<Disk> d = s.disks;
          for (Disk& k : d) k.center += w;
          return PlanarSet::union_of_disks(std::move(d));
        } else {
          // (E + w) = { z : |p(z - w)| <= 1 }
          return PlanarSet::poly_preimage(s.p.taylor_shift(-w));
        }
      },
      set.v());
}

// --- point-cloud helpers ------------------------------------------------------

namespace {

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Complex> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

} // namespace

double cloud_diameter(const std::vector<Complex>& pts) {
  if (pts.size() < 2) return 0.0;
  std::vector<Complex> h = convex_hull(pts);
  std::size_t n = h.size();
  if (n <= 3) {
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d = std::max(d, std::abs(h[i] - h[j]));
    return d;
  }
  // rotating calipers over antipodal pairs
  double d = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ni = (i + 1) % n;
    while (true) {
      std::size_t nj = (j + 1) % n;
      double adv = cross(h[i], h[ni], h[nj]) - cross(h[i], h[ni], h[j]);
      if (adv > 0) j = nj; else break;
    }
    d = std::max({d, std::abs(h[i] - h[j]), std::abs(h[ni] - h[j])});
  }
  return d;
}

SetData set_data(const PlanarSet& set) {
  SetData d;
  d.diam = diameter(set);
  d.outer_R = outer_radius(set);
  try {
    d.inner_r = inner_radius(set);
  } catch (const Error&) {
    d.inner_r.reset();
  }
  return d;
}

SetData cloud_set_data(const std::vector<Complex>& boundary_pts) {
  SetData d;
  d.diam = cloud_diameter(boundary_pts);
  double R = 0.0, r = std::numeric_limits<double>::infinity();
  for (Complex z : boundary_pts) {
    R = std::max(R, std::abs(z));
    r = std::min(r, std::abs(z));
  }
  d.outer_R = R;
  if (boundary_pts.empty()) r = 0.0;
  d.inner_r = r;
  return d;
}

} // namespace japprox
