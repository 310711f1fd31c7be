#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "japprox/poly.hpp"

namespace japprox {

struct Disk {
  Complex center;
  double radius;
};

struct Segment {
  Complex a;
  Complex b;
};

struct SimplePolygon {
  std::vector<Complex> vertices; // simple closed polygon, stored CCW
};

struct UnionOfDisks {
  std::vector<Disk> disks;
};

/// Filled preimage p^{-1}(closed unit disk) = { z : |p(z)| <= 1 }.
struct PolyPreimage {
  ComplexPoly p;
  // Boundary trace cached at construction; PlanarSet stays immutable so the
  // cache is safe to share across threads.
  std::vector<Complex> cached_boundary;
};

/// Compact planar set descriptor.  Disk/Segment/SimplePolygon/PolyPreimage are
/// polynomially convex; a union of disks need not be -- its hull enters only
/// through the Green model.
class PlanarSet {
public:
  using Variant = std::variant<Disk, Segment, SimplePolygon, UnionOfDisks, PolyPreimage>;

  static PlanarSet disk(Complex center, double radius);
  static PlanarSet segment(Complex a, Complex b);
  static PlanarSet polygon(std::vector<Complex> vertices);
  static PlanarSet union_of_disks(std::vector<Disk> disks);
  static PlanarSet poly_preimage(ComplexPoly p);

  const Variant& v() const { return v_; }

  template <typename T>
  const T* get_if() const { return std::get_if<T>(&v_); }

private:
  explicit PlanarSet(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Ordered boundary sample.  Closed curves are stored in positive orientation;
/// spacing is the largest gap between consecutive samples (arc length where
/// the parametrization is exact, chord length otherwise).
struct BoundaryMesh {
  std::vector<Complex> points;
  double spacing = 0.0;
  bool closed = true;
};

double diameter(const PlanarSet& set);
double theta(const PlanarSet& set); // (2 + diam E)^(1/3)

/// sup_{z in E} |z|.
double outer_radius(const PlanarSet& set);

/// dist(0, boundary of E); requires 0 in the interior of E.
double inner_radius(const PlanarSet& set);

bool contains(const PlanarSet& set, Complex z);
double dist_to_set(const PlanarSet& set, Complex z);

BoundaryMesh boundary_sample(const PlanarSet& set, int m);

PlanarSet translate(const PlanarSet& set, Complex w);

/// Diameter / outer radius / min-|z| of a point cloud (convex hull + rotating
/// calipers for the diameter, so level-curve traces stay O(m log m)).
double cloud_diameter(const std::vector<Complex>& pts);

/// Geometric summary consumed by the construction: diam, R(E) = sup |z|,
/// r(E) = dist(0, dE) when the origin is interior (else unset).
struct SetData {
  double diam = 0.0;
  double outer_R = 0.0;
  std::optional<double> inner_r;
};

SetData set_data(const PlanarSet& set);
SetData cloud_set_data(const std::vector<Complex>& boundary_pts);

namespace detail {
/// Uncovered angular intervals [lo, hi] (radians, may wrap) of each circle in
/// a union of disks: the exact-arc decomposition of the outer boundary.
struct CircleArcs {
  std::size_t disk;
  std::vector<std::pair<double, double>> arcs;
};
std::vector<CircleArcs> outer_arcs(const UnionOfDisks& u);
double point_segment_dist(Complex z, Complex a, Complex b);
} // namespace detail

} // namespace japprox
