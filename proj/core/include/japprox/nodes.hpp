#pragma once

#include <variant>
#include <vector>

#include "japprox/geometry.hpp"
#include "japprox/green.hpp"

namespace japprox {

enum class NodeProvenance { CircleLeja, PseudoLeja, ConformalImage, DiscreteFekete };

/// Interpolation node array zeta_0..zeta_n together with the data needed to
/// audit it: realized Edrei constants C_k (sup|w_k| over the selection mesh
/// divided by |w_k(a_k)|), the Markov bounds used for the covering radii, and
/// the selection mesh itself (later reused as the sup-norm mesh).
struct NodeArray {
  std::vector<Complex> points;
  NodeProvenance provenance = NodeProvenance::PseudoLeja;
  std::vector<double> edrei;        // C_k for k = 1..n; empty for Fekete
  std::vector<double> markov;       // M_k for k = 1..n; PseudoLeja only
  std::vector<std::size_t> mesh_indices;
  BoundaryMesh mesh;

  int n() const { return static_cast<int>(points.size()) - 1; }
};

/// Greedy Leja points on the circle |z - 0| = 1 rotated so the mesh starts at
/// `start`; the argmax runs over an equiangular mesh of 4096*(n+1) points and
/// ties break toward the smallest mesh index.
NodeArray circle_leja(int n, Complex start);

/// Pseudo Leja sequence on the outer boundary of `set`: at step k candidates
/// are representatives of a covering of the mesh by disks of radius
/// log(2 - 1/C_target) / M_k, the best representative wins, and the realized
/// C_k = sup_mesh |w_k| / |w_k(a_k)| must stay within 10% of C_target.
NodeArray pseudo_leja(const PlanarSet& set, const GreenModel& green, int n,
                      double C_target, const BoundaryMesh* mesh_override = nullptr);

/// Conformal exterior map fixing infinity: affine image of the unit disk, or
/// the Joukowski ellipse map c + s(rho*u + 1/(rho*u)) (rho = 1 degenerates to
/// a segment, where images of conjugate circle points may collide).
struct ExteriorMap {
  struct Affine {
    Complex c;
    Complex scale;
  };
  struct Joukowski {
    Complex c;
    double rho;
    double s;
  };
  std::variant<Affine, Joukowski> v;

  Complex apply(Complex u) const;
};

/// Images of circle Leja points under an exterior conformal map, with the
/// realized constants recomputed on the mapped mesh.
NodeArray conformal_image_nodes(const ExteriorMap& map, int n);

/// Greedy Vandermonde-maximizing surrogate for Fekete points on the boundary
/// mesh, improved by full exchange rounds; index 0 is reordered to attain
/// min_k |Delta^(k)|.
NodeArray discrete_fekete(const PlanarSet& set, int n,
                          const BoundaryMesh* mesh_override = nullptr,
                          int exchange_rounds = 5);

/// Exact (n+1)-th roots of unity scaled onto a circle: the Fekete tuple of the
/// corresponding closed disk.
NodeArray roots_of_unity_nodes(int n, Complex center = Complex(0.0), double radius = 1.0);

struct SeparationSigma {
  double sigma = 0.0;       // min_{j<k} |a_k - a_j|
  double bound_log = 0.0;   // log(1 + 1/C_k) / M_k
  double bound_simple = 0.0; // 1 / (2 C_k M_k)
  bool ok = false;
};

/// Separation of a_k from its predecessors against the proved lower bounds;
/// requires PseudoLeja provenance (C_k and M_k must have been recorded).
SeparationSigma separation_sigma(const NodeArray& nodes, int k);

struct RhoSeparation {
  int violations = 0;
  double min_margin = 0.0; // min over pairs of lhs/rhs (>= 1 means all hold)
};

/// Pairwise bound |a_j - a_n| >= (1/(2e C_n)) max(rho_n(a_j), rho_n(a_n)) with
/// rho_n(z) = dist(z, {g = log(1 + 1/n)}); the level curve is analytic for
/// disk models and traced otherwise.
RhoSeparation separation_rho(const NodeArray& nodes, const GreenModel& green, int n);

} // namespace japprox
