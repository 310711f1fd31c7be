#include "japprox/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "japprox/errors.hpp"
#include "japprox/parallel.hpp"

namespace japprox {

namespace {

// sup over `from` of the distance to the nearest point of `to`.
double directed_sup_min(const std::vector<Complex>& from,
                        const std::vector<Complex>& to) {
  return parallel_argmax(from.size(),
                         [&](std::size_t i) {
                           double best = std::numeric_limits<double>::infinity();
                           for (Complex q : to)
                             best = std::min(best, std::abs(from[i] - q));
                           return best;
                         })
      .second;
}

} // namespace

HausdorffReport hausdorff(const BoundaryMesh& a, const BoundaryMesh& b) {
  if (a.points.empty() || b.points.empty())
    fail(ErrorCode::InvalidInput, "Hausdorff distance needs nonempty meshes");
  HausdorffReport rep;
  rep.value = std::max(directed_sup_min(a.points, b.points),
                       directed_sup_min(b.points, a.points));
  rep.slack = a.spacing + b.spacing;
  return rep;
}

double klimek(const GreenModel& green_a, const GreenModel& green_b,
              const BoundaryMesh& mesh_a, const BoundaryMesh& mesh_b) {
  if (mesh_a.points.empty() || mesh_b.points.empty())
    fail(ErrorCode::InvalidInput, "Klimek metric needs nonempty meshes");
  double a_on_b = parallel_argmax(mesh_b.points.size(),
                                  [&](std::size_t i) {
                                    return green_a.eval(mesh_b.points[i]);
                                  })
                      .second;
  double b_on_a = parallel_argmax(mesh_a.points.size(),
                                  [&](std::size_t i) {
                                    return green_b.eval(mesh_a.points[i]);
                                  })
                      .second;
  return std::max(a_on_b, b_on_a);
}

double ls_chi_bound(const LSData& ls, double gamma) {
  if (!(ls.B > 0.0) || !(ls.beta > 0.0))
    fail(ErrorCode::InvalidInput, "Lojasiewicz-Siciak data must be positive");
  if (gamma < 0.0) fail(ErrorCode::InvalidInput, "Gamma must be nonnegative");
  if (gamma == 0.0) return 0.0;
  return std::pow(gamma / ls.B, 1.0 / ls.beta);
}

double gamma_bound_value(const HolderData& holder, int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "bound needs n >= 1");
  double branch = holder.alpha >= 0.5 ? std::log(n + 1.0) / n
                                      : std::pow(n, -2.0 * holder.alpha);
  return (3.0 * holder.A + 12.0) * branch;
}

GammaMeasurement measure_gamma(const JuliaApprox& ja, const PlanarSet& set,
                               const HolderData& holder, int resolution) {
  GammaMeasurement gm;
  PlanarSet work = translate(set, -ja.translation); // build coordinates
  GreenModel gk = ja.julia_green();

  BoundaryMesh me = boundary_sample(work, 2048);
  gm.julia_green_on_set =
      parallel_argmax(me.points.size(),
                      [&](std::size_t i) { return gk.eval(me.points[i]); })
          .second;

  Raster r = filled_julia_raster(ja.P, ja.default_window(), resolution,
                                 ja.iteration_cap, ja.trap_radius);
  std::vector<Complex> border = r.boundary_centers();
  if (!border.empty())
    gm.set_green_on_julia =
        parallel_argmax(border.size(),
                        [&](std::size_t i) {
                          return ja.target_green.eval(border[i]);
                        })
            .second;
  gm.value = std::max(gm.julia_green_on_set, gm.set_green_on_julia);
  gm.raster_slack =
      modulus_bound(holder, 2.0 * std::hypot(r.pixel_w(), r.pixel_h()));

  std::vector<Complex> bounded = r.bounded_centers();
  if (!bounded.empty()) {
    gm.max_set_green_bounded =
        parallel_argmax(bounded.size(),
                        [&](std::size_t i) {
                          return ja.target_green.eval(bounded[i]);
                        })
            .second;
    gm.chi = parallel_argmax(bounded.size(),
                             [&](std::size_t i) {
                               return dist_to_set(work, bounded[i]);
                             })
                 .second;
  }
  return gm;
}

std::vector<MetricReport> gamma_rate_table(const PlanarSet& set,
                                           const std::vector<int>& ns,
                                           const RateTableOptions& opt) {
  GreenModel green = green_for(set);
  HolderData holder =
      opt.holder_override ? *opt.holder_override : holder_fit(green, set);
  std::optional<LSData> ls;
  try {
    ls = ls_bound_data(set, green);
  } catch (const Error&) {
    ls.reset(); // chi rows stay unbounded; gamma rows still gate
  }

  BuildOptions build = opt.build;
  build.iteration_cap = opt.iteration_cap;

  std::vector<MetricReport> out;
  for (int n : ns) {
    MetricReport rep;
    rep.n = n;
    try {
      JuliaApprox ja = build_rate_n(set, green, holder, n, build);
      rep.s_n = ja.s_prime + ja.s; // certified end-to-end rate against E
      Certificate cert =
          certify_inclusions(ja, set, opt.samples, opt.seed ^ std::uint64_t(n));
      GammaMeasurement gm = measure_gamma(ja, set, holder, opt.resolution);
      rep.gamma = gm.value;
      rep.gamma_bound = gamma_bound_value(holder, n);
      rep.chi = gm.chi;
      if (ls) rep.chi_bound = ls_chi_bound(*ls, rep.gamma_bound);
      // The chi bound needs K(P) inside E^1, where the LS inequality lives.
      rep.chi_nested = cert.pass() && gm.max_set_green_bounded <= 1.0 + 1e-9;
      bool gamma_ok = rep.gamma <= rep.gamma_bound * (1.0 + opt.slack);
      bool chi_ok = !rep.chi_nested || !rep.chi_bound ||
                    rep.chi <= *rep.chi_bound * (1.0 + opt.slack);
      rep.pass = gamma_ok && chi_ok && cert.pass();
      if (!cert.pass())
        rep.note = "inclusion certificate failed";
      else if (!gamma_ok)
        rep.note = "gamma exceeded the bound";
      else if (!chi_ok)
        rep.note = "chi exceeded the bound";
    } catch (const Error& e) {
      rep.pass = false;
      rep.note = e.what();
    }
    out.push_back(rep);
  }
  return out;
}

} // namespace japprox
