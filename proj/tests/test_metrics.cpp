#include <doctest.h>

#include <cmath>

#include "japprox/dynamics.hpp"
#include "japprox/green.hpp"
#include "japprox/metrics.hpp"

using namespace japprox;

namespace {
const double kLog2 = std::log(2.0);
}

TEST_CASE("hausdorff distance between sampled boundaries") {
  PlanarSet d1 = PlanarSet::disk(Complex(0.0), 1.0);
  PlanarSet d2 = PlanarSet::disk(Complex(0.0), 2.0);
  BoundaryMesh m1 = boundary_sample(d1, 2048);
  BoundaryMesh m2 = boundary_sample(d2, 2048);
  HausdorffReport same = hausdorff(m1, m1);
  CHECK(same.value == 0.0);
  HausdorffReport far = hausdorff(m1, m2);
  CHECK(far.value == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(far.slack > 0.0);
  CHECK(far.slack < 0.02);

  BoundaryMesh origin;
  origin.points = {Complex(0.0)};
  origin.spacing = 0.0;
  CHECK(hausdorff(m1, origin).value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("klimek metric between two disks is log 2") {
  GreenModel g1 = GreenModel::disk(Complex(0.0), 1.0);
  GreenModel g2 = GreenModel::disk(Complex(0.0), 2.0);
  BoundaryMesh m1 = boundary_sample(PlanarSet::disk(Complex(0.0), 1.0), 1024);
  BoundaryMesh m2 = boundary_sample(PlanarSet::disk(Complex(0.0), 2.0), 1024);
  CHECK(klimek(g1, g2, m1, m2) == doctest::Approx(kLog2).epsilon(1e-12));
  CHECK(klimek(g2, g1, m2, m1) == doctest::Approx(kLog2).epsilon(1e-12));
  CHECK(std::abs(klimek(g1, g1, m1, m1)) < 1e-12);
}

TEST_CASE("klimek distance to a sublevel set is the level") {
  GreenModel g = GreenModel::disk(Complex(0.0), 1.0);
  GreenModel gs = g.sublevel(0.3);
  BoundaryMesh me = boundary_sample(PlanarSet::disk(Complex(0.0), 1.0), 1024);
  BoundaryMesh ms = sublevel_boundary(g, 0.3, 1024);
  CHECK(klimek(g, gs, me, ms) == doctest::Approx(0.3).epsilon(1e-8));
}

TEST_CASE("lojasiewicz-siciak chi bound oracles") {
  CHECK(ls_chi_bound(LSData{kLog2, 1.0}, kLog2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ls_chi_bound(LSData{kLog2, 1.0}, 0.0)) < 1e-12);
  CHECK(ls_chi_bound(LSData{1.0, 0.5}, 0.04) ==
        doctest::Approx(0.0016).epsilon(1e-12));
}

TEST_CASE("gamma bound value follows the two exponent branches") {
  CHECK(gamma_bound_value(HolderData{1.0, 1.0}, 32) ==
        doctest::Approx(1.6389879194374126).epsilon(1e-12));
  CHECK(gamma_bound_value(HolderData{1.0, 0.5}, 32) ==
        doctest::Approx(15.0 * std::log(33.0) / 32.0).epsilon(1e-12));
  // below 1/2 the bound switches to n^(-2 alpha)
  CHECK(gamma_bound_value(HolderData{1.0, 0.4}, 32) ==
        doctest::Approx(0.9375).epsilon(1e-12));
  CHECK(gamma_bound_value(HolderData{2.0, 0.25}, 16) ==
        doctest::Approx(18.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("gamma measurement against the raster") {
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  GreenModel green = GreenModel::disk(Complex(0.0), 1.0);
  HolderData holder = holder_fit(green, disk);
  JuliaApprox ja = build_rate_n(disk, green, holder, 32);
  GammaMeasurement gm = measure_gamma(ja, disk, holder, 192);
  CHECK(gm.value > 0.0);
  CHECK(gm.value <= ja.s + gm.raster_slack + 1e-9);
  CHECK(gm.julia_green_on_set <= 1e-9); // E inside K(P): g_K vanishes on it
  CHECK(gm.set_green_on_julia <= ja.s + gm.raster_slack);
  CHECK(gm.chi > 0.0);
  CHECK(gm.chi <= std::exp(ja.s) - 1.0 + 2.0 * gm.raster_slack + 0.05);
  CHECK(gm.max_set_green_bounded <= ja.s + gm.raster_slack);
}

TEST_CASE("rate table rows on the disk pass their gates") {
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  RateTableOptions opt;
  opt.resolution = 192;
  opt.samples = 200;
  std::vector<MetricReport> rows = gamma_rate_table(disk, {16, 32}, opt);
  REQUIRE(rows.size() == 2);
  for (const MetricReport& r : rows) {
    CHECK(r.note.empty());
    CHECK(r.pass);
    CHECK(r.gamma > 0.0);
    CHECK(r.gamma <= r.gamma_bound * (1.0 + opt.slack));
    CHECK(r.s_n > 0.0);
    REQUIRE(r.chi_bound.has_value());
    CHECK(*r.chi_bound > 0.0);
  }
  CHECK(rows[0].n == 16);
  CHECK(rows[1].n == 32);
  CHECK(rows[1].gamma < rows[0].gamma);     // the metric shrinks with n
  CHECK(rows[1].s_n < rows[0].s_n);
}

TEST_CASE("rate table survives a failing row") {
  // n = 0 is rejected by the construction; the row reports the error text.
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  RateTableOptions opt;
  opt.resolution = 96;
  opt.samples = 50;
  std::vector<MetricReport> rows = gamma_rate_table(disk, {0, 16}, opt);
  REQUIRE(rows.size() == 2);
  CHECK(!rows[0].pass);
  CHECK(!rows[0].note.empty());
  CHECK(rows[1].pass);
}

TEST_CASE("synthetic holder override drives the reported bound") {
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  RateTableOptions opt;
  opt.resolution = 96;
  opt.samples = 50;
  opt.holder_override = HolderData{1.0, 0.4};
  std::vector<MetricReport> rows = gamma_rate_table(disk, {32}, opt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].gamma_bound == doctest::Approx(0.9375).epsilon(1e-12));
}
