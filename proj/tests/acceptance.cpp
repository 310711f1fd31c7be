// Acceptance harness: one line per criterion, nonzero exit if any fails.
// Each criterion re-derives its expected values independently of the library
// paths it exercises (closed forms, direct products, explicit formulas).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "japprox/dynamics.hpp"
#include "japprox/geometry.hpp"
#include "japprox/green.hpp"
#include "japprox/lagrange.hpp"
#include "japprox/metrics.hpp"
#include "japprox/nodes.hpp"
#include "japprox/poly.hpp"

using namespace japprox;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
  int checked = 0;
  int bad = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && bad++ == 0) first = what;
  }
};

PlanarSet unit_square() {
  return PlanarSet::polygon({Complex(-1.0, -1.0), Complex(1.0, -1.0),
                             Complex(1.0, 1.0), Complex(-1.0, 1.0)});
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// --- 1: partition of unity + cardinal property, four node families ----------

bool criterion_identities(std::string& detail) {
  auto t0 = Clock::now();
  Tally t;

  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  PlanarSet seg = PlanarSet::segment(Complex(-1.0), Complex(1.0));
  PlanarSet square = unit_square();
  GreenModel g_disk = GreenModel::disk(Complex(0.0), 1.0);
  GreenModel g_seg = GreenModel::segment(Complex(-1.0), Complex(1.0));
  GreenModel g_square = green_for(square);

  auto check_system = [&](const NodeArray& nodes, const std::string& tag) {
    LagrangeSystem sys = deltas(nodes);
    for (int j = 0; j <= sys.n(); ++j)
      for (int k = 0; k <= sys.n(); ++k) {
        double want = j == k ? 1.0 : 0.0;
        double got = std::abs(lagrange_eval(sys, j, nodes.points[k]).value - want);
        t.expect(got <= 1e-9, tag + " cardinal j=" + std::to_string(j) +
                                  " k=" + std::to_string(k) + " err " + fmt(got));
      }
    // Probe near the nodes, where the Lebesgue function (and so the rounding
    // floor of the sum) stays moderate at every tested degree.
    std::vector<Complex> probes;
    for (int k = 0; k <= sys.n(); k += 2)
      probes.push_back(0.5 * (nodes.points[k] + nodes.points[(k + 1) % (sys.n() + 1)]));
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (int i = 0; i < 6; ++i)
      probes.push_back(nodes.points[(i * 7 + 3) % (sys.n() + 1)] +
                       std::polar(0.02, ang(rng)));
    for (Complex z : probes) {
      Complex sum(0.0);
      for (int j = 0; j <= sys.n(); ++j) sum += lagrange_eval(sys, j, z).value;
      t.expect(std::abs(sum - Complex(1.0)) <= 1e-9,
               tag + " partition err " + fmt(std::abs(sum - Complex(1.0))));
    }
  };

  for (int n : {4, 8, 16, 32, 64}) {
    std::string sn = " n=" + std::to_string(n);
    check_system(circle_leja(n, Complex(1.0)), "circle-leja disk" + sn);
    check_system(pseudo_leja(disk, g_disk, n, 2.0), "pseudo-leja disk" + sn);
    check_system(conformal_image_nodes(
                     ExteriorMap{ExteriorMap::Affine{Complex(0.0), Complex(1.0)}}, n),
                 "conformal disk" + sn);
    check_system(discrete_fekete(disk, n), "fekete disk" + sn);

    check_system(pseudo_leja(seg, g_seg, n, 2.0), "pseudo-leja segment" + sn);
    check_system(conformal_image_nodes(
                     ExteriorMap{ExteriorMap::Joukowski{Complex(0.0), 1.25, 0.5}}, n),
                 "conformal ellipse" + sn);
    check_system(discrete_fekete(seg, n), "fekete segment" + sn);

    check_system(pseudo_leja(square, g_square, n, 2.0), "pseudo-leja square" + sn);
    check_system(discrete_fekete(square, n), "fekete square" + sn);
  }

  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  t.expect(secs < 30.0, "runtime " + fmt(secs) + "s exceeds 30s");
  detail = std::to_string(t.checked) + " checks, " + fmt(secs) + "s" +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 2: delta/Vandermonde identity and roots-of-unity closed form ------------

bool criterion_delta_vandermonde(std::string& detail) {
  Tally t;
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  PlanarSet square = unit_square();
  GreenModel g_disk = GreenModel::disk(Complex(0.0), 1.0);

  for (int n : {4, 8, 16, 32, 64}) {
    for (const NodeArray& nodes :
         {circle_leja(n, Complex(1.0)), pseudo_leja(disk, g_disk, n, 2.0),
          discrete_fekete(square, n)}) {
      LagrangeSystem sys = deltas(nodes);
      double sum = 0.0;
      for (const LogMagnitude& d : sys.deltas) sum += d.log_abs;
      double gap = std::abs(sum - 2.0 * vandermonde_log(nodes));
      t.expect(gap <= 1e-9, "delta product vs V^2 at n=" + std::to_string(n) +
                                " gap " + fmt(gap));
    }
  }

  for (int n = 1; n <= 32; ++n) {
    LagrangeSystem sys = deltas(roots_of_unity_nodes(n));
    for (const LogMagnitude& d : sys.deltas) {
      double rel = std::abs(std::exp(d.log_abs) - (n + 1.0)) / (n + 1.0);
      t.expect(rel <= 1e-10, "roots-of-unity |Delta| at n=" + std::to_string(n) +
                                 " rel " + fmt(rel));
    }
  }

  detail = std::to_string(t.checked) + " checks" +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 3: main-theorem equivalence columns --------------------------------------

bool criterion_equivalence(std::string& detail) {
  auto t0 = Clock::now();
  Tally t;
  struct Case {
    PlanarSet set;
    GreenModel green;
    const char* tag;
  };
  Case cases[] = {
      {PlanarSet::disk(Complex(0.0), 1.0), GreenModel::disk(Complex(0.0), 1.0),
       "disk"},
      {PlanarSet::segment(Complex(-1.0), Complex(1.0)),
       GreenModel::segment(Complex(-1.0), Complex(1.0)), "segment"},
  };
  std::ostringstream ss;
  for (const Case& c : cases) {
    std::vector<double> lam, dlt;
    for (int n : {8, 16, 32, 64}) {
      NodeArray nodes = pseudo_leja(c.set, c.green, n, 2.0);
      LagrangeSystem sys = deltas(nodes);
      auto [lam_root, delta_root] =
          main_theorem_diagnostic(sys, nodes.mesh, c.green.capacity());
      lam.push_back(lam_root);
      dlt.push_back(delta_root);
    }
    t.expect(std::abs(lam.back() - 1.0) <= 0.15,
             std::string(c.tag) + " Lambda^(1/n) at 64 = " + fmt(lam.back()));
    t.expect(std::abs(dlt.back() - 1.0) <= 0.15,
             std::string(c.tag) + " min|Delta|^(1/n)/cap at 64 = " + fmt(dlt.back()));
    for (std::size_t i = 1; i < lam.size(); ++i) {
      t.expect(lam[i] <= lam[i - 1] * 1.10,
               std::string(c.tag) + " Lambda column not non-increasing");
      t.expect(dlt[i] <= dlt[i - 1] * 1.10 + 1e-12,
               std::string(c.tag) + " delta column not non-increasing");
    }
    ss << " " << c.tag << ":" << fmt(lam.back()) << "/" << fmt(dlt.back());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  t.expect(secs < 120.0, "runtime " + fmt(secs) + "s exceeds 120s");
  detail = "at n=64" + ss.str() + ", " + fmt(secs) + "s" +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 4: pseudo-Leja defining inequality + sigma separation --------------------

bool criterion_pseudo_leja(std::string& detail) {
  Tally t;
  struct Case {
    PlanarSet set;
    const char* tag;
  };
  Case cases[] = {
      {PlanarSet::disk(Complex(0.0), 1.0), "disk"},
      {PlanarSet::segment(Complex(-1.0), Complex(1.0)), "segment"},
      {unit_square(), "polygon"},
      {PlanarSet::union_of_disks({{Complex(-0.5), 1.0}, {Complex(0.75), 0.75}}),
       "union"},
      {PlanarSet::poly_preimage(
           ComplexPoly({Complex(-1.0), Complex(0.0), Complex(1.0)})),
       "preimage"},
  };
  const int n = 128;
  for (const Case& c : cases) {
    GreenModel green = green_for(c.set);
    NodeArray nodes = pseudo_leja(c.set, green, n, 2.0);

    // independent accumulation of log|w_k| over the recorded selection mesh
    const std::vector<Complex>& mesh = nodes.mesh.points;
    std::vector<double> logw(mesh.size(), 0.0);
    for (int k = 1; k <= n; ++k) {
      Complex prev = nodes.points[k - 1];
      double sup = -1e300;
      for (std::size_t i = 0; i < mesh.size(); ++i) {
        double d = std::abs(mesh[i] - prev);
        logw[i] += d > 0.0 ? std::log(d) : -1e300;
        sup = std::max(sup, logw[i]);
      }
      double at_ak = 0.0;
      for (int j = 0; j < k; ++j)
        at_ak += std::log(std::abs(nodes.points[k] - nodes.points[j]));
      double lhs = std::log(nodes.edrei[k - 1]) + at_ak;
      t.expect(lhs >= sup - 1e-12,
               std::string(c.tag) + " Edrei inequality at k=" + std::to_string(k) +
                   " deficit " + fmt(sup - lhs));
    }

    int violations = 0;
    for (int k = 1; k <= n; ++k)
      if (!separation_sigma(nodes, k).ok) ++violations;
    t.expect(violations == 0, std::string(c.tag) + " sigma violations = " +
                                  std::to_string(violations));
  }
  detail = std::to_string(t.checked) + " checks over 5 descriptors" +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 5: rho separation on the disk --------------------------------------------

bool criterion_rho_separation(std::string& detail) {
  Tally t;
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  GreenModel green = GreenModel::disk(Complex(0.0), 1.0);
  NodeArray nodes = pseudo_leja(disk, green, 64, 2.0);
  double worst = 1e300;
  for (int n = 1; n <= 64; ++n) {
    RhoSeparation sep = separation_rho(nodes, green, n);
    worst = std::min(worst, sep.min_margin);
    t.expect(sep.violations == 0, "violations at n=" + std::to_string(n) + ": " +
                                      std::to_string(sep.violations));
  }
  detail = "min margin " + fmt(worst) + (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 6: bound bracket at roots-of-unity Fekete nodes ---------------------------

bool criterion_bounds_bracket(std::string& detail) {
  Tally t;
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  GreenModel green = GreenModel::disk(Complex(0.0), 1.0);
  HolderData holder{1.0, 1.0};
  double th = theta(disk);
  std::mt19937 rng(6060);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  for (int n : {8, 16, 32}) {
    LagrangeSystem sys = deltas(roots_of_unity_nodes(n));
    double upper = (3.0 / n) * std::log((n + 1.0) * th) +
                   modulus_bound(holder, 1.0 / (double(n) * n));
    std::uniform_real_distribution<double> rad(1.0 + 1.0 / (double(n) * n), 3.0);
    for (int i = 0; i < 100; ++i) {
      Complex z = std::polar(rad(rng), ang(rng));
      double val = green.eval(z) - lagrange_eval(sys, 0, z).log_abs / n;
      t.expect(val >= -1e-8, "lower violated at n=" + std::to_string(n) +
                                 " val " + fmt(val));
      t.expect(val <= upper, "upper violated at n=" + std::to_string(n) + " val " +
                                 fmt(val) + " vs " + fmt(upper));
    }
  }
  detail = std::to_string(t.checked) + " bracket checks" +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 7: end-to-end construction on the disk ------------------------------------

bool criterion_end_to_end(std::string& detail) {
  auto t0 = Clock::now();
  Tally t;
  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  GreenModel green = GreenModel::disk(Complex(0.0), 1.0);
  JuliaApprox ja = approximate_eps(disk, green, 0.5);
  Certificate cert = certify_inclusions(ja, disk, 1000, 1);
  t.expect(cert.set_bounded.pass(), "set-orbit certificate failed");
  t.expect(cert.one_step.pass(), "one-step certificate failed");
  t.expect(cert.level_escapes.pass(), "outer-level certificate failed");

  HolderData holder = holder_fit(green, disk);
  GammaMeasurement gm = measure_gamma(ja, disk, holder, 512);
  double s_n = ja.s + ja.s_prime;
  t.expect(gm.value <= s_n + gm.raster_slack,
           "Gamma " + fmt(gm.value) + " > s_n " + fmt(s_n) + " + slack " +
               fmt(gm.raster_slack));
  t.expect(gm.chi <= 0.5, "chi " + fmt(gm.chi) + " > eps 0.5");

  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  t.expect(secs < 60.0, "runtime " + fmt(secs) + "s exceeds 60s");
  detail = "n=" + std::to_string(ja.n) + ", Gamma " + fmt(gm.value) + " <= " +
           fmt(s_n) + "+" + fmt(gm.raster_slack) + ", chi " + fmt(gm.chi) +
           ", " + fmt(secs) + "s" + (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 8: rate tables and both bound branches ------------------------------------

bool criterion_rate_table(std::string& detail) {
  Tally t;
  RateTableOptions opt;
  opt.resolution = 256;
  opt.samples = 400;
  opt.slack = 0.05;

  PlanarSet disk = PlanarSet::disk(Complex(0.0), 1.0);
  std::vector<MetricReport> rows = gamma_rate_table(disk, {16, 32, 64, 128}, opt);
  for (const MetricReport& r : rows) {
    t.expect(r.pass, "disk n=" + std::to_string(r.n) + ": " + r.note);
    double want = 15.0 * std::log(r.n + 1.0) / r.n; // (3A+12), A=1 on the disk
    t.expect(std::abs(r.gamma_bound - want) <= 1e-12 * want,
             "disk bound formula at n=" + std::to_string(r.n));
    t.expect(r.gamma <= r.gamma_bound * 1.05,
             "disk Gamma at n=" + std::to_string(r.n) + ": " + fmt(r.gamma));
  }

  PlanarSet seg = PlanarSet::segment(Complex(-1.0), Complex(1.0));
  for (const MetricReport& r : gamma_rate_table(seg, {16, 32, 64}, opt)) {
    t.expect(r.pass, "segment n=" + std::to_string(r.n) + ": " + r.note);
    // alpha = 1/2 stays on the log(n+1)/n branch
    HolderData h = holder_fit(GreenModel::segment(Complex(-1.0), Complex(1.0)), seg);
    double want = (3.0 * h.A + 12.0) * std::log(r.n + 1.0) / r.n;
    t.expect(std::abs(r.gamma_bound - want) <= 1e-12 * want,
             "segment bound branch at n=" + std::to_string(r.n));
  }

  // alpha < 1/2 branch: n^(-2 alpha), verified arithmetically
  t.expect(std::abs(gamma_bound_value(HolderData{1.0, 0.4}, 32) - 0.9375) <= 1e-12,
           "15 * 32^(-0.8) = 0.9375 failed");
  t.expect(std::abs(gamma_bound_value(HolderData{2.0, 0.25}, 16) - 4.5) <= 1e-12,
           "18 * 16^(-0.5) = 4.5 failed");
  RateTableOptions synth = opt;
  synth.resolution = 128;
  synth.holder_override = HolderData{1.0, 0.4};
  std::vector<MetricReport> srow = gamma_rate_table(disk, {32}, synth);
  t.expect(srow.size() == 1 &&
               std::abs(srow[0].gamma_bound - 0.9375) <= 1e-12,
           "override row does not use the n^(-2 alpha) bound");

  detail = std::to_string(t.checked) + " checks" +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 9: LS bridge equality on the nested disk pair ------------------------------

bool criterion_ls_bridge(std::string& detail) {
  Tally t;
  PlanarSet E = PlanarSet::disk(Complex(0.0), 1.0);
  PlanarSet F = PlanarSet::disk(Complex(0.0), 2.0);
  GreenModel gE = GreenModel::disk(Complex(0.0), 1.0);
  GreenModel gF = GreenModel::disk(Complex(0.0), 2.0);
  BoundaryMesh mE = boundary_sample(E, 4096);
  BoundaryMesh mF = boundary_sample(F, 4096);

  LSData ls = ls_bound_data(E, gE);
  t.expect(std::abs(ls.B - std::log(2.0)) <= 1e-12 && ls.beta == 1.0,
           "disk LS data is not (log 2, 1)");

  double gamma = klimek(gE, gF, mE, mF);
  t.expect(std::abs(gamma - std::log(2.0)) <= 1e-12,
           "Gamma(E, F) != log 2: " + fmt(gamma));

  double chi = 0.0;
  for (Complex z : mF.points) chi = std::max(chi, dist_to_set(E, z));
  double bound = ls_chi_bound(ls, gamma);
  t.expect(bound >= chi, "bound " + fmt(bound) + " < chi " + fmt(chi));
  t.expect(std::abs(bound - chi) <= 1e-6,
           "equality gap " + fmt(std::abs(bound - chi)));

  detail = "Gamma " + fmt(gamma) + ", chi " + fmt(chi) + ", bound " + fmt(bound) +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

// --- 10: Julia baseline for z^2 --------------------------------------------------

bool criterion_julia_baseline(std::string& detail) {
  Tally t;
  ScaledPoly sq{ComplexPoly({Complex(0.0), Complex(0.0), Complex(1.0)}), 0.0};
  Raster r = filled_julia_raster(sq, Window{-2.0, 2.0, -2.0, 2.0}, 512);
  double area = r.bounded_area();
  t.expect(std::abs(area - M_PI) <= 0.02 * M_PI, "area " + fmt(area));

  GreenModel dyn = GreenModel::dynamical(sq);
  double worst = 0.0;
  for (Complex z : {Complex(1.5), Complex(2.0, 1.0), Complex(0.0, 5.0),
                    Complex(10.0), Complex(-3.0, 4.0), Complex(0.3),
                    Complex(0.0, 0.9), Complex(-0.5, 0.5)}) {
    double want = std::max(0.0, std::log(std::abs(z)));
    worst = std::max(worst, std::abs(dyn.eval(z) - want));
  }
  t.expect(worst <= 1e-9, "green deviation " + fmt(worst));

  detail = "area " + fmt(area) + " vs pi, max green error " + fmt(worst) +
           (t.bad ? "; first: " + t.first : "");
  return t.bad == 0;
}

} // namespace

int main() {
  struct Row {
    int id;
    const char* name;
    bool (*fn)(std::string&);
  };
  const Row rows[] = {
      {1, "Lagrange identities across node families", criterion_identities},
      {2, "delta/Vandermonde consistency and closed form", criterion_delta_vandermonde},
      {3, "main-theorem equivalence columns", criterion_equivalence},
      {4, "pseudo-Leja inequality and sigma separation", criterion_pseudo_leja},
      {5, "rho separation on the disk", criterion_rho_separation},
      {6, "interpolation bound bracket", criterion_bounds_bracket},
      {7, "end-to-end construction at eps = 0.5", criterion_end_to_end},
      {8, "rate tables and bound branches", criterion_rate_table},
      {9, "LS bridge equality case", criterion_ls_bridge},
      {10, "Julia baseline for z^2", criterion_julia_baseline},
  };

  int failed = 0;
  for (const Row& row : rows) {
    std::string detail;
    bool ok = false;
    try {
      ok = row.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("[%s] %d: %s (%s)\n", ok ? "PASS" : "FAIL", row.id, row.name,
                detail.c_str());
    std::fflush(stdout);
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  else std::printf("all 10 criteria passed\n");
  return failed == 0 ? 0 : 1;
}
