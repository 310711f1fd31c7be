#include <doctest.h>

#include <cmath>
#include <complex>

#include "japprox/poly.hpp"

using namespace japprox;

namespace {
const double kLog2 = std::log(2.0);
}

TEST_CASE("complex poly evaluation") {
  ComplexPoly p({Complex(-1.0), Complex(0.0), Complex(1.0)}); // z^2 - 1
  CHECK(std::abs(p.eval(Complex(2.0)) - Complex(3.0)) < 1e-15);
  CHECK(std::abs(p.eval(Complex(0.0, 1.0)) - Complex(-2.0)) < 1e-15);
  CHECK(p.degree() == 2);
  CHECK(p.log_abs_eval(Complex(2.0)) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("log_abs_eval at a root is -inf") {
  ComplexPoly p({Complex(-1.0), Complex(0.0), Complex(1.0)});
  CHECK(std::isinf(p.log_abs_eval(Complex(1.0))));
  CHECK(p.log_abs_eval(Complex(1.0)) < 0.0);
}

TEST_CASE("scaled poly carries the exponent separately") {
  ScaledPoly p{ComplexPoly({Complex(0.0), Complex(0.0), Complex(1.0)}), -800.0};
  CHECK(p.log_abs_eval(Complex(2.0)) ==
        doctest::Approx(2.0 * kLog2 - 800.0).epsilon(1e-14));
  CHECK(p.eval(Complex(2.0)) == Complex(0.0)); // underflows as a plain value
}

TEST_CASE("factored poly evaluates through its roots") {
  FactoredPoly f;
  f.roots = {Complex(1.0), Complex(-1.0)};
  CHECK(std::abs(f.eval(Complex(2.0)) - Complex(3.0)) < 1e-14);
  CHECK(f.log_abs_eval(Complex(2.0)) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(std::isinf(f.log_abs_eval(Complex(1.0))));
  CHECK(f.max_root_abs() == 1.0);
}

TEST_CASE("expanded form of a small factored poly") {
  FactoredPoly f;
  f.roots = {Complex(1.0), Complex(2.0)};
  ScaledPoly p = f.expanded();
  CHECK(p.log_scale == 0.0);
  auto c = p.base.coeffs(); // z^2 - 3z + 2
  REQUIRE(c.size() == 3);
  CHECK(std::abs(c[0] - Complex(2.0)) < 1e-14);
  CHECK(std::abs(c[1] - Complex(-3.0)) < 1e-14);
  CHECK(std::abs(c[2] - Complex(1.0)) < 1e-14);
}

TEST_CASE("expanded form renormalizes huge coefficient growth") {
  FactoredPoly f;
  for (int k = 0; k < 600; ++k) {
    double ang = 0.01 * k;
    f.roots.push_back(2.0 * Complex(std::cos(ang), std::sin(ang)));
  }
  ScaledPoly p = f.expanded();
  for (Complex c : p.base.coeffs()) CHECK(std::isfinite(std::abs(c)));
  CHECK(p.log_scale > 0.0);
  // coefficient evaluation is only trustworthy where the lead term dominates:
  // the relative error scales like ((|z|+2)/(|z|-2))^600 * eps
  Complex z(250.0, 50.0);
  CHECK(p.log_abs_eval(z) == doctest::Approx(f.log_abs_eval(z)).epsilon(1e-8));
}

TEST_CASE("roots recovered from coefficients") {
  ScaledPoly p{ComplexPoly({Complex(-1.0), Complex(0.0), Complex(1.0)}), 0.0};
  FactoredPoly f = FactoredPoly::from(p);
  REQUIRE(f.roots.size() == 2);
  double r0 = std::abs(f.roots[0] - Complex(1.0)) + std::abs(f.roots[1] + Complex(1.0));
  double r1 = std::abs(f.roots[0] + Complex(1.0)) + std::abs(f.roots[1] - Complex(1.0));
  CHECK(std::min(r0, r1) < 1e-9);
  CHECK(std::abs(f.lead_log) < 1e-12);
}

TEST_CASE("log_eval_dir matches direct evaluation at moderate radius") {
  ScaledPoly p{ComplexPoly({Complex(-1.0), Complex(0.0), Complex(1.0)}), 0.0};
  double la = 2.0;
  auto [lv, phase] = log_eval_dir(p, la, Complex(1.0));
  double w = std::exp(la);
  CHECK(lv == doctest::Approx(std::log(w * w - 1.0)).epsilon(1e-12));
  CHECK(std::abs(phase - Complex(1.0)) < 1e-12);
  CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
}

TEST_CASE("log_eval_dir is stable far beyond overflow") {
  ScaledPoly p{ComplexPoly({Complex(0.0), Complex(0.0), Complex(1.0)}), 0.0};
  for (double la : {400.0, 5000.0, 1e8}) {
    Complex dir = std::polar(1.0, 0.7);
    auto [lv, phase] = log_eval_dir(p, la, dir);
    CHECK(lv == doctest::Approx(2.0 * la).epsilon(1e-12));
    CHECK(std::abs(phase - dir * dir) < 1e-9);
  }
}

TEST_CASE("factored log_eval_dir agrees with the coefficient form") {
  FactoredPoly f;
  f.roots = {Complex(1.0), Complex(-1.0)};
  ScaledPoly p{ComplexPoly({Complex(-1.0), Complex(0.0), Complex(1.0)}), 0.0};
  for (double la : {1.0, 3.0, 50.0, 900.0}) {
    Complex dir = std::polar(1.0, 1.1);
    auto [lf, phf] = log_eval_dir(f, la, dir);
    auto [lp, php] = log_eval_dir(p, la, dir);
    CHECK(lf == doctest::Approx(lp).epsilon(1e-11));
    CHECK(std::abs(phf - php) < 1e-9);
  }
}
