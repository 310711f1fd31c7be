#include "japprox/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "japprox/errors.hpp"

namespace japprox {

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex(0.0));
  for (const Complex& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      fail(ErrorCode::InvalidInput, "polynomial coefficient is not finite");
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) == 0.0) coeffs_.pop_back();
}

bool ComplexPoly::is_zero() const {
  return coeffs_.size() == 1 && std::abs(coeffs_[0]) == 0.0;
}

Complex ComplexPoly::eval(Complex z) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double ComplexPoly::log_abs_eval(Complex z) const {
  double az = std::abs(z);
  if (az <= 1.0 || degree() == 0) {
    double v = std::abs(eval(z));
    return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
  }
  // p(z) = z^d * sum_k c_{d-k} (1/z)^k; the reversed Horner stays O(1)-sized.
  Complex inv = 1.0 / z;
  Complex acc(0.0);
  for (const Complex& c : coeffs_) acc = acc * inv + c;
  double v = std::abs(acc);
  if (v == 0.0) return -std::numeric_limits<double>::infinity();
  return degree() * std::log(az) + std::log(v);
}

ComplexPoly ComplexPoly::derivative() const {
  if (degree() == 0) return ComplexPoly({Complex(0.0)});
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::taylor_shift(Complex w) const {
  // In-place Horner cascade: after the k-th pass c[k] is the k-th Taylor
  // coefficient of p about w, so the result represents q(z) = p(z + w).
  std::vector<Complex> c = coeffs_;
  int n = degree();
  for (int k = 0; k < n; ++k)
    for (int i = n - 1; i >= k; --i) c[i] += w * c[i + 1];
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::scaled(Complex factor) const {
  std::vector<Complex> c = coeffs_;
  for (Complex& x : c) x *= factor;
  return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& rhs) const {
  std::vector<Complex> c(coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return ComplexPoly(std::move(c));
}

std::vector<Complex> ComplexPoly::roots() const {
  int d = degree();
  if (d == 0) return {};
  // Monic normalization, then Durand-Kerner from a non-symmetric spiral.
  std::vector<Complex> a(coeffs_.begin(), coeffs_.end());
  Complex lead = a.back();
  for (Complex& c : a) c /= lead;
  double radius = 0.0;
  for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(a[k]));
  radius = 1.0 + radius;

  std::vector<Complex> r(d);
  for (int k = 0; k < d; ++k) {
    double ang = 2.0 * M_PI * k / d + 0.4;
    r[k] = radius * Complex(std::cos(ang), std::sin(ang)) * (0.4 + 0.6 * (k + 1.0) / d);
  }
  auto eval_monic = [&](Complex z) {
    Complex acc(1.0);
    for (int k = d - 1; k >= 0; --k) acc = acc * z + a[k];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double move = 0.0;
    for (int k = 0; k < d; ++k) {
      Complex denom(1.0);
      for (int j = 0; j < d; ++j)
        if (j != k) denom *= (r[k] - r[j]);
      if (std::abs(denom) == 0.0) { denom = Complex(1e-30); }
      Complex step = eval_monic(r[k]) / denom;
      r[k] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-14 * radius) break;
  }
  return r;
}

ComplexPoly ScaledPoly::collapsed() const {
  return base.scaled(Complex(std::exp(log_scale)));
}

double FactoredPoly::max_root_abs() const {
  double m = 0.0;
  for (Complex r : roots) m = std::max(m, std::abs(r));
  return m;
}

Complex FactoredPoly::eval(Complex z) const {
  Complex prod = lead_phase;
  double extra = lead_log;
  for (Complex r : roots) {
    prod *= (z - r);
    double ap = std::abs(prod);
    if (ap > 1e100 || (ap > 0.0 && ap < 1e-100)) {
      extra += std::log(ap);
      prod /= ap;
    }
  }
  if (extra == 0.0) return prod;
  return prod * std::exp(extra);
}

double FactoredPoly::log_abs_eval(Complex z) const {
  double s = lead_log;
  for (Complex r : roots) {
    double a = std::abs(z - r);
    if (a == 0.0) return -std::numeric_limits<double>::infinity();
    s += std::log(a);
  }
  return s;
}

ScaledPoly FactoredPoly::expanded() const {
  ComplexPoly base({lead_phase});
  double shift = lead_log;
  for (Complex r : roots) {
    base = base * ComplexPoly({-r, Complex(1.0)});
    double m = 0.0; // renormalize into log_scale before coefficients overflow
    for (Complex c : base.coeffs()) m = std::max(m, std::abs(c));
    if (m > 1e100) {
      base = base.scaled(Complex(1.0 / m));
      shift += std::log(m);
    }
  }
  return ScaledPoly{std::move(base), shift};
}

FactoredPoly FactoredPoly::from(const ScaledPoly& p) {
  if (p.degree() < 1)
    fail(ErrorCode::InvalidInput, "cannot factor a constant polynomial");
  FactoredPoly f;
  f.roots = p.base.roots();
  Complex lead = p.base.lead();
  f.lead_phase = lead / std::abs(lead);
  f.lead_log = std::log(std::abs(lead)) + p.log_scale;
  return f;
}

std::pair<double, Complex> log_eval_dir(const ScaledPoly& p, double la, Complex dir) {
  const auto& c = p.base.coeffs();
  const int d = p.degree();
  // p(w) = w^d * q(1/w) with q(u) = sum_k c_{d-k} u^k.
  Complex u = std::exp(-std::min(la, 745.0)) * std::conj(dir);
  Complex q(0.0);
  for (int k = 0; k <= d; ++k) q = q * u + c[k];
  double aq = std::abs(q);
  if (aq == 0.0) return {-std::numeric_limits<double>::infinity(), Complex(1.0)};
  Complex phase = std::polar(1.0, d * std::arg(dir)) * (q / aq);
  return {p.log_scale + d * la + std::log(aq), phase};
}

std::pair<double, Complex> log_eval_dir(const FactoredPoly& p, double la, Complex dir) {
  const int d = p.degree();
  Complex u = std::exp(-std::min(la, 745.0)) * std::conj(dir);
  Complex q(1.0);
  double extra = 0.0;
  for (Complex r : p.roots) {
    q *= (Complex(1.0) - r * u);
    double aq = std::abs(q);
    if (aq > 1e100 || (aq > 0.0 && aq < 1e-100)) {
      extra += std::log(aq);
      q /= aq;
    }
  }
  double aq = std::abs(q);
  if (aq == 0.0) return {-std::numeric_limits<double>::infinity(), Complex(1.0)};
  Complex phase = p.lead_phase * std::polar(1.0, d * std::arg(dir)) * (q / aq);
  return {p.lead_log + d * la + std::log(aq) + extra, phase};
}

} // namespace japprox
