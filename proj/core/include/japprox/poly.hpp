#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace japprox {

using Complex = std::complex<double>;

/// Dense polynomial with coefficients in ascending-degree order.
/// Trailing (near-)zero leading coefficients are trimmed at construction.
class ComplexPoly {
public:
  ComplexPoly() : coeffs_{Complex(0.0)} {}
  explicit ComplexPoly(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex lead() const { return coeffs_.back(); }
  bool is_zero() const;

  Complex eval(Complex z) const;

  /// log|p(z)| computed without overflow for large |z| (factors out z^deg).
  double log_abs_eval(Complex z) const;

  ComplexPoly derivative() const;

  /// q(z) = p(z + w), i.e. the Taylor expansion of p recentred at -w... the
  /// shift used by set translation: (E + w) for E = {|p|<=1} has poly p(z - w).
  ComplexPoly taylor_shift(Complex w) const;

  ComplexPoly scaled(Complex factor) const; // factor * p

  ComplexPoly operator*(const ComplexPoly& rhs) const;

  /// All complex roots (with multiplicity) via the Durand-Kerner iteration.
  /// Intended for the small degrees (<= ~16) used by preimage descriptors.
  std::vector<Complex> roots() const;

private:
  std::vector<Complex> coeffs_;
};

/// Split representation value * exp(log_scale): keeps tiny normalizing factors
/// exact in the exponent instead of folding them into the mantissa coefficients.
struct ScaledPoly {
  ComplexPoly base;
  double log_scale = 0.0;

  int degree() const { return base.degree(); }
  Complex eval(Complex z) const { return base.eval(z) * std::exp(log_scale); }
  double log_abs_eval(Complex z) const { return base.log_abs_eval(z) + log_scale; }
  double log_abs_lead() const { return std::log(std::abs(base.lead())) + log_scale; }

  /// Plain-coefficient form; only safe when exp(log_scale) does not underflow.
  ComplexPoly collapsed() const;
};

/// Root-product representation phase * exp(lead_log) * prod_k (z - roots[k]).
/// High-degree nodal products must be iterated in this form: their expanded
/// monomial coefficients are exponentially larger than the values they take
/// near the node set, so Horner evaluation there loses every digit.
struct FactoredPoly {
  Complex lead_phase = Complex(1.0); // unit modulus
  double lead_log = 0.0;             // log of the leading coefficient magnitude
  std::vector<Complex> roots;

  int degree() const { return static_cast<int>(roots.size()); }
  double log_abs_lead() const { return lead_log; }
  double max_root_abs() const;

  Complex eval(Complex z) const; // renormalized product
  double log_abs_eval(Complex z) const;

  /// Expanded coefficient form for reporting; never used for iteration.
  ScaledPoly expanded() const;

  /// Factor a coefficient polynomial through its roots (degree <= ~16).
  static FactoredPoly from(const ScaledPoly& p);
};

/// (log |p(w)|, unit phase of p(w)) for w = dir * exp(la) with |dir| = 1,
/// computed through the reciprocal series in 1/w: stable for arbitrarily
/// large la, where the complex value itself would overflow.
std::pair<double, Complex> log_eval_dir(const ScaledPoly& p, double la, Complex dir);
std::pair<double, Complex> log_eval_dir(const FactoredPoly& p, double la, Complex dir);

} // namespace japprox
