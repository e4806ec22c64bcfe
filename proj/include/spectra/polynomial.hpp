#pragma once

#include <vector>

#include "spectra/exact.hpp"

namespace spectra {

// Real polynomial, ascending coefficients, trailing zeros removed.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs);
  static RealPolynomial from_exact(const ExactPolynomial& p);

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  double operator()(double x) const;
  // Value, first and second derivative at x.
  void eval3(double x, double& p, double& dp, double& ddp) const;
  RealPolynomial derivative() const;
  ExactPolynomial to_exact() const;

 private:
  std::vector<double> c_;
};

}  // namespace spectra
