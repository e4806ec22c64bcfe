#pragma once

#include <functional>

namespace spectra {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

// Globally adaptive Gauss-Kronrod. Infinite limits go through eta = tan(theta).
// Throws NotConverged if the error estimate cannot be pushed below abs_tol.
QuadratureResult adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                                     double abs_tol, int max_intervals = 4000);

}  // namespace spectra
