#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spectra/exact.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

struct ComplexIndex {
  double re = 0.0;
  double im = 0.0;

  ComplexIndex conj() const { return {re, -im}; }
  std::complex<double> value() const { return {re, im}; }
  GaussianRational to_exact() const { return {exact(re), exact(im)}; }
};

using WeightParams = ComplexIndex;

enum class RouthConvention { CanonicalSum, Rodrigues };

struct RouthPolynomial {
  int order = 0;
  ComplexIndex alpha;
  RouthConvention convention = RouthConvention::CanonicalSum;
  ExactPolynomial exact;
  RealPolynomial poly;
  // Set when the leading coefficient vanishes for this index.
  bool degree_deficient = false;

  double operator()(double eta) const { return poly(eta); }
};

// Complex-index Jacobi polynomial as the explicit double-product sum.
// Equals the classical P_m^{(beta-1, alpha-1)}(y).
std::complex<double> jacobi_complex_eval(int m, std::complex<double> beta, std::complex<double> alpha,
                                        std::complex<double> y);
GaussianRational jacobi_complex_exact(int m, const GaussianRational& beta, const GaussianRational& alpha,
                                      const GaussianRational& y);

// The sum with rising factorials (alpha)_k (beta)_{m-k} taken term by term,
// kept for comparison. Equals (-1)^m P_m^{(-m-beta, -m-alpha)}(y) classically.
std::complex<double> jacobi_rising_sum(int m, std::complex<double> beta, std::complex<double> alpha,
                                       std::complex<double> y);

// (-i)^m P_m(i eta) with the index pair (alpha*, alpha); imaginary parts must cancel exactly.
RouthPolynomial routh_polynomial(int m, ComplexIndex alpha);
RouthPolynomial routh_polynomial_exact(int m, const GaussianRational& alpha);

// (1/w) d^m/deta^m [(1+eta^2)^m w], w = weight_eval(alpha, .).
RouthPolynomial routh_rodrigues(int m, ComplexIndex alpha);

// Index map and scale relating the two constructions:
// routh_rodrigues(m, a) == rodrigues_scale(m) * routh_polynomial(m, rodrigues_index_map(a)).
ComplexIndex rodrigues_index_map(ComplexIndex alpha);
Rational rodrigues_scale(int m);

double routh_hypergeometric_eval(int m, ComplexIndex alpha, double eta);

double weight_eval(const WeightParams& w, double eta);

// Residual of the real-eta hypergeometric-type equation of p's family.
ExactPolynomial ode_residual(const RouthPolynomial& p);

// Integral of R_n R_m w over the real line. The polynomials are the canonical
// family orthogonal under w, i.e. index orthogonal_family_index(w).
ComplexIndex orthogonal_family_index(const WeightParams& w);
double inner_product(int n, int m, const WeightParams& w, double abs_tol = 1e-10);

// Roots of a Routh polynomial, ascending.
std::vector<double> routh_real_roots(const RouthPolynomial& p);

struct Discriminant2 {
  double computed = 0.0;     // from the actual coefficients of routh_polynomial(2, alpha)
  double closed_form = 0.0;  // -(2a_R+1)((a_R+1)^2 + a_I^2)/4
  double alt_form = 0.0;     // alternate a_I-dependent expression, reporting only
};
Discriminant2 discriminant_order2(ComplexIndex alpha);

// Alternate second-order coefficients (shifted index alpha+1), for reporting.
struct AltOrder2 {
  double c2, c1, c0;
};
AltOrder2 order2_alt_coeffs(ComplexIndex alpha);

std::string to_string(RouthConvention c);

}  // namespace spectra
