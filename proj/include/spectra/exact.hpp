#pragma once

// Exact rational arithmetic used to build polynomials whose realness and
// ODE residuals must vanish identically, not just to rounding.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace spectra {

using Rational = mpq_class;

// Every finite double is a dyadic rational; this conversion is exact.
Rational exact(double x);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const GaussianRational& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// (x)_k, the rising factorial.
GaussianRational rising_factorial(const GaussianRational& x, int k);
Rational factorial(int k);

// Dense polynomial over Q, ascending coefficients, trimmed.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coeffs);

  static ExactPolynomial constant(const Rational& c) { return ExactPolynomial({c}); }
  static ExactPolynomial monomial(int degree, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(int k) const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  ExactPolynomial derivative() const;
  ExactPolynomial monic() const;

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const Rational& s);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.c_ == b.c_; }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  void divmod(const ExactPolynomial& d, ExactPolynomial& q, ExactPolynomial& r) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b);

}  // namespace spectra
