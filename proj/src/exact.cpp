#include "spectra/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace spectra {

Rational exact(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact: non-finite value");
  Rational r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

GaussianRational rising_factorial(const GaussianRational& x, int k) {
  GaussianRational acc(1);
  for (int j = 0; j < k; ++j) acc = acc * (x + GaussianRational(Rational(j)));
  return acc;
}

Rational factorial(int k) {
  Rational f(1);
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

ExactPolynomial ExactPolynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return ExactPolynomial(std::move(v));
}

void ExactPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational ExactPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational ExactPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double ExactPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return ExactPolynomial(std::move(d));
}

ExactPolynomial ExactPolynomial::monic() const {
  if (is_zero()) return {};
  Rational lead = leading();
  std::vector<Rational> v = c_;
  for (auto& q : v) q /= lead;
  return ExactPolynomial(std::move(v));
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return ExactPolynomial(std::move(v));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
  return ExactPolynomial(std::move(v));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return ExactPolynomial(std::move(v));
}

ExactPolynomial operator*(const ExactPolynomial& a, const Rational& s) {
  std::vector<Rational> v = a.c_;
  for (auto& q : v) q *= s;
  return ExactPolynomial(std::move(v));
}

void ExactPolynomial::divmod(const ExactPolynomial& d, ExactPolynomial& q, ExactPolynomial& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  const int nq = degree() - dd + 1;
  std::vector<Rational> quo(static_cast<std::size_t>(std::max(nq, 0)), Rational(0));
  for (int k = degree(); k >= dd; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / d.leading();
    if (sgn(f) == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  q = ExactPolynomial(std::move(quo));
  r = ExactPolynomial(std::move(rem));
}

ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b) {
  while (!b.is_zero()) {
    ExactPolynomial q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace spectra
