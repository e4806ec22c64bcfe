#include "spectra/polynomial.hpp"

namespace spectra {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

RealPolynomial RealPolynomial::from_exact(const ExactPolynomial& p) {
  std::vector<double> v;
  v.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) v.push_back(q.get_d());
  return RealPolynomial(std::move(v));
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void RealPolynomial::eval3(double x, double& p, double& dp, double& ddp) const {
  p = dp = ddp = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    ddp = ddp * x + 2.0 * dp;
    dp = dp * x + p;
    p = p * x + *it;
  }
}

RealPolynomial RealPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return RealPolynomial(std::move(d));
}

ExactPolynomial RealPolynomial::to_exact() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (double c : c_) v.push_back(exact(c));
  return ExactPolynomial(std::move(v));
}

}  // namespace spectra
