#include "spectra/routh.hpp"

#include <cmath>
#include <sstream>

#include "spectra/errors.hpp"
#include "spectra/quadrature.hpp"
#include "spectra/roots.hpp"

namespace spectra {

namespace {

using CPoly = std::vector<GaussianRational>;

CPoly cmul(const CPoly& a, const CPoly& b) {
  CPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

CPoly cpow(const CPoly& a, int k) {
  CPoly out{GaussianRational(1)};
  for (int j = 0; j < k; ++j) out = cmul(out, a);
  return out;
}

std::complex<double> rising(std::complex<double> x, int k) {
  std::complex<double> acc = 1.0;
  for (int j = 0; j < k; ++j) acc *= x + static_cast<double>(j);
  return acc;
}

double fact(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

// (-i)^m as a Gaussian rational.
GaussianRational minus_i_pow(int m) {
  switch (m % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
  }
}

void check_order(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "polynomial order must be non-negative");
}

}  // namespace

std::complex<double> jacobi_complex_eval(int m, std::complex<double> beta, std::complex<double> alpha,
                                         std::complex<double> y) {
  check_order(m);
  std::complex<double> s = 0.0;
  for (int k = 0; k <= m; ++k) {
    s += rising(alpha + static_cast<double>(m - k), k) / fact(k) * rising(beta + static_cast<double>(k), m - k) /
         fact(m - k) * std::pow(y - 1.0, k) * std::pow(y + 1.0, m - k);
  }
  return s / std::ldexp(1.0, m);
}

GaussianRational jacobi_complex_exact(int m, const GaussianRational& beta, const GaussianRational& alpha,
                                      const GaussianRational& y) {
  check_order(m);
  GaussianRational s;
  GaussianRational ym = y - GaussianRational(1), yp = y + GaussianRational(1);
  for (int k = 0; k <= m; ++k) {
    GaussianRational t = rising_factorial(alpha + GaussianRational(Rational(m - k)), k) *
                         rising_factorial(beta + GaussianRational(Rational(k)), m - k);
    for (int j = 0; j < k; ++j) t = t * ym;
    for (int j = 0; j < m - k; ++j) t = t * yp;
    s = s + t * Rational(1 / (factorial(k) * factorial(m - k)));
  }
  Rational scale(1);
  mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), static_cast<unsigned long>(m));
  return s * scale;
}

std::complex<double> jacobi_rising_sum(int m, std::complex<double> beta, std::complex<double> alpha,
                                        std::complex<double> y) {
  check_order(m);
  std::complex<double> s = 0.0;
  for (int k = 0; k <= m; ++k) {
    s += rising(alpha, k) / fact(k) * rising(beta, m - k) / fact(m - k) * std::pow(y - 1.0, k) *
         std::pow(y + 1.0, m - k);
  }
  return s / std::ldexp(1.0, m);
}

RouthPolynomial routh_polynomial_exact(int m, const GaussianRational& alpha) {
  check_order(m);
  const GaussianRational beta = alpha.conj();
  // y = i*eta: y - 1 = -1 + i eta, y + 1 = 1 + i eta.
  const CPoly ym{GaussianRational(-1), GaussianRational(0, 1)};
  const CPoly yp{GaussianRational(1), GaussianRational(0, 1)};
  CPoly sum(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    GaussianRational t = rising_factorial(alpha + GaussianRational(Rational(m - k)), k) *
                         rising_factorial(beta + GaussianRational(Rational(k)), m - k);
    t = t * Rational(1 / (factorial(k) * factorial(m - k)));
    CPoly term = cmul(cpow(ym, k), cpow(yp, m - k));
    for (std::size_t j = 0; j < term.size(); ++j) sum[j] = sum[j] + term[j] * t;
  }
  Rational scale(1);
  mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), static_cast<unsigned long>(m));
  const GaussianRational pre = minus_i_pow(m);
  std::vector<Rational> real(sum.size());
  for (std::size_t j = 0; j < sum.size(); ++j) {
    GaussianRational c = sum[j] * pre * scale;
    if (sgn(c.im) != 0) {
      std::ostringstream os;
      os << "coefficient " << j << " of order-" << m << " Routh polynomial has imaginary part " << c.im.get_d();
      throw Error(ErrorCode::ImaginaryResidue, os.str());
    }
    real[j] = c.re;
  }
  RouthPolynomial out;
  out.order = m;
  out.alpha = {alpha.re.get_d(), alpha.im.get_d()};
  out.convention = RouthConvention::CanonicalSum;
  out.exact = ExactPolynomial(std::move(real));
  out.poly = RealPolynomial::from_exact(out.exact);
  out.degree_deficient = out.exact.degree() < m;
  return out;
}

RouthPolynomial routh_polynomial(int m, ComplexIndex alpha) {
  RouthPolynomial p = routh_polynomial_exact(m, alpha.to_exact());
  p.alpha = alpha;
  return p;
}

RouthPolynomial routh_rodrigues(int m, ComplexIndex alpha) {
  check_order(m);
  const Rational ar = exact(alpha.re), ai = exact(alpha.im);
  const ExactPolynomial one_plus_sq({Rational(1), Rational(0), Rational(1)});
  ExactPolynomial q = ExactPolynomial::constant(1);
  for (int e = m; e >= 1; --e) {
    ExactPolynomial lin({2 * ai, 2 * (Rational(e) + ar)});
    q = q.derivative() * one_plus_sq + q * lin;
  }
  RouthPolynomial out;
  out.order = m;
  out.alpha = alpha;
  out.convention = RouthConvention::Rodrigues;
  out.exact = q;
  out.poly = RealPolynomial::from_exact(q);
  out.degree_deficient = q.degree() < m;
  return out;
}

ComplexIndex rodrigues_index_map(ComplexIndex alpha) { return {alpha.re + 1.0, -alpha.im}; }

Rational rodrigues_scale(int m) {
  Rational s = factorial(m);
  mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<unsigned long>(m));
  return s;
}

double routh_hypergeometric_eval(int m, ComplexIndex alpha, double eta) {
  check_order(m);
  const std::complex<double> a = alpha.value();
  for (int k = 0; k < m; ++k) {
    if (alpha.im == 0.0 && alpha.re == -static_cast<double>(k)) {
      std::ostringstream os;
      os << "Pochhammer denominator (alpha)_" << (k + 1) << " vanishes";
      throw Error(ErrorCode::DegenerateParameter, os.str());
    }
  }
  const std::complex<double> z(0.5, 0.5 * eta);
  const double b = m - 1 + 2 * alpha.re;
  std::complex<double> term = 1.0, sum = 1.0;
  for (int k = 0; k < m; ++k) {
    term *= (static_cast<double>(k - m)) * (b + k) / ((a + static_cast<double>(k)) * static_cast<double>(k + 1)) * z;
    sum += term;
  }
  std::complex<double> pre = rising(a, m) / fact(m);
  if (m % 2) pre = -pre;
  static const std::complex<double> mi[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return (mi[m % 4] * pre * sum).real();
}

double weight_eval(const WeightParams& w, double eta) {
  return std::pow(1.0 + eta * eta, w.re) * std::exp(2.0 * w.im * std::atan(eta));
}

ExactPolynomial ode_residual(const RouthPolynomial& p) {
  const Rational ar = exact(p.alpha.re), ai = exact(p.alpha.im);
  const Rational m(p.order);
  const ExactPolynomial& f = p.exact;
  const ExactPolynomial one_plus_sq({Rational(1), Rational(0), Rational(1)});
  ExactPolynomial first;
  Rational lambda;
  if (p.convention == RouthConvention::CanonicalSum) {
    first = ExactPolynomial({-2 * ai, 2 * ar});
    lambda = m * (m + 2 * ar - 1);
  } else {
    first = ExactPolynomial({2 * ai, 2 * (ar + 1)});
    lambda = m * (m + 2 * ar + 1);
  }
  return one_plus_sq * f.derivative().derivative() + first * f.derivative() - f * lambda;
}

ComplexIndex orthogonal_family_index(const WeightParams& w) { return {w.re + 1.0, -w.im}; }

double inner_product(int n, int m, const WeightParams& w, double abs_tol) {
  check_order(n);
  check_order(m);
  if (!(2.0 * std::max(n, m) + 2.0 * w.re < -1.0)) {
    std::ostringstream os;
    os << "integrand does not decay: 2*max(n,m) + 2*Re(w) = " << 2.0 * std::max(n, m) + 2.0 * w.re;
    throw Error(ErrorCode::NonIntegrable, os.str());
  }
  const ComplexIndex fam = orthogonal_family_index(w);
  const RouthPolynomial pn = routh_polynomial(n, fam);
  const RouthPolynomial pm = routh_polynomial(m, fam);
  auto f = [&](double eta) { return pn(eta) * pm(eta) * weight_eval(w, eta); };
  return adaptive_quadrature(f, -INFINITY, INFINITY, abs_tol).value;
}

std::vector<double> routh_real_roots(const RouthPolynomial& p) {
  if (p.exact.degree() < 1) {
    if (p.exact.is_zero()) return real_roots(p.exact);
    return {};
  }
  return real_roots(p.exact);
}

Discriminant2 discriminant_order2(ComplexIndex alpha) {
  const RouthPolynomial p = routh_polynomial(2, alpha);
  Rational d = p.exact.coeff(1) * p.exact.coeff(1) - 4 * p.exact.coeff(2) * p.exact.coeff(0);
  Discriminant2 out;
  out.computed = d.get_d();
  const double ar = alpha.re, ai = alpha.im;
  out.closed_form = -0.25 * (2 * ar + 1) * ((ar + 1) * (ar + 1) + ai * ai);
  const double s = ar + 2;
  out.alt_form = -0.25 * (ar + 3) * s * s * (1.0 - (3 * ar + 4) / (2 * s * s) * ai * ai);
  return out;
}

AltOrder2 order2_alt_coeffs(ComplexIndex alpha) {
  const double ar = alpha.re, ai = alpha.im;
  return {-0.25 * (2 * ar + 3) * (ar + 2), 0.5 * ai * (2 * ar + 3), -0.125 * (ai * ai + 2 * ar + 4)};
}

std::string to_string(RouthConvention c) {
  return c == RouthConvention::CanonicalSum ? "canonical-sum" : "rodrigues";
}

}  // namespace spectra
