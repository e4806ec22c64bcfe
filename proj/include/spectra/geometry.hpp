#pragma once

#include <complex>
#include <vector>

namespace spectra {

// T(eta) = a (eta^2 + kappa_plus) - c_im * eta.
// c_im != 0 is the non-symmetric case of the general parameterization.
struct TangentPolySpec {
  double a = 1.0;
  double kappa_plus = 1.0;
  double c_im = 0.0;

  // From T = [c* (eta - i)^2 + c (eta + i)^2 + d (eta^2 + 1)] / 4.
  static TangentPolySpec from_general(std::complex<double> c, double d);

  bool symmetric() const { return c_im == 0.0; }
  // Coefficients of the energy terms in the Bose invariant.
  std::complex<double> c() const { return {a * (1.0 - kappa_plus), c_im}; }
  double d() const { return 2.0 * a * (1.0 + kappa_plus); }
  void validate() const;
};

double tangent_eval(const TangentPolySpec& tp, double eta);

struct PotentialSpec {
  std::complex<double> h0;
  double O00 = 0.0;
  TangentPolySpec tp;

  // O00 is derived from h0 so that the potential vanishes at infinity.
  static PotentialSpec from_h0(std::complex<double> h0, const TangentPolySpec& tp);
  // Validating constructor; throws InvalidArgument when O00 != 2 Re h0 + 1.
  static PotentialSpec make(std::complex<double> h0, double O00, const TangentPolySpec& tp);

  std::complex<double> lambda0() const;
};

// I[eta; eps], real on the real line.
double bose_invariant_eval(const PotentialSpec& spec, double epsilon, double eta);

// d eta / dx as a function of eta.
double eta_prime(const TangentPolySpec& tp, double eta);

class VariableMap {
 public:
  VariableMap(const TangentPolySpec& tp, double x_max, int n_points);

  const TangentPolySpec& tp() const { return tp_; }
  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& eta() const { return eta_; }
  double x_max() const { return x_max_; }
  int size() const { return static_cast<int>(x_.size()); }
  double step() const { return x_[1] - x_[0]; }

  double eta_of_x(double x) const;
  double x_of_eta(double eta) const;
  double deriv(double eta) const { return eta_prime(tp_, eta); }

 private:
  TangentPolySpec tp_;
  double x_max_;
  std::vector<double> x_;
  std::vector<double> eta_;
};

VariableMap build_variable_map(const TangentPolySpec& tp, double x_max, int n_points);

// Closed form for the symmetric tangent polynomial.
double schwarzian_eval(const TangentPolySpec& tp, double eta);
// F F'' - F'^2 / 2 with F = eta'(eta); valid for any tangent polynomial.
double schwarzian_generic(const TangentPolySpec& tp, double eta);

// V at a given eta (no grid lookup).
double potential_at_eta(const PotentialSpec& spec, double eta);
double potential_eval(const PotentialSpec& spec, const VariableMap& map, double x);

std::complex<double> stevenson_xi(double eta);

// Smallest x with |V(+-x)| < tol (bisection on a doubling bracket).
double decay_x_max(const PotentialSpec& spec, double tol = 1e-3);

}  // namespace spectra
