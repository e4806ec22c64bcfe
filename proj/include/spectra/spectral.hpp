#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectra/geometry.hpp"
#include "spectra/routh.hpp"

namespace spectra {

struct LambdaBranch {
  std::complex<double> value;
  double energy = 0.0;
};

// lambda(eps) = sqrt(h(eps) + 1) on the branch Re lambda > 0.
LambdaBranch lambda_of_energy(const PotentialSpec& spec, double epsilon);

enum class RootKind { C, D, Other };
std::string to_string(RootKind k);

struct QuarticRoot {
  double lambda_re = 0.0;
  double lambda_im = 0.0;  // h_I / (2 lambda_re)
  RootKind kind = RootKind::Other;
  double energy = 0.0;     // -(lambda_re - m - 1/2)^2 / a
  double residual = 0.0;
};

// kappa L^4 + 2 mu (1 - kappa) L^3 - (h_R + 1 + (1 - kappa) mu^2) L^2 - h_I^2 / 4, mu = m + 1/2.
ExactPolynomial quartic_polynomial(const PotentialSpec& spec, int m);
std::vector<QuarticRoot> quartic_lambda_roots(const PotentialSpec& spec, int m);

// Closed forms at kappa_plus = 1: lambda_R^2 = (h_R+1)/2 + sqrt((h_R+1)^2/4 + h_I^2/4).
double lambda0_re_closed_form(std::complex<double> h0);
// The nested radical with h_I^2 in place of h_I^2/4, for comparison.
double lambda0_re_unscaled(std::complex<double> h0);

// Index candidates for the polynomial factor of an eigenfunction.
enum class IndexChoice { MinusLambdaConj = 0, MinusLambda = 1, MinusLambdaConjPlusOne = 2, MinusLambdaPlusOne = 3 };
std::string to_string(IndexChoice c);

struct EigenConvention {
  int sign = -1;  // exp(sign * lambda_I * atan eta)
  IndexChoice index = IndexChoice::MinusLambdaConjPlusOne;
};

ComplexIndex convention_index(const EigenConvention& c, std::complex<double> lambda);

// Phi(eta) = (1+eta^2)^{(1-lambda_R)/2} exp(s lambda_I atan eta) R_n^{(idx)}(eta).
struct ClosedFormSolution {
  std::complex<double> lambda;
  double energy = 0.0;
  int order = 0;
  EigenConvention convention;
  RouthPolynomial poly;

  double phi(double eta) const;
  void phi3(double eta, double& p, double& dp, double& ddp) const;
  // d/deta log|Phi| and its derivative, off the zeros of the polynomial.
  void log_derivs(double eta, double& l1, double& l2) const;
};

ClosedFormSolution make_solution(std::complex<double> lambda, double energy, int order, const EigenConvention& c);

using Phi3 = std::function<void(double, double&, double&, double&)>;
double rcsle_residual(const PotentialSpec& spec, double epsilon, const Phi3& phi, const std::vector<double>& eta_samples);
double rcsle_residual(const PotentialSpec& spec, const ClosedFormSolution& sol,
                      const std::vector<double>& eta_samples);
const std::vector<double>& default_residual_samples();

struct PinCandidate {
  EigenConvention convention;
  double residual = 0.0;
};
struct PinResult {
  EigenConvention winner;
  double residual = 0.0;
  std::vector<PinCandidate> candidates;
};
// Tries both signs and all four indices; throws ConventionUnresolved above `bound`.
PinResult pin_convention(const PotentialSpec& spec, std::complex<double> lambda, double energy, int order,
                         double bound = 1e-9);

struct Level {
  int n = 0;
  double energy = 0.0;
  std::complex<double> lambda;
};

struct Spectrum {
  std::vector<Level> states;
  int n_max_constructive = -1;  // highest level index found constructively
  int n_max_formula = 0;        // floor(lambda0_R), the counting formula
  int count_constructive = 0;
  int count_formula = 0;        // n_max_formula + 1 levels
  bool formula_discrepancy = false;
  std::vector<std::string> diagnostics;
};

Spectrum enumerate_bound_spectrum(const PotentialSpec& spec);

struct BoundState {
  int n = 0;
  double energy = 0.0;
  std::complex<double> lambda;
  ClosedFormSolution solution;
  double scale = 1.0;  // psi = scale * eta'^{-1/2} Phi
  double residual = 0.0;
  int poly_roots = 0;
  std::vector<double> psi;  // on the map grid

  double psi_at_eta(double eta, const TangentPolySpec& tp) const;
};

BoundState assemble_eigenfunction(const PotentialSpec& spec, int n, const VariableMap& map);
// Same as above with the spectrum already computed.
BoundState assemble_eigenfunction(const PotentialSpec& spec, const Level& level, const VariableMap* map);

// Integral of psi_a psi_b dx evaluated in eta.
double overlap(const BoundState& a, const BoundState& b, const TangentPolySpec& tp);

struct AehSolution {
  RootKind kind = RootKind::C;
  int m = 0;
  double energy = 0.0;
  std::complex<double> lambda;
  ClosedFormSolution solution;
  bool nodeless = false;
  int poly_roots = 0;
  double residual = 0.0;
};

AehSolution aeh_solution(const PotentialSpec& spec, RootKind kind, int m);

struct GendenshteinParams {
  PotentialSpec spec;
  double a = 0.0, b = 0.0;
  std::complex<double> lambda0;
  double V1 = 0.0, V2 = 0.0;
};
GendenshteinParams gendenshtein_params(double a, double b);

PotentialSpec milson_spec(std::complex<double> h0, double kappa_plus);
PotentialSpec milson_spec_from_lambda0(std::complex<double> lambda0, double kappa_plus);

struct SigmaRho {
  double sigma = 0.0;
  std::complex<double> rho;
  double real_lhs = 0.0, real_rhs_alt = 0.0, real_rhs = 0.0;
  std::complex<double> imag_lhs;
  double imag_rhs_alt = 0.0;
  double two_lr_li = 0.0;
};
SigmaRho milson_sigma_rho(const PotentialSpec& spec, double epsilon);

struct StevensonCheck {
  double deviation = 0.0;                 // with xi^{-n}
  double deviation_positive_power = 0.0;  // with xi^{+n}
};
StevensonCheck stevenson_identity_check(std::complex<double> lambda, int n, const std::vector<double>& eta_samples);
StevensonCheck stevenson_identity_check(const PotentialSpec& spec, int n, const std::vector<double>& eta_samples);

struct ScanCell {
  double a = 0.0, b = 0.0;
  std::optional<bool> empirical_nodeless;
  bool boundary_rule = false;
  std::optional<bool> canonical_disc;  // only for m = 2
  int poly_roots = -1;
  int sign_changes = -1;
  bool consistent = false;
};
struct ScanRange {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  double at(int i) const { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1); }
};
std::vector<ScanCell> nodeless_scan(const ScanRange& a_range, const ScanRange& b_range, int m, int workers = 1);

}  // namespace spectra
