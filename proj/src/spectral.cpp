#include "spectra/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <mutex>
#include <thread>

#include "spectra/errors.hpp"
#include "spectra/oracle.hpp"
#include "spectra/quadrature.hpp"
#include "spectra/roots.hpp"

namespace spectra {

namespace {

double log_cosh(double u) {
  const double a = std::fabs(u);
  return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

// R(sinh u) / cosh(u)^n without overflow.
double scaled_poly(const RealPolynomial& p, int n, double u) {
  const double t = std::tanh(u), sech = 1.0 / std::cosh(u);
  // sum c_k tanh^k sech^{n-k}
  double acc = 0.0, tk = 1.0;
  const auto& c = p.coeffs();
  for (int k = 0; k < static_cast<int>(c.size()); ++k) {
    acc += c[k] * tk * std::pow(sech, n - k);
    tk *= t;
  }
  return acc;
}

// Phi_a Phi_b / eta'^2 * cosh u, the integrand of psi_a psi_b dx after eta = sinh u.
struct PairIntegrand {
  const ClosedFormSolution& a;
  const ClosedFormSolution& b;
  const TangentPolySpec& tp;

  double exponent() const {
    return (1.0 - a.lambda.real() + a.order) + (1.0 - b.lambda.real() + b.order) - 1.0;
  }
  double operator()(double u) const {
    const double eta = std::sinh(u);
    const double at = std::atan(eta);
    const double ex = a.convention.sign * a.lambda.imag() * at + b.convention.sign * b.lambda.imag() * at;
    const double t = std::tanh(u), sech = 1.0 / std::cosh(u);
    const double tq = tp.a * (t * t + tp.kappa_plus * sech * sech) - tp.c_im * t * sech;  // T / cosh^2
    return std::exp(exponent() * log_cosh(u) + ex) * scaled_poly(a.poly.poly, a.order, u) *
           scaled_poly(b.poly.poly, b.order, u) * tq;
  }
};

double pair_integral(const ClosedFormSolution& a, const ClosedFormSolution& b, const TangentPolySpec& tp,
                     double rel_tol) {
  PairIntegrand f{a, b, tp};
  const double decay = -f.exponent();
  if (!(decay > 0.0)) throw Error(ErrorCode::NonIntegrable, "eigenfunction product is not square integrable");
  const double U = std::min(60.0 / decay, 1e6);
  auto g = [&](double u) { return f(u); };
  // Rough scale from the bulk, then the adaptive pass with a relative target.
  double scale = 0.0;
  for (int i = -20; i <= 20; ++i) scale = std::max(scale, std::fabs(g(U * i / 20.0)));
  for (int i = -50; i <= 50; ++i) scale = std::max(scale, std::fabs(g(0.1 * i)));
  const double tol = rel_tol * std::max(scale, 1e-300);
  return adaptive_quadrature(g, -U, 0.0, tol, 20000).value + adaptive_quadrature(g, 0.0, U, tol, 20000).value;
}

const std::vector<double> kResidualSamples = {-4.0, -2.5, -1.3, -0.6, -0.1, 0.35, 0.9, 1.7, 3.1, 4.5};

EigenConvention preferred_convention() { return {}; }

int index_rank(const EigenConvention& c) {
  // Preferred (frozen) convention first so that exact ties resolve to it.
  const EigenConvention p = preferred_convention();
  if (c.sign == p.sign && c.index == p.index) return 0;
  return 1 + static_cast<int>(c.index) * 2 + (c.sign > 0 ? 1 : 0);
}

std::complex<double> rising(std::complex<double> x, int k) {
  std::complex<double> acc = 1.0;
  for (int j = 0; j < k; ++j) acc *= x + static_cast<double>(j);
  return acc;
}

}  // namespace

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::C: return "c";
    case RootKind::D: return "d";
    default: return "other";
  }
}

std::string to_string(IndexChoice c) {
  switch (c) {
    case IndexChoice::MinusLambdaConj: return "-lambda*";
    case IndexChoice::MinusLambda: return "-lambda";
    case IndexChoice::MinusLambdaConjPlusOne: return "-lambda*+1";
    default: return "-lambda+1";
  }
}

LambdaBranch lambda_of_energy(const PotentialSpec& spec, double epsilon) {
  const std::complex<double> arg = spec.h0 + 1.0 - std::conj(spec.tp.c()) * epsilon;
  const std::complex<double> l = std::sqrt(arg);
  if (arg == 0.0 || !(l.real() > 0.0)) {
    std::ostringstream os;
    os << "h(eps) + 1 = " << arg << " at eps = " << epsilon << " is on the branch cut";
    throw Error(ErrorCode::BranchUndefined, os.str());
  }
  return {l, epsilon};
}

ExactPolynomial quartic_polynomial(const PotentialSpec& spec, int m) {
  const Rational k = exact(spec.tp.kappa_plus);
  const Rational hr = exact(spec.h0.real()), hi = exact(spec.h0.imag());
  const Rational mu = Rational(2 * m + 1, 2);
  const Rational one_k = 1 - k;
  return ExactPolynomial({-hi * hi / 4, Rational(0), -(hr + 1 + one_k * mu * mu), 2 * mu * one_k, k});
}

std::vector<QuarticRoot> quartic_lambda_roots(const PotentialSpec& spec, int m) {
  if (!spec.tp.symmetric()) throw Error(ErrorCode::InvalidArgument, "quartic needs a symmetric tangent polynomial");
  const ExactPolynomial q = quartic_polynomial(spec, m);
  std::vector<double> roots = real_roots(q);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  const double mu = m + 0.5;
  std::vector<QuarticRoot> out;
  for (double l : roots) {
    QuarticRoot r;
    r.lambda_re = l;
    r.lambda_im = l == 0.0 ? 0.0 : spec.h0.imag() / (2.0 * l);
    r.kind = l > mu ? RootKind::C : (l < 0.0 ? RootKind::D : RootKind::Other);
    r.energy = -(l - mu) * (l - mu) / spec.tp.a;
    r.residual = std::fabs(q.eval(l));
    out.push_back(r);
  }
  return out;
}

double lambda0_re_closed_form(std::complex<double> h0) {
  const double p = h0.real() + 1.0, q = h0.imag();
  return std::sqrt(0.5 * p + std::sqrt(0.25 * p * p + 0.25 * q * q));
}

double lambda0_re_unscaled(std::complex<double> h0) {
  const double p = h0.real() + 1.0, q = h0.imag();
  return std::sqrt(0.5 * p + std::sqrt(0.25 * p * p + q * q));
}

ComplexIndex convention_index(const EigenConvention& c, std::complex<double> lambda) {
  switch (c.index) {
    case IndexChoice::MinusLambdaConj: return {-lambda.real(), lambda.imag()};
    case IndexChoice::MinusLambda: return {-lambda.real(), -lambda.imag()};
    case IndexChoice::MinusLambdaConjPlusOne: return {1.0 - lambda.real(), lambda.imag()};
    default: return {1.0 - lambda.real(), -lambda.imag()};
  }
}

ClosedFormSolution make_solution(std::complex<double> lambda, double energy, int order, const EigenConvention& c) {
  ClosedFormSolution s;
  s.lambda = lambda;
  s.energy = energy;
  s.order = order;
  s.convention = c;
  s.poly = routh_polynomial(order, convention_index(c, lambda));
  return s;
}

double ClosedFormSolution::phi(double eta) const {
  const double p = 0.5 * (1.0 - lambda.real()), q = convention.sign * lambda.imag();
  return std::pow(1.0 + eta * eta, p) * std::exp(q * std::atan(eta)) * poly(eta);
}

void ClosedFormSolution::phi3(double eta, double& f, double& df, double& ddf) const {
  const double p = 0.5 * (1.0 - lambda.real()), q = convention.sign * lambda.imag();
  const double u = 1.0 + eta * eta;
  const double G = std::pow(u, p) * std::exp(q * std::atan(eta));
  const double L1 = (2.0 * p * eta + q) / u;
  const double L2 = (2.0 * p * u - 2.0 * eta * (2.0 * p * eta + q)) / (u * u);
  double r, r1, r2;
  poly.poly.eval3(eta, r, r1, r2);
  f = G * r;
  df = G * (L1 * r + r1);
  ddf = G * ((L2 + L1 * L1) * r + 2.0 * L1 * r1 + r2);
}

void ClosedFormSolution::log_derivs(double eta, double& l1, double& l2) const {
  const double p = 0.5 * (1.0 - lambda.real()), q = convention.sign * lambda.imag();
  const double u = 1.0 + eta * eta;
  const double L1 = (2.0 * p * eta + q) / u;
  const double L2 = (2.0 * p * u - 2.0 * eta * (2.0 * p * eta + q)) / (u * u);
  double r, r1, r2;
  poly.poly.eval3(eta, r, r1, r2);
  l1 = L1 + r1 / r;
  l2 = L2 + (r2 * r - r1 * r1) / (r * r);
}

double rcsle_residual(const PotentialSpec& spec, double epsilon, const Phi3& phi,
                      const std::vector<double>& eta_samples) {
  double worst = 0.0;
  for (double eta : eta_samples) {
    double f, df, ddf;
    phi(eta, f, df, ddf);
    const double r = std::fabs(ddf + bose_invariant_eval(spec, epsilon, eta) * f) / (1.0 + std::fabs(f));
    worst = std::max(worst, r);
  }
  return worst;
}

double rcsle_residual(const PotentialSpec& spec, const ClosedFormSolution& sol, const std::vector<double>& eta_samples) {
  return rcsle_residual(
      spec, sol.energy, [&](double e, double& f, double& d1, double& d2) { sol.phi3(e, f, d1, d2); }, eta_samples);
}

const std::vector<double>& default_residual_samples() { return kResidualSamples; }

PinResult pin_convention(const PotentialSpec& spec, std::complex<double> lambda, double energy, int order,
                         double bound) {
  PinResult res;
  for (int idx = 0; idx < 4; ++idx) {
    for (int sign : {-1, 1}) {
      EigenConvention c{sign, static_cast<IndexChoice>(idx)};
      ClosedFormSolution s = make_solution(lambda, energy, order, c);
      res.candidates.push_back({c, rcsle_residual(spec, s, kResidualSamples)});
    }
  }
  std::stable_sort(res.candidates.begin(), res.candidates.end(), [](const PinCandidate& x, const PinCandidate& y) {
    // Residuals within rounding of each other count as a tie.
    const double tie = 1e-12;
    if (std::fabs(x.residual - y.residual) > tie) return x.residual < y.residual;
    return index_rank(x.convention) < index_rank(y.convention);
  });
  res.winner = res.candidates.front().convention;
  res.residual = res.candidates.front().residual;
  if (!(res.residual < bound)) {
    std::ostringstream os;
    os << "no eigenfunction convention reaches residual " << bound << " (best " << res.residual << ")";
    throw Error(ErrorCode::ConventionUnresolved, os.str());
  }
  return res;
}

Spectrum enumerate_bound_spectrum(const PotentialSpec& spec) {
  Spectrum s;
  const double l0r = spec.lambda0().real();
  s.n_max_formula = static_cast<int>(std::floor(l0r));
  s.count_formula = s.n_max_formula + 1;
  for (int n = 0; n < 10000; ++n) {
    const auto roots = quartic_lambda_roots(spec, n);
    const QuarticRoot* best = nullptr;
    for (const auto& r : roots)
      if (r.kind == RootKind::C && (!best || r.lambda_re > best->lambda_re)) best = &r;
    if (!best) break;
    if (std::fabs(best->energy) < 1e-10) {
      std::ostringstream os;
      os << "level n=" << n << " at eps=" << best->energy << " is at threshold and was excluded";
      s.diagnostics.push_back(os.str());
      break;
    }
    s.states.push_back({n, best->energy, {best->lambda_re, best->lambda_im}});
  }
  s.count_constructive = static_cast<int>(s.states.size());
  s.n_max_constructive = s.count_constructive - 1;
  s.formula_discrepancy = s.count_formula != s.count_constructive;
  if (s.formula_discrepancy) {
    std::ostringstream os;
    os << "counting formula floor(lambda0_R) = " << s.n_max_formula << " implies " << s.count_formula
       << " levels; constructive enumeration finds " << s.count_constructive;
    s.diagnostics.push_back(os.str());
  }
  return s;
}

double BoundState::psi_at_eta(double eta, const TangentPolySpec& tp) const {
  return scale * solution.phi(eta) / std::sqrt(eta_prime(tp, eta));
}

BoundState assemble_eigenfunction(const PotentialSpec& spec, const Level& level, const VariableMap* map) {
  const PinResult pin = pin_convention(spec, level.lambda, level.energy, level.n);
  BoundState b;
  b.n = level.n;
  b.energy = level.energy;
  b.lambda = level.lambda;
  b.solution = make_solution(level.lambda, level.energy, level.n, pin.winner);
  b.residual = pin.residual;
  b.poly_roots = count_real_roots(b.solution.poly.exact);
  const double norm2 = pair_integral(b.solution, b.solution, spec.tp, 1e-13);
  b.scale = 1.0 / std::sqrt(norm2);
  // Fix the overall sign so psi is positive as eta -> -infinity.
  const auto& c = b.solution.poly.poly.coeffs();
  if (!c.empty() && ((c.size() - 1) % 2 == 0 ? c.back() < 0.0 : c.back() > 0.0)) b.scale = -b.scale;
  if (map) {
    b.psi.resize(map->eta().size());
    for (std::size_t i = 0; i < b.psi.size(); ++i) b.psi[i] = b.psi_at_eta(map->eta()[i], spec.tp);
  }
  return b;
}

BoundState assemble_eigenfunction(const PotentialSpec& spec, int n, const VariableMap& map) {
  const Spectrum s = enumerate_bound_spectrum(spec);
  if (n < 0 || n >= static_cast<int>(s.states.size())) {
    std::ostringstream os;
    os << "level " << n << " is not in the bound spectrum (" << s.states.size() << " levels)";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  return assemble_eigenfunction(spec, s.states[n], &map);
}

double overlap(const BoundState& a, const BoundState& b, const TangentPolySpec& tp) {
  return a.scale * b.scale * pair_integral(a.solution, b.solution, tp, 1e-13);
}

AehSolution aeh_solution(const PotentialSpec& spec, RootKind kind, int m) {
  if (kind == RootKind::Other) throw Error(ErrorCode::InvalidArgument, "AEH kind must be c or d");
  const auto roots = quartic_lambda_roots(spec, m);
  const QuarticRoot* pick = nullptr;
  for (const auto& r : roots) {
    if (r.kind != kind) continue;
    if (!pick || (kind == RootKind::C ? r.lambda_re > pick->lambda_re : r.lambda_re < pick->lambda_re)) pick = &r;
  }
  if (!pick) {
    std::ostringstream os;
    os << "quartic has no type-" << to_string(kind) << " root at order " << m;
    throw Error(ErrorCode::NoSuchRoot, os.str());
  }
  const std::complex<double> lambda(pick->lambda_re, pick->lambda_im);
  const PinResult pin = pin_convention(spec, lambda, pick->energy, m);
  AehSolution a;
  a.kind = kind;
  a.m = m;
  a.energy = pick->energy;
  a.lambda = lambda;
  a.solution = make_solution(lambda, pick->energy, m, pin.winner);
  a.residual = pin.residual;
  a.poly_roots = a.solution.poly.exact.degree() < 1 ? 0 : count_real_roots(a.solution.poly.exact);
  a.nodeless = a.poly_roots == 0;
  return a;
}

GendenshteinParams gendenshtein_params(double a, double b) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "Gendenshtein parameter a must be positive");
  GendenshteinParams g;
  g.a = a;
  g.b = b;
  g.lambda0 = {a + 0.5, b};
  const std::complex<double> h0 = g.lambda0 * g.lambda0 - 1.0;
  TangentPolySpec tp;
  g.spec = PotentialSpec::from_h0(h0, tp);
  g.V1 = (-4.0 * h0.real() - 3.0) / (4.0 * tp.a);
  g.V2 = h0.imag() / (4.0 * tp.a);
  return g;
}

PotentialSpec milson_spec(std::complex<double> h0, double kappa_plus) {
  TangentPolySpec tp;
  tp.kappa_plus = kappa_plus;
  return PotentialSpec::from_h0(h0, tp);
}

PotentialSpec milson_spec_from_lambda0(std::complex<double> lambda0, double kappa_plus) {
  return milson_spec(lambda0 * lambda0 - 1.0, kappa_plus);
}

SigmaRho milson_sigma_rho(const PotentialSpec& spec, double epsilon) {
  const LambdaBranch l = lambda_of_energy(spec, epsilon);
  SigmaRho r;
  r.sigma = 0.5 - l.value.real();
  r.rho = std::complex<double>(0.5, -l.value.imag());
  const std::complex<double> sm = r.sigma - 0.5, rm = r.rho - 0.5;
  const std::complex<double> lhs = sm * sm + rm * rm;
  r.real_lhs = lhs.real();
  const double one_k = 1.0 - spec.tp.kappa_plus;
  r.real_rhs_alt = spec.h0.real() + 1.0 + one_k * epsilon;
  r.real_rhs = spec.h0.real() + 1.0 - spec.tp.a * one_k * epsilon;
  r.imag_lhs = 2.0 * std::complex<double>(0.0, 1.0) * rm * sm;
  r.imag_rhs_alt = spec.h0.imag();
  r.two_lr_li = 2.0 * l.value.real() * l.value.imag();
  return r;
}

StevensonCheck stevenson_identity_check(std::complex<double> lambda, int n, const std::vector<double>& eta_samples) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "order must be non-negative");
  const double c = 2.0 * (lambda.real() - n);
  for (int k = 0; k < n; ++k) {
    if (c + k == 0.0) throw Error(ErrorCode::DegenerateParameter, "Pochhammer denominator vanishes");
  }
  const std::complex<double> lc = std::conj(lambda);
  const std::complex<double> b_par = lc - static_cast<double>(n);
  double fact = 1.0;
  for (int j = 2; j <= n; ++j) fact *= j;
  static const std::complex<double> ip[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> scale = ip[n % 4] * rising(c, n) / fact;
  const RouthPolynomial R = routh_polynomial(n, {1.0 - lc.real(), -lc.imag()});
  double dev = 0.0, dev_pos = 0.0, rmax = 0.0;
  for (double eta : eta_samples) {
    const std::complex<double> xi = stevenson_xi(eta);
    std::complex<double> term = 1.0, F = 1.0;
    for (int k = 0; k < n; ++k) {
      term *= static_cast<double>(k - n) * (b_par + static_cast<double>(k)) / ((c + k) * (k + 1.0)) * xi;
      F += term;
    }
    const double r = R(eta);
    rmax = std::max(rmax, std::fabs(r));
    const std::complex<double> lhs = scale * std::pow(xi, -n) * F;
    const std::complex<double> lhs_p = scale * std::pow(xi, n) * F;
    dev = std::max(dev, std::abs(lhs - r));
    dev_pos = std::max(dev_pos, std::abs(lhs_p - r));
  }
  const double s = std::max(rmax, 1e-300);
  return {dev / s, dev_pos / s};
}

StevensonCheck stevenson_identity_check(const PotentialSpec& spec, int n, const std::vector<double>& eta_samples) {
  const auto roots = quartic_lambda_roots(spec, n);
  for (const auto& r : roots)
    if (r.kind == RootKind::C) return stevenson_identity_check(std::complex<double>(r.lambda_re, r.lambda_im), n, eta_samples);
  throw Error(ErrorCode::NoSuchRoot, "no terminating solution at this order");
}

std::vector<ScanCell> nodeless_scan(const ScanRange& ar, const ScanRange& br, int m, int workers) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "scan order must be even and at least 2");
  if (ar.n < 1 || br.n < 1 || !(ar.hi >= ar.lo) || !(br.hi >= br.lo) || !(ar.lo > 0.0))
    throw Error(ErrorCode::InvalidArgument, "scan ranges need a > 0, lo <= hi and at least one point");
  const int total = ar.n * br.n;
  std::vector<ScanCell> cells(total);
  std::vector<double> xs;
  for (int i = 0; i <= 3000; ++i) xs.push_back(-15.0 + 30.0 * i / 3000.0);
  auto work = [&](int idx) {
    ScanCell& c = cells[idx];
    c.a = ar.at(idx / br.n);
    c.b = br.at(idx % br.n);
    const double bound = (2 * c.a + 5) * (2 * c.a + 5) / (6 * c.a + 11);
    c.boundary_rule = c.b * c.b < bound;
    try {
      const GendenshteinParams g = gendenshtein_params(c.a, c.b);
      const AehSolution s = aeh_solution(g.spec, RootKind::D, m);
      c.empirical_nodeless = s.nodeless;
      c.poly_roots = s.poly_roots;
      if (m == 2) c.canonical_disc = discriminant_order2(s.solution.poly.alpha).computed < 0.0;
      // Divide out the growth at both ends so the sampled range stays O(1).
      const double grow = 1.0 - s.lambda.real() + m;
      c.sign_changes = count_sign_changes(
          [&](double x) { return s.solution.phi(std::sinh(x)) / std::pow(std::cosh(x), grow); }, xs);
      c.consistent = c.sign_changes == c.poly_roots;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSuchRoot) throw;
      c.consistent = true;
    }
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    for (int i = 0; i < total; ++i) work(i);
    return cells;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex fail_mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < total; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(fail_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return cells;
}

}  // namespace spectra
