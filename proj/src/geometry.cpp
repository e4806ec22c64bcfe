#include "spectra/geometry.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

#include "spectra/errors.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

namespace {

using GL = boost::math::quadrature::gauss<double, 20>;

// dx/du with u = asinh(eta).
double dx_du(const TangentPolySpec& tp, double u) {
  return std::sqrt(tangent_eval(tp, std::sinh(u))) / std::cosh(u);
}

double x_of_eta_quad(const TangentPolySpec& tp, double eta) {
  const double u = std::asinh(eta);
  if (u == 0.0) return 0.0;
  auto f = [&](double s) { return dx_du(tp, s); };
  // Split into unit pieces; the integrand is smooth and tends to sqrt(a).
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::fabs(u))));
  double acc = 0.0;
  for (int k = 0; k < pieces; ++k) {
    double lo = u * k / pieces, hi = u * (k + 1) / pieces;
    acc += GL::integrate(f, lo, hi);
  }
  return acc;
}

}  // namespace

TangentPolySpec TangentPolySpec::from_general(std::complex<double> c, double d) {
  TangentPolySpec tp;
  tp.a = (2.0 * c.real() + d) / 4.0;
  if (!(tp.a > 0.0)) throw Error(ErrorCode::InvalidArgument, "tangent polynomial leading coefficient must be positive");
  tp.kappa_plus = (d - 2.0 * c.real()) / (4.0 * tp.a);
  tp.c_im = c.imag();
  tp.validate();
  return tp;
}

void TangentPolySpec::validate() const {
  if (!std::isfinite(a) || !std::isfinite(kappa_plus) || !std::isfinite(c_im))
    throw Error(ErrorCode::InvalidArgument, "tangent polynomial coefficients must be finite");
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "tangent polynomial leading coefficient must be positive");
  if (!(c_im * c_im - 4.0 * a * a * kappa_plus < 0.0)) {
    std::ostringstream os;
    os << "tangent polynomial has real zeros (a=" << a << ", kappa_plus=" << kappa_plus << ", c_im=" << c_im << ")";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

double tangent_eval(const TangentPolySpec& tp, double eta) {
  return tp.a * (eta * eta + tp.kappa_plus) - tp.c_im * eta;
}

PotentialSpec PotentialSpec::from_h0(std::complex<double> h0, const TangentPolySpec& tp) {
  return make(h0, 2.0 * h0.real() + 1.0, tp);
}

PotentialSpec PotentialSpec::make(std::complex<double> h0, double O00, const TangentPolySpec& tp) {
  tp.validate();
  if (!std::isfinite(h0.real()) || !std::isfinite(h0.imag()) || !std::isfinite(O00))
    throw Error(ErrorCode::InvalidArgument, "potential parameters must be finite");
  const double expected = 2.0 * h0.real() + 1.0;
  if (std::fabs(O00 - expected) > 1e-12 * std::max(1.0, std::fabs(expected))) {
    std::ostringstream os;
    os << "O00 = " << O00 << " breaks the vanishing-at-infinity constraint O00 = 2 Re h0 + 1 = " << expected;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  PotentialSpec s;
  s.h0 = h0;
  s.O00 = O00;
  s.tp = tp;
  if (!(s.lambda0().real() > 0.0)) throw Error(ErrorCode::BranchUndefined, "Re sqrt(h0 + 1) must be positive");
  return s;
}

std::complex<double> PotentialSpec::lambda0() const { return std::sqrt(h0 + 1.0); }

double bose_invariant_eval(const PotentialSpec& spec, double epsilon, double eta) {
  const std::complex<double> h = spec.h0 - std::conj(spec.tp.c()) * epsilon;
  const double O = spec.O00 + spec.tp.d() * epsilon;
  const std::complex<double> zp(eta, 1.0);
  const double pair = 2.0 * (h / (zp * zp)).real();
  return -0.25 * (pair - O / (eta * eta + 1.0));
}

double eta_prime(const TangentPolySpec& tp, double eta) {
  return (1.0 + eta * eta) / std::sqrt(tangent_eval(tp, eta));
}

VariableMap::VariableMap(const TangentPolySpec& tp, double x_max, int n_points) : tp_(tp), x_max_(x_max) {
  tp.validate();
  if (!(x_max > 0.0) || n_points < 64)
    throw Error(ErrorCode::InvalidArgument, "variable map needs x_max > 0 and at least 64 points");
  const int n = n_points;
  x_.resize(n);
  eta_.assign(n, 0.0);
  for (int i = 0; i < n; ++i) x_[i] = (2.0 * i - (n - 1)) * x_max / (n - 1);

  namespace odeint = boost::numeric::odeint;
  using state = double;
  auto rhs = [this](const state& u, state& du, double /*x*/) {
    const double e = std::sinh(u);
    du = std::cosh(u) / std::sqrt(tangent_eval(tp_, e));
  };
  auto run = [&](std::vector<double> times, std::vector<double>& out_u) {
    auto stepper = odeint::make_controlled(1e-14, 1e-14, odeint::runge_kutta_fehlberg78<state>());
    state u = 0.0;
    out_u.clear();
    try {
      odeint::integrate_times(stepper, rhs, u, times.begin(), times.end(), 1e-3 * (times.size() > 1 ? times[1] - times[0] : 1.0),
                              [&](const state& s, double) { out_u.push_back(s); },
                              odeint::max_step_checker(1000000));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::StepFailure, std::string("Liouville map integration failed: ") + e.what());
    }
  };
  // Forward from x = 0 over the non-negative nodes, backward over the negative ones.
  std::vector<double> fwd{0.0}, bwd{0.0};
  int first_pos = -1;
  for (int i = 0; i < n; ++i) {
    if (x_[i] > 0.0) {
      if (first_pos < 0) first_pos = i;
      fwd.push_back(x_[i]);
    }
  }
  for (int i = n - 1; i >= 0; --i)
    if (x_[i] < 0.0) bwd.push_back(x_[i]);
  std::vector<double> uf, ub;
  run(fwd, uf);
  run(bwd, ub);
  for (std::size_t k = 1; k < uf.size(); ++k) eta_[first_pos + k - 1] = std::sinh(uf[k]);
  int neg = 0;
  for (int i = n - 1; i >= 0; --i)
    if (x_[i] < 0.0) eta_[i] = std::sinh(ub[++neg]);
  for (int i = 1; i < n; ++i) {
    if (!(eta_[i] > eta_[i - 1])) throw Error(ErrorCode::StepFailure, "Liouville map lost monotonicity");
  }
}

double VariableMap::eta_of_x(double x) const {
  const double h = step();
  if (!(std::fabs(x) <= x_max_ * (1.0 + 1e-14))) {
    std::ostringstream os;
    os << "x = " << x << " outside the map grid [-" << x_max_ << ", " << x_max_ << "]";
    throw Error(ErrorCode::OutOfGrid, os.str());
  }
  int i = static_cast<int>(std::lround((x + x_max_) / h));
  i = std::clamp(i, 0, size() - 1);
  if (x == x_[i]) return eta_[i];
  const double ui = std::asinh(eta_[i]);
  auto f = [&](double s) { return dx_du(tp_, s); };
  double u = ui + (x - x_[i]) / f(ui);
  for (int it = 0; it < 20; ++it) {
    const double g = x_[i] + GL::integrate(f, ui, u) - x;
    const double du = g / f(u);
    u -= du;
    if (std::fabs(du) < 1e-16 * std::max(1.0, std::fabs(u))) break;
  }
  return std::sinh(u);
}

double VariableMap::x_of_eta(double eta) const { return x_of_eta_quad(tp_, eta); }

VariableMap build_variable_map(const TangentPolySpec& tp, double x_max, int n_points) {
  return VariableMap(tp, x_max, n_points);
}

double schwarzian_eval(const TangentPolySpec& tp, double eta) {
  if (!tp.symmetric()) return schwarzian_generic(tp, eta);
  const double k = tp.kappa_plus, e2 = eta * eta;
  const double r = (1.0 + e2) / (e2 + k);
  const double closed = (1.0 - e2) / (e2 + k) - r * r * (-0.5 - (k + 1.0) / (e2 + 1.0) + 2.5 * k / (e2 + k));
  return closed / tp.a;
}

double schwarzian_generic(const TangentPolySpec& tp, double eta) {
  const double T = tangent_eval(tp, eta);
  const double T1 = 2.0 * tp.a * eta - tp.c_im, T2 = 2.0 * tp.a;
  const double s = 1.0 / std::sqrt(T);
  const double s1 = -0.5 * T1 * s * s * s;
  const double s2 = -0.5 * T2 * s * s * s + 0.75 * T1 * T1 * s * s * s * s * s;
  const double u = 1.0 + eta * eta, u1 = 2.0 * eta, u2 = 2.0;
  const double F = u * s, F1 = u1 * s + u * s1, F2 = u2 * s + 2.0 * u1 * s1 + u * s2;
  return F * F2 - 0.5 * F1 * F1;
}

double potential_at_eta(const PotentialSpec& spec, double eta) {
  const double hr = spec.h0.real(), hi = spec.h0.imag();
  const double num = 4.0 * hr - 4.0 * hi * eta + eta * eta + 1.0;
  return -num / (4.0 * tangent_eval(spec.tp, eta)) - 0.5 * schwarzian_eval(spec.tp, eta);
}

double potential_eval(const PotentialSpec& spec, const VariableMap& map, double x) {
  return potential_at_eta(spec, map.eta_of_x(x));
}

std::complex<double> stevenson_xi(double eta) { return 2.0 / std::complex<double>(1.0, eta); }

double decay_x_max(const PotentialSpec& spec, double tol) {
  double worst = 0.0;
  for (int sign : {-1, 1}) {
    double last_bad = 0.0;
    for (double le = -3.0; le <= 14.0; le += 0.05) {
      const double eta = sign * std::pow(10.0, le);
      if (std::fabs(potential_at_eta(spec, eta)) >= tol) last_bad = std::pow(10.0, le + 0.05);
    }
    worst = std::max(worst, std::fabs(x_of_eta_quad(spec.tp, sign * last_bad)));
  }
  return worst;
}

}  // namespace spectra
