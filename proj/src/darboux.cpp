#include "spectra/darboux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spectra/errors.hpp"
#include "spectra/oracle.hpp"
#include "spectra/roots.hpp"

namespace spectra {

double FactorizationFunction::psi_at_eta(double eta, const TangentPolySpec& tp) const {
  return solution.phi(eta) / std::sqrt(eta_prime(tp, eta));
}

double FactorizationFunction::log_second_derivative(double eta, const TangentPolySpec& tp) const {
  const double u = 1.0 + eta * eta;
  const double T = tangent_eval(tp, eta);
  const double T1 = 2.0 * tp.a * eta - tp.c_im, T2 = 2.0 * tp.a;
  // ln eta' = ln(1+eta^2) - ln(T)/2
  const double le1 = 2.0 * eta / u - 0.5 * T1 / T;
  const double le2 = (2.0 * u - 4.0 * eta * eta) / (u * u) - 0.5 * (T2 * T - T1 * T1) / (T * T);
  double l1, l2;
  solution.log_derivs(eta, l1, l2);
  const double g1 = -0.5 * le1 + l1;
  const double g2 = -0.5 * le2 + l2;
  const double ep = eta_prime(tp, eta);
  const double ep1 = ep * le1;
  return ep * (ep1 * g1 + ep * g2);
}

FactorizationFunction ff_from_aeh(const AehSolution& s) {
  return {s.solution, s.energy, s.kind == RootKind::D ? "aeh-d" : "aeh-c"};
}

FactorizationFunction ff_from_bound_state(const BoundState& b) { return {b.solution, b.energy, "bound-state"}; }

PartnerPotentialGrid partner_potential(const PotentialSpec& spec, const FactorizationFunction& ff,
                                       const VariableMap& map) {
  const auto& etas = map.eta();
  // Exact root count of the polynomial factor inside the grid's eta range.
  const auto& p = ff.solution.poly.exact;
  if (p.degree() >= 1) {
    for (double r : real_roots(p)) {
      if (r >= etas.front() && r <= etas.back()) {
        std::ostringstream os;
        os << "factorization function vanishes at eta = " << r;
        throw Error(ErrorCode::NodeDetected, os.str());
      }
    }
  }
  PartnerPotentialGrid g;
  g.x = map.x();
  g.energy_tag = ff.energy;
  g.V_parent.resize(etas.size());
  g.V_partner.resize(etas.size());
  int sign = 0;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const double v = ff.solution.poly(etas[i]);
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0 || (sign != 0 && s != sign)) {
      std::ostringstream os;
      os << "factorization function changes sign near x = " << g.x[i];
      throw Error(ErrorCode::NodeDetected, os.str());
    }
    sign = s;
    g.V_parent[i] = potential_at_eta(spec, etas[i]);
    g.V_partner[i] = g.V_parent[i] - 2.0 * ff.log_second_derivative(etas[i], spec.tp);
  }
  return g;
}

SymmetricSolution symmetric_irregular_solution(const PotentialSpec& spec, double epsilon, const VariableMap& map) {
  if (spec.h0.imag() != 0.0 || !spec.tp.symmetric())
    throw Error(ErrorCode::PreconditionViolated, "symmetric construction needs h0_I = 0 and a symmetric map");
  const Spectrum s = enumerate_bound_spectrum(spec);
  const double e0 = s.states.empty() ? 0.0 : s.states.front().energy;
  if (!(epsilon < e0)) {
    std::ostringstream os;
    os << "energy " << epsilon << " is not below the ground level " << e0;
    throw Error(ErrorCode::PreconditionViolated, os.str());
  }
  Grid1D V;
  V.x_min = map.x().front();
  V.x_max = map.x().back();
  V.n = map.size();
  V.values.resize(V.n);
  for (int i = 0; i < V.n; ++i) V.values[i] = potential_at_eta(spec, map.eta()[i]);
  const std::vector<double> pa = numerov_shoot_left(V, epsilon);
  SymmetricSolution out;
  out.x = map.x();
  out.psi.resize(V.n);
  for (int i = 0; i < V.n; ++i) out.psi[i] = pa[i] + pa[V.n - 1 - i];
  out.min_value = *std::min_element(out.psi.begin(), out.psi.end());
  const double mx = *std::max_element(out.psi.begin(), out.psi.end());
  for (int i = 0; i < V.n; ++i)
    out.max_asymmetry = std::max(out.max_asymmetry, std::fabs(out.psi[i] - out.psi[V.n - 1 - i]) / mx);
  for (int i = 0; i < V.n; ++i)
    out.potential_asymmetry = std::max(out.potential_asymmetry, std::fabs(V.values[i] - V.values[V.n - 1 - i]));
  // psi(-x) is a solution only if V is even, so check the combined function directly.
  const double h2 = V.step() * V.step() / 12.0;
  auto w = [&](int i) { return 1.0 - h2 * (V.values[i] - epsilon); };
  for (int i = 1; i + 1 < V.n; ++i) {
    const double r = w(i + 1) * out.psi[i + 1] - (12.0 - 10.0 * w(i)) * out.psi[i] + w(i - 1) * out.psi[i - 1];
    out.residual = std::max(out.residual, std::fabs(r) / mx);
  }
  if (!(out.min_value > 0.0)) {
    std::ostringstream os;
    os << "symmetric solution is not positive (min " << out.min_value << ")";
    throw Error(ErrorCode::NodeDetected, os.str());
  }
  return out;
}

}  // namespace spectra
