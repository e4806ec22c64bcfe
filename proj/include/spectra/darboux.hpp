#pragma once

#include <string>
#include <vector>

#include "spectra/geometry.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

// psi(x) = eta'^{-1/2} Phi(eta(x)) built from a closed-form solution.
struct FactorizationFunction {
  ClosedFormSolution solution;
  double energy = 0.0;
  std::string source;  // "aeh-c", "aeh-d", "bound-state"

  double psi_at_eta(double eta, const TangentPolySpec& tp) const;
  // d^2/dx^2 ln|psi| via the chain rule in eta.
  double log_second_derivative(double eta, const TangentPolySpec& tp) const;
};

FactorizationFunction ff_from_aeh(const AehSolution& s);
FactorizationFunction ff_from_bound_state(const BoundState& b);

struct PartnerPotentialGrid {
  std::vector<double> x;
  std::vector<double> V_parent;
  std::vector<double> V_partner;
  double energy_tag = 0.0;
};

// V_hat = V - 2 (ln ff)''. Throws NodeDetected if ff changes sign on the grid.
PartnerPotentialGrid partner_potential(const PotentialSpec& spec, const FactorizationFunction& ff,
                                       const VariableMap& map);

// psi_d(x) = psi_a(x) + psi_a(-x) with psi_a the Numerov solution decaying at -infinity.
struct SymmetricSolution {
  std::vector<double> x;
  std::vector<double> psi;
  double min_value = 0.0;
  double max_asymmetry = 0.0;  // max |psi(x) - psi(-x)| / max psi
  double potential_asymmetry = 0.0;  // max |V(x) - V(-x)|
  double residual = 0.0;             // Numerov three-point residual of psi, relative to max psi
};
SymmetricSolution symmetric_irregular_solution(const PotentialSpec& spec, double epsilon, const VariableMap& map);

}  // namespace spectra
