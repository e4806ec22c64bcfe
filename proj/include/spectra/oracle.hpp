#pragma once

#include <functional>
#include <vector>

namespace spectra {

// Uniform grid with sampled values (the potential, for the eigensolver).
struct Grid1D {
  double x_min = 0.0;
  double x_max = 0.0;
  int n = 0;
  std::vector<double> values;

  static Grid1D sample(double x_min, double x_max, int n, const std::function<double(double)>& f);
  double step() const { return (x_max - x_min) / (n - 1); }
  double x(int i) const { return x_min + i * step(); }
  void validate() const;
};

struct EigenEstimate {
  double energy = 0.0;
  int nodes = 0;
  double bracket_width = 0.0;
};

struct NumerovOptions {
  double tol = 1e-10;
  // Optional analytic guesses; each is used only if node counting confirms it.
  const std::vector<double>* seeds = nullptr;
  // Upper end of the energy search (0 for bound states of a decaying potential).
  double e_max = 0.0;
  bool require_decay = true;
};

// Number of Dirichlet-box eigenvalues below eps (discrete Sturm count).
int numerov_node_count(const Grid1D& V, double eps);

// Lowest `count` eigenvalues below opts.e_max. count <= 0 means all of them.
std::vector<EigenEstimate> numerov_spectrum(const Grid1D& V, int count, double tol,
                                            const std::vector<double>* seeds = nullptr);
std::vector<EigenEstimate> numerov_solve(const Grid1D& V, int count, const NumerovOptions& opts);

// Confining-potential variant: no decay requirement, search above zero.
std::vector<EigenEstimate> numerov_box_spectrum(const Grid1D& V, int count, double tol);

// Left-to-right Numerov solution with psi(x_min) = 0, rescaled to max |psi| = 1.
std::vector<double> numerov_shoot_left(const Grid1D& V, double eps);

// Strict sign changes; near-zero stretches below 1e-12 are refined with f when given.
int count_sign_changes(const std::vector<double>& samples);
int count_sign_changes(const std::function<double(double)>& f, const std::vector<double>& xs);

}  // namespace spectra
