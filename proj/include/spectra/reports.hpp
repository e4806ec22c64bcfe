#pragma once

#include <map>
#include <string>
#include <vector>

#include "spectra/darboux.hpp"
#include "spectra/json_io.hpp"
#include "spectra/oracle.hpp"

namespace spectra {

// Uniform x-grid and map for the oracle: [-x_max, x_max] at spacing about h.
struct OracleGrid {
  double x_max = 0.0;
  int n = 0;
};
OracleGrid default_oracle_grid(const PotentialSpec& spec);
Grid1D sample_potential(const PotentialSpec& spec, const VariableMap& map);

struct LevelCheck {
  int n = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_error = 0.0;
  int numeric_nodes = -1;
  int poly_roots = -1;
};

struct SpectrumVerification {
  std::vector<LevelCheck> levels;
  int analytic_count = 0;
  int numeric_count = 0;
  double x_max = 0.0;
  int n_points = 0;
  int doublings = 0;
  bool passed = false;
};

// Analytic spectrum against Numerov. x_max is doubled until the numeric
// levels stop moving (at most three times); the analytic values only seed
// the brackets.
SpectrumVerification verify_spectrum(const PotentialSpec& spec, double rel_tol, const GridOptions& grid = {});

struct PartnerVerification {
  PartnerPotentialGrid grid;
  std::vector<double> expected;
  std::vector<EigenEstimate> numeric;
  std::vector<double> rel_errors;
  bool passed = false;
};
PartnerVerification verify_partner(const PotentialSpec& spec, RootKind kind, int m, double rel_tol,
                                   const GridOptions& grid = {});

struct CommandOutput {
  std::map<std::string, std::string> files;  // file name -> contents
  bool passed = true;
  std::string summary;
};

CommandOutput cmd_spectrum(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg, double tol);
CommandOutput cmd_scan_nodeless(const RunConfig& cfg, int workers);
CommandOutput cmd_partner(const RunConfig& cfg, double tol);
CommandOutput cmd_identities(const RunConfig& cfg);

// Comparison of the implemented conventions against alternate closed forms.
json identities_report();

}  // namespace spectra
