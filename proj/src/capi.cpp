#include "spectra.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "spectra/errors.hpp"
#include "spectra/reports.hpp"
#include "spectra/roots.hpp"

struct spectra_config {
  spectra::RunConfig cfg;
};

struct spectra_potential {
  spectra::PotentialSpec spec;
  spectra::Spectrum spectrum;
};

struct spectra_result {
  spectra::CommandOutput out;
  std::vector<std::pair<std::string, std::string>> files;
};

namespace {

thread_local std::string g_last_error;

spectra_status map_code(spectra::ErrorCode c) {
  using spectra::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument: return SPECTRA_E_INVALID_ARGUMENT;
    case ErrorCode::ImaginaryResidue: return SPECTRA_E_IMAGINARY_RESIDUE;
    case ErrorCode::DegenerateParameter: return SPECTRA_E_DEGENERATE_PARAMETER;
    case ErrorCode::NonIntegrable: return SPECTRA_E_NON_INTEGRABLE;
    case ErrorCode::ZeroPolynomial: return SPECTRA_E_ZERO_POLYNOMIAL;
    case ErrorCode::StepFailure: return SPECTRA_E_STEP_FAILURE;
    case ErrorCode::OutOfGrid: return SPECTRA_E_OUT_OF_GRID;
    case ErrorCode::BranchUndefined: return SPECTRA_E_BRANCH_UNDEFINED;
    case ErrorCode::ConventionUnresolved: return SPECTRA_E_CONVENTION_UNRESOLVED;
    case ErrorCode::NoSuchRoot: return SPECTRA_E_NO_SUCH_ROOT;
    case ErrorCode::NodeDetected: return SPECTRA_E_NODE_DETECTED;
    case ErrorCode::PreconditionViolated: return SPECTRA_E_PRECONDITION_VIOLATED;
    case ErrorCode::NotConverged: return SPECTRA_E_NOT_CONVERGED;
    case ErrorCode::InsufficientDecay: return SPECTRA_E_INSUFFICIENT_DECAY;
    case ErrorCode::AmbiguousZero: return SPECTRA_E_AMBIGUOUS_ZERO;
    case ErrorCode::ConfigError: return SPECTRA_E_CONFIG;
  }
  return SPECTRA_E_INTERNAL;
}

template <class F>
spectra_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return SPECTRA_OK;
  } catch (const spectra::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPECTRA_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SPECTRA_E_INTERNAL;
  }
}

spectra_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return SPECTRA_E_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

spectra_potential* make_potential(const spectra::PotentialSpec& s) {
  auto* p = new spectra_potential{s, spectra::enumerate_bound_spectrum(s)};
  return p;
}

}  // namespace

extern "C" {

const char* spectra_last_error(void) { return g_last_error.c_str(); }

const char* spectra_status_name(spectra_status s) {
  switch (s) {
    case SPECTRA_OK: return "ok";
    case SPECTRA_E_CONFIG: return "ConfigError";
    case SPECTRA_E_INTERNAL: return "Internal";
    default:
      if (s > SPECTRA_OK && s < SPECTRA_E_CONFIG)
        return spectra::to_string(static_cast<spectra::ErrorCode>(static_cast<int>(s) - 1));
      return "Unknown";
  }
}

void spectra_free_string(char* s) { std::free(s); }

spectra_status spectra_config_parse(const char* json_text, spectra_config** out) {
  if (!json_text) return null_arg("json_text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new spectra_config{spectra::parse_config(json_text)}; });
}

void spectra_config_free(spectra_config* cfg) { delete cfg; }

double spectra_config_tol(const spectra_config* cfg) {
  if (!cfg || !cfg->cfg.tol) return -1.0;
  return *cfg->cfg.tol;
}

spectra_status spectra_config_potential(const spectra_config* cfg, spectra_potential** out) {
  if (!cfg) return null_arg("cfg");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = make_potential(cfg->cfg.spec); });
}

spectra_status spectra_potential_gendenshtein(double a, double b, spectra_potential** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = make_potential(spectra::gendenshtein_params(a, b).spec); });
}

spectra_status spectra_potential_milson(double h0_re, double h0_im, double kappa_plus, spectra_potential** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = make_potential(spectra::milson_spec({h0_re, h0_im}, kappa_plus)); });
}

void spectra_potential_free(spectra_potential* p) { delete p; }

spectra_status spectra_potential_level_count(const spectra_potential* p, int* count) {
  if (!p) return null_arg("p");
  if (!count) return null_arg("count");
  *count = static_cast<int>(p->spectrum.states.size());
  g_last_error.clear();
  return SPECTRA_OK;
}

spectra_status spectra_potential_level(const spectra_potential* p, int n, double* energy, double* lambda_re,
                                       double* lambda_im) {
  if (!p) return null_arg("p");
  if (n < 0 || n >= static_cast<int>(p->spectrum.states.size())) {
    g_last_error = "level index out of range";
    return SPECTRA_E_INVALID_ARGUMENT;
  }
  const auto& l = p->spectrum.states[n];
  if (energy) *energy = l.energy;
  if (lambda_re) *lambda_re = l.lambda.real();
  if (lambda_im) *lambda_im = l.lambda.imag();
  g_last_error.clear();
  return SPECTRA_OK;
}

spectra_status spectra_potential_eval(const spectra_potential* p, double eta, double* value) {
  if (!p) return null_arg("p");
  if (!value) return null_arg("value");
  return guarded([&] { *value = spectra::potential_at_eta(p->spec, eta); });
}

spectra_status spectra_spectrum_json(const spectra_potential* p, char** json) {
  if (!p) return null_arg("p");
  if (!json) return null_arg("json");
  *json = nullptr;
  return guarded([&] { *json = dup_string(spectra::to_json(p->spectrum).dump()); });
}

spectra_status spectra_routh_json(int m, double alpha_re, double alpha_im, char** json) {
  if (!json) return null_arg("json");
  *json = nullptr;
  return guarded([&] { *json = dup_string(spectra::to_json(spectra::routh_polynomial(m, {alpha_re, alpha_im})).dump()); });
}

spectra_status spectra_real_roots(const double* coeffs, int n_coeffs, double* roots, int capacity, int* count) {
  if (!coeffs && n_coeffs > 0) return null_arg("coeffs");
  if (!count) return null_arg("count");
  return guarded([&] {
    const auto r = spectra::real_roots(spectra::RealPolynomial(std::vector<double>(coeffs, coeffs + std::max(n_coeffs, 0))));
    *count = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) > capacity || (!roots && !r.empty()))
      throw spectra::Error(spectra::ErrorCode::InvalidArgument, "root buffer too small");
    for (std::size_t i = 0; i < r.size(); ++i) roots[i] = r[i];
  });
}

spectra_status spectra_run(const char* command, const spectra_config* cfg, double tol, int workers,
                           spectra_result** out) {
  if (!command) return null_arg("command");
  if (!cfg) return null_arg("cfg");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    const std::string cmd = command;
    const spectra::RunConfig& c = cfg->cfg;
    const bool milson = c.family == "milson";
    auto pick_tol = [&](double dflt) { return tol > 0.0 ? tol : c.tol.value_or(dflt); };
    auto* r = new spectra_result;
    try {
      if (cmd == "spectrum") r->out = spectra::cmd_spectrum(c);
      else if (cmd == "verify") r->out = spectra::cmd_verify(c, pick_tol(milson ? 1e-3 : 1e-4));
      else if (cmd == "scan-nodeless") r->out = spectra::cmd_scan_nodeless(c, std::max(1, workers));
      else if (cmd == "partner") r->out = spectra::cmd_partner(c, pick_tol(1e-3));
      else if (cmd == "identities") r->out = spectra::cmd_identities(c);
      else throw spectra::Error(spectra::ErrorCode::InvalidArgument, "unknown command '" + cmd + "'");
    } catch (...) {
      delete r;
      throw;
    }
    for (const auto& kv : r->out.files) r->files.emplace_back(kv.first, kv.second);
    *out = r;
  });
}

int spectra_result_passed(const spectra_result* r) { return r && r->out.passed ? 1 : 0; }

const char* spectra_result_summary(const spectra_result* r) { return r ? r->out.summary.c_str() : ""; }

int spectra_result_file_count(const spectra_result* r) { return r ? static_cast<int>(r->files.size()) : 0; }

const char* spectra_result_file_name(const spectra_result* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->files.size())) return nullptr;
  return r->files[i].first.c_str();
}

const char* spectra_result_file_data(const spectra_result* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->files.size())) return nullptr;
  return r->files[i].second.c_str();
}

void spectra_result_free(spectra_result* r) { delete r; }

}  // extern "C"
