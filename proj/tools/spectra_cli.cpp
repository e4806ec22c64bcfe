#include <spectra.h>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kConfigError = 2, kNumericFailure = 3;

// Write to a sibling temp file, then rename over the target.
bool write_atomic(const fs::path& target, const std::string& data) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) return false;
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!os.flush()) return false;
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

int exit_code_for(spectra_status s) {
  if (s == SPECTRA_E_CONFIG) return kConfigError;
  return kNumericFailure;
}

int run(const std::string& command, const std::string& config_path, const std::string& out_dir, double tol,
        int workers) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config '" << config_path << "'\n";
    return kConfigError;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  spectra_config* cfg = nullptr;
  spectra_status st = spectra_config_parse(buf.str().c_str(), &cfg);
  if (st != SPECTRA_OK) {
    std::cerr << "error: " << config_path << ": " << spectra_last_error() << "\n";
    return exit_code_for(st);
  }

  spectra_result* res = nullptr;
  st = spectra_run(command.c_str(), cfg, tol, workers, &res);
  spectra_config_free(cfg);
  if (st != SPECTRA_OK) {
    std::cerr << "error: " << spectra_last_error() << "\n";
    return exit_code_for(st);
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create '" << out_dir << "': " << ec.message() << "\n";
    spectra_result_free(res);
    return kNumericFailure;
  }
  int code = spectra_result_passed(res) ? kOk : kVerifyFailed;
  for (int i = 0; i < spectra_result_file_count(res); ++i) {
    const fs::path p = fs::path(out_dir) / spectra_result_file_name(res, i);
    if (!write_atomic(p, spectra_result_file_data(res, i))) {
      std::cerr << "error: cannot write " << p << "\n";
      code = kNumericFailure;
    }
  }
  std::cout << spectra_result_summary(res) << "\n";
  spectra_result_free(res);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Closed-form spectra of rational-reference potentials, checked against a Numerov solver.\n"
      "All quantities are dimensionless: the Schroedinger equation is -psi'' + V psi = E psi (hbar = 2m = 1).\n"
      "Exit codes: 0 success, 1 verification failed, 2 config error, 3 numeric failure."};
  app.require_subcommand(1);

  std::string config, out_dir = ".";
  double tol = -1.0;
  int workers = 1;

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"spectrum", "bound states as spectrum.json, eigenfunctions.csv and potential.csv"},
      {"verify", "analytic levels against Numerov; exit 1 if any level misses tol"},
      {"scan-nodeless", "nodelessness map over an (a, b) grid"},
      {"partner", "Darboux partner potential and its spectrum check"},
      {"identities", "polynomial and closed-form identity report"},
  };
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config, "JSON config file")->required();
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
    sub->add_option("--tol", tol, "relative tolerance (verify, partner)");
    sub->add_option("--workers", workers, "worker threads for scans")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  return run(app.get_subcommands().front()->get_name(), config, out_dir, tol, workers);
}
