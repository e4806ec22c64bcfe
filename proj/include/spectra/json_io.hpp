#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "spectra/geometry.hpp"
#include "spectra/routh.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

using json = nlohmann::json;

json to_json(const RouthPolynomial& p);
json to_json(const PotentialSpec& s);
PotentialSpec potential_spec_from_json(const json& j);
json to_json(const Spectrum& s, const std::vector<int>* nodes = nullptr);

struct GridOptions {
  std::optional<double> x_max;
  std::optional<int> n;
};

struct RunConfig {
  std::string family;  // "gendenshtein" or "milson"
  PotentialSpec spec;
  double a_g = 0.0, b_g = 0.0;  // Gendenshtein parameters when family == gendenshtein
  GridOptions grid;
  ScanRange a_range{0.5, 5.0, 16}, b_range{0.0, 4.0, 16};
  int scan_m = 2;
  RootKind partner_kind = RootKind::D;
  int partner_m = 0;
  std::optional<double> tol;
  json canonical;  // normalized inputs, used for the digest
};

// Throws Error(ConfigError) with the offending field or line in the message.
RunConfig parse_config(const std::string& text);

std::string fnv1a_hex(const std::string& s);
// Shortest round-trip formatting for CSV cells.
std::string fmt_double(double v);

}  // namespace spectra
