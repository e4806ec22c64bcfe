#include "spectra/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

[[noreturn]] void config_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ConfigError, where + ": " + what);
}

double number_at(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) config_error(path + "." + key, "missing");
  const json& v = obj.at(key);
  if (!v.is_number()) config_error(path + "." + key, "expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) config_error(path + "." + key, "must be finite");
  return d;
}

std::complex<double> complex_at(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    config_error(path, "expected [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

ScanRange range_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number_integer())
    config_error(path, "expected [lo, hi, count]");
  ScanRange r{v[0].get<double>(), v[1].get<double>(), v[2].get<int>()};
  if (!(r.hi >= r.lo) || r.n < 1) config_error(path, "needs lo <= hi and count >= 1");
  return r;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) config_error(path + "." + it.key(), "unknown field");
  }
}

}  // namespace

json to_json(const RouthPolynomial& p) {
  json c = json::array();
  for (double v : p.poly.coeffs()) c.push_back(v);
  return {{"order", p.order}, {"alpha", {p.alpha.re, p.alpha.im}}, {"coeffs", c}};
}

json to_json(const PotentialSpec& s) {
  return {{"h0", {s.h0.real(), s.h0.imag()}}, {"tp", {{"a", s.tp.a}, {"kappa_plus", s.tp.kappa_plus}}}};
}

PotentialSpec potential_spec_from_json(const json& j) {
  if (!j.contains("h0")) config_error("h0", "missing");
  if (!j.contains("tp") || !j["tp"].is_object()) config_error("tp", "missing");
  TangentPolySpec tp;
  tp.a = number_at(j["tp"], "a", "tp");
  tp.kappa_plus = number_at(j["tp"], "kappa_plus", "tp");
  try {
    return PotentialSpec::from_h0(complex_at(j["h0"], "h0"), tp);
  } catch (const Error& e) {
    config_error("spec", e.what());
  }
}

json to_json(const Spectrum& s, const std::vector<int>* nodes) {
  json states = json::array();
  for (std::size_t i = 0; i < s.states.size(); ++i) {
    const Level& l = s.states[i];
    states.push_back({{"n", l.n},
                      {"energy", l.energy},
                      {"lambda", {l.lambda.real(), l.lambda.imag()}},
                      {"nodes", nodes ? (*nodes)[i] : l.n}});
  }
  return {{"states", states},
          {"n_max_constructive", s.n_max_constructive},
          {"n_max_formula", s.n_max_formula},
          {"count_constructive", s.count_constructive},
          {"count_formula", s.count_formula},
          {"formula_discrepancy", s.formula_discrepancy},
          {"diagnostics", s.diagnostics}};
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i) line += text[i] == '\n';
    std::ostringstream os;
    os << "line " << line;
    config_error(os.str(), "malformed JSON");
  }
  if (!j.is_object()) config_error("<root>", "expected an object");
  check_keys(j, {"potential", "grid", "scan", "partner", "tol"}, "<root>");
  if (!j.contains("potential") || !j["potential"].is_object()) config_error("potential", "missing");
  const json& pot = j["potential"];
  if (pot.size() != 1) config_error("potential", "needs exactly one of gendenshtein or milson");

  RunConfig cfg;
  json canon;
  if (pot.contains("gendenshtein")) {
    const json& g = pot["gendenshtein"];
    if (!g.is_object()) config_error("potential.gendenshtein", "expected an object");
    check_keys(g, {"a", "b", "O00"}, "potential.gendenshtein");
    cfg.family = "gendenshtein";
    cfg.a_g = number_at(g, "a", "potential.gendenshtein");
    cfg.b_g = number_at(g, "b", "potential.gendenshtein");
    if (!(cfg.a_g > 0.0)) config_error("potential.gendenshtein.a", "must be positive");
    const GendenshteinParams gp = gendenshtein_params(cfg.a_g, cfg.b_g);
    cfg.spec = gp.spec;
    canon["potential"] = {{"gendenshtein", {{"a", cfg.a_g}, {"b", cfg.b_g}}}};
  } else if (pot.contains("milson")) {
    const json& m = pot["milson"];
    if (!m.is_object()) config_error("potential.milson", "expected an object");
    check_keys(m, {"h0_re", "h0_im", "lambda0", "kappa_plus", "O00"}, "potential.milson");
    cfg.family = "milson";
    const double kappa = number_at(m, "kappa_plus", "potential.milson");
    if (!(kappa > 0.0)) config_error("potential.milson.kappa_plus", "must be positive");
    std::complex<double> h0;
    const bool has_h0 = m.contains("h0_re") || m.contains("h0_im");
    if (has_h0 == m.contains("lambda0")) config_error("potential.milson", "give either h0_re/h0_im or lambda0");
    if (has_h0) {
      h0 = {number_at(m, "h0_re", "potential.milson"), m.contains("h0_im") ? number_at(m, "h0_im", "potential.milson") : 0.0};
    } else {
      const std::complex<double> l0 = complex_at(m["lambda0"], "potential.milson.lambda0");
      if (!(l0.real() > 0.0)) config_error("potential.milson.lambda0", "real part must be positive");
      h0 = l0 * l0 - 1.0;
    }
    try {
      cfg.spec = milson_spec(h0, kappa);
    } catch (const Error& e) {
      config_error("potential.milson", e.what());
    }
    canon["potential"] = {{"milson", {{"h0_re", h0.real()}, {"h0_im", h0.imag()}, {"kappa_plus", kappa}}}};
  } else {
    config_error("potential", "needs gendenshtein or milson");
  }
  for (const char* fam : {"gendenshtein", "milson"}) {
    if (pot.contains(fam) && pot[fam].contains("O00")) {
      const std::string path = std::string("potential.") + fam + ".O00";
      const double o = number_at(pot[fam], "O00", std::string("potential.") + fam);
      try {
        PotentialSpec::make(cfg.spec.h0, o, cfg.spec.tp);
      } catch (const Error& e) {
        config_error(path, e.what());
      }
    }
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object()) config_error("grid", "expected an object");
    check_keys(g, {"x_max", "n"}, "grid");
    if (g.contains("x_max")) {
      cfg.grid.x_max = number_at(g, "x_max", "grid");
      if (!(*cfg.grid.x_max > 0.0)) config_error("grid.x_max", "must be positive");
    }
    if (g.contains("n")) {
      if (!g["n"].is_number_integer() || g["n"].get<long>() < 256 || g["n"].get<long>() > 10000000)
        config_error("grid.n", "must be an integer between 256 and 1e7");
      cfg.grid.n = g["n"].get<int>();
    }
    canon["grid"] = g;
  }
  if (j.contains("scan")) {
    const json& s = j["scan"];
    if (!s.is_object()) config_error("scan", "expected an object");
    check_keys(s, {"a_range", "b_range", "m"}, "scan");
    if (s.contains("a_range")) cfg.a_range = range_at(s["a_range"], "scan.a_range");
    if (s.contains("b_range")) cfg.b_range = range_at(s["b_range"], "scan.b_range");
    if (!(cfg.a_range.lo > 0.0)) config_error("scan.a_range", "a must be positive");
    if (s.contains("m")) {
      if (!s["m"].is_number_integer()) config_error("scan.m", "expected an integer");
      cfg.scan_m = s["m"].get<int>();
      if (cfg.scan_m < 2 || cfg.scan_m % 2) config_error("scan.m", "must be even and at least 2");
    }
    canon["scan"] = s;
  }
  if (j.contains("partner")) {
    const json& p = j["partner"];
    if (!p.is_object()) config_error("partner", "expected an object");
    check_keys(p, {"kind", "m"}, "partner");
    if (p.contains("kind")) {
      if (!p["kind"].is_string()) config_error("partner.kind", "expected \"c\" or \"d\"");
      const std::string k = p["kind"].get<std::string>();
      if (k == "c") cfg.partner_kind = RootKind::C;
      else if (k == "d") cfg.partner_kind = RootKind::D;
      else config_error("partner.kind", "expected \"c\" or \"d\"");
    }
    if (p.contains("m")) {
      if (!p["m"].is_number_integer() || p["m"].get<int>() < 0) config_error("partner.m", "expected a non-negative integer");
      cfg.partner_m = p["m"].get<int>();
    }
    canon["partner"] = p;
  }
  if (j.contains("tol")) {
    cfg.tol = number_at(j, "tol", "<root>");
    if (!(*cfg.tol > 0.0)) config_error("tol", "must be positive");
    canon["tol"] = *cfg.tol;
  }
  cfg.canonical = canon;
  return cfg;
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace spectra
