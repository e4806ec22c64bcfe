#include <doctest.h>

#include "spectra/errors.hpp"
#include "spectra/reports.hpp"

using namespace spectra;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig g = parse_config(R"({"potential": {"gendenshtein": {"a": 2.5, "b": 0.5}}, "tol": 1e-5})");
  CHECK(g.family == "gendenshtein");
  CHECK(g.spec.lambda0().real() == doctest::Approx(3.0));
  CHECK(*g.tol == 1e-5);
  const RunConfig m = parse_config(R"({"potential": {"milson": {"h0_re": 2.0, "h0_im": 1.0, "kappa_plus": 2}},
                                        "grid": {"x_max": 30, "n": 4001}})");
  CHECK(m.family == "milson");
  CHECK(*m.grid.n == 4001);
}

TEST_CASE("config errors") {
  CHECK(code_of("{") == ErrorCode::ConfigError);
  CHECK(code_of(R"({"potential": {}})") == ErrorCode::ConfigError);
  CHECK(code_of(R"({"potential": {"gendenshtein": {"a": 1, "b": 0}, "milson": {"h0_re": 1, "h0_im": 0, "kappa_plus": 2}}})") ==
        ErrorCode::ConfigError);
  CHECK(code_of(R"({"potential": {"gendenshtein": {"a": 1, "b": 0}}, "bogus": 1})") == ErrorCode::ConfigError);
  CHECK(code_of(R"({"potential": {"milson": {"h0_re": 2, "h0_im": 1, "kappa_plus": 2, "O00": 9}}})") ==
        ErrorCode::ConfigError);
  CHECK(code_of(R"({"potential": {"gendenshtein": {"a": 1, "b": 0}}, "scan": {"a_range": [1, 2]}})") ==
        ErrorCode::ConfigError);
  CHECK(code_of(R"({"potential": {"gendenshtein": {"a": 1, "b": 0}}, "partner": {"kind": "x"}})") ==
        ErrorCode::ConfigError);
}

TEST_CASE("command outputs are deterministic") {
  const RunConfig c = parse_config(R"({"potential": {"gendenshtein": {"a": 2.5, "b": 0.5}}})");
  const CommandOutput a = cmd_spectrum(c), b = cmd_spectrum(c);
  CHECK(a.files == b.files);
  REQUIRE(a.files.count("eigenfunctions.csv"));
  CHECK(a.files.at("eigenfunctions.csv").rfind("x,psi_0,psi_1,psi_2\n", 0) == 0);
  const json j = json::parse(a.files.at("spectrum.json"));
  CHECK(j["states"].size() == 3);
  CHECK(j["states"][0]["nodes"] == 0);
}

TEST_CASE("empty spectrum is not an error") {
  const RunConfig c = parse_config(R"({"potential": {"milson": {"lambda0": [0.4, 0.3], "kappa_plus": 2}}})");
  const CommandOutput o = cmd_spectrum(c);
  CHECK(o.passed);
  CHECK(json::parse(o.files.at("spectrum.json"))["states"].empty());
}

TEST_CASE("scan output does not depend on the worker count") {
  const RunConfig c = parse_config(R"({"potential": {"gendenshtein": {"a": 1, "b": 0}},
                                        "scan": {"a_range": [0.5, 5, 5], "b_range": [0, 4, 5], "m": 2}})");
  CHECK(cmd_scan_nodeless(c, 1).files == cmd_scan_nodeless(c, 3).files);
}
