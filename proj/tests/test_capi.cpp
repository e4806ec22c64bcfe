// Exercises the shared library through spectra.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <spectra.h>

#include <cmath>
#include <string>

TEST_CASE("potential handles") {
  spectra_potential* p = nullptr;
  REQUIRE(spectra_potential_gendenshtein(3.3, 0.7, &p) == SPECTRA_OK);
  int n = 0;
  REQUIRE(spectra_potential_level_count(p, &n) == SPECTRA_OK);
  CHECK(n == 4);
  for (int i = 0; i < n; ++i) {
    double e = 0, lr = 0, li = 0;
    REQUIRE(spectra_potential_level(p, i, &e, &lr, &li) == SPECTRA_OK);
    CHECK(e == doctest::Approx(-(3.3 - i) * (3.3 - i)));
  }
  CHECK(spectra_potential_level(p, 9, nullptr, nullptr, nullptr) == SPECTRA_E_INVALID_ARGUMENT);
  double v = 0;
  REQUIRE(spectra_potential_eval(p, 0.0, &v) == SPECTRA_OK);
  CHECK(v == doctest::Approx(0.49 - 3.3 * 4.3));
  char* js = nullptr;
  REQUIRE(spectra_spectrum_json(p, &js) == SPECTRA_OK);
  CHECK(nlohmann::json::parse(js)["states"].size() == 4);
  spectra_free_string(js);
  spectra_potential_free(p);
}

TEST_CASE("errors carry codes and messages") {
  spectra_potential* p = nullptr;
  CHECK(spectra_potential_milson(-3.0, 0.0, 2.0, &p) == SPECTRA_E_BRANCH_UNDEFINED);
  CHECK(p == nullptr);
  CHECK(std::string(spectra_last_error()).find("BranchUndefined") != std::string::npos);
  CHECK(std::string(spectra_status_name(SPECTRA_E_NODE_DETECTED)) == "NodeDetected");
  CHECK(spectra_potential_gendenshtein(1.0, 0.0, nullptr) == SPECTRA_E_INVALID_ARGUMENT);
  spectra_config* c = nullptr;
  CHECK(spectra_config_parse("{\"potential\": 3}", &c) == SPECTRA_E_CONFIG);
  CHECK(c == nullptr);
}

TEST_CASE("routh polynomial and roots") {
  char* js = nullptr;
  REQUIRE(spectra_routh_json(2, -3.0, 0.0, &js) == SPECTRA_OK);
  const auto j = nlohmann::json::parse(js);
  spectra_free_string(js);
  // alpha = -3 gives (5 eta^2 - 1) / 2.
  const auto& c = j["coeffs"];
  REQUIRE(c.size() == 3);
  CHECK(c[2].get<double>() / c[0].get<double>() == doctest::Approx(-5.0));
  const double coeffs[] = {-1.0, 0.0, 5.0};
  double roots[4];
  int count = 0;
  REQUIRE(spectra_real_roots(coeffs, 3, roots, 4, &count) == SPECTRA_OK);
  REQUIRE(count == 2);
  CHECK(roots[1] == doctest::Approx(std::sqrt(0.2)));
  CHECK(spectra_real_roots(coeffs, 3, roots, 1, &count) == SPECTRA_E_INVALID_ARGUMENT);
}

TEST_CASE("command runner") {
  spectra_config* c = nullptr;
  REQUIRE(spectra_config_parse("{\"potential\": {\"gendenshtein\": {\"a\": 2.5, \"b\": 0.5}}}", &c) == SPECTRA_OK);
  CHECK(spectra_config_tol(c) < 0.0);
  spectra_result* r = nullptr;
  REQUIRE(spectra_run("verify", c, 0.0, 1, &r) == SPECTRA_OK);
  CHECK(spectra_result_passed(r) == 1);
  REQUIRE(spectra_result_file_count(r) == 1);
  CHECK(std::string(spectra_result_file_name(r, 0)) == "verify.json");
  CHECK(spectra_result_file_name(r, 5) == nullptr);
  spectra_result_free(r);
  CHECK(spectra_run("bogus", c, 0.0, 1, &r) == SPECTRA_E_INVALID_ARGUMENT);
  spectra_config_free(c);
}
