#include <doctest.h>

#include <cmath>

#include "spectra/errors.hpp"
#include "spectra/reports.hpp"

using namespace spectra;

TEST_CASE("partner potential matches -2 (ln psi)'' by finite differences") {
  const auto g = gendenshtein_params(2.5, 0.5);
  const VariableMap map = build_variable_map(g.spec.tp, 12.0, 4801);
  const FactorizationFunction ff = ff_from_aeh(aeh_solution(g.spec, RootKind::D, 0));
  const PartnerPotentialGrid p = partner_potential(g.spec, ff, map);
  const double h = map.step();
  auto lpsi = [&](int i) { return std::log(std::fabs(ff.psi_at_eta(map.eta()[i], g.spec.tp))); };
  for (int i = 200; i < map.size() - 200; i += 400) {
    const double fd = (lpsi(i + 1) - 2 * lpsi(i) + lpsi(i - 1)) / (h * h);
    CHECK(p.V_partner[i] - p.V_parent[i] == doctest::Approx(-2.0 * fd).epsilon(1e-5).scale(1.0));
  }
  CHECK(p.energy_tag == doctest::Approx(-12.25));
}

TEST_CASE("state insertion and erasure") {
  const auto g = gendenshtein_params(2.5, 0.5);
  const PartnerVerification ins = verify_partner(g.spec, RootKind::D, 0, 1e-3);
  CHECK(ins.passed);
  REQUIRE(ins.numeric.size() == 4);
  const double expect[] = {-12.25, -6.25, -2.25, -0.25};
  for (int i = 0; i < 4; ++i) CHECK(ins.numeric[i].energy == doctest::Approx(expect[i]).epsilon(1e-3));
  const PartnerVerification del = verify_partner(g.spec, RootKind::C, 0, 1e-3);
  CHECK(del.passed);
  CHECK(del.numeric.size() == 2);
}

TEST_CASE("noded factorization functions are refused") {
  const auto g = gendenshtein_params(2.5, 0.5);
  try {
    verify_partner(g.spec, RootKind::C, 1, 1e-3);
    FAIL("expected NodeDetected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NodeDetected);
  }
}

TEST_CASE("symmetric irregular solution is positive and even") {
  const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.0}, 2.0);
  const Spectrum sp = enumerate_bound_spectrum(s);
  const VariableMap map = build_variable_map(s.tp, 10.0, 2001);
  const SymmetricSolution sol = symmetric_irregular_solution(s, sp.states.front().energy - 1.0, map);
  CHECK(sol.min_value > 0.0);
  CHECK(sol.max_asymmetry < 1e-9);
  CHECK_THROWS_AS(symmetric_irregular_solution(s, sp.states.front().energy + 0.1, map), Error);
  CHECK_THROWS_AS(symmetric_irregular_solution(milson_spec_from_lambda0({3.0, 0.5}, 2.0), -20.0, map), Error);
}
