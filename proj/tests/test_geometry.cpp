#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spectra/errors.hpp"
#include "spectra/geometry.hpp"
#include "spectra/spectral.hpp"

using namespace spectra;

TEST_CASE("tangent polynomial parameterizations") {
  const TangentPolySpec t = TangentPolySpec::from_general({-0.5, 0.0}, 6.0);
  CHECK(t.a == doctest::Approx(1.25));
  CHECK(t.kappa_plus == doctest::Approx(1.4));
  CHECK(t.c().real() == doctest::Approx(-0.5));
  CHECK(t.d() == doctest::Approx(6.0));
  // c = 1, d = 2 gives kappa_plus = 0, a real double zero at the origin.
  CHECK_THROWS_AS(TangentPolySpec::from_general({1.0, 0.0}, 2.0), Error);
  // T = [c* (eta - i)^2 + c (eta + i)^2 + d (eta^2 + 1)] / 4
  auto general = [](std::complex<double> c, double d, double eta) {
    const std::complex<double> i(0.0, 1.0);
    return (0.25 * (std::conj(c) * (eta - i) * (eta - i) + c * (eta + i) * (eta + i) + d * (eta * eta + 1.0))).real();
  };
  for (double e : {-2.0, 0.3, 4.0}) CHECK(tangent_eval(t, e) == doctest::Approx(general({-0.5, 0.0}, 6.0, e)));
  const TangentPolySpec u = TangentPolySpec::from_general({-0.5, 0.4}, 6.0);
  for (double e : {-2.0, 0.3, 4.0}) CHECK(tangent_eval(u, e) == doctest::Approx(general({-0.5, 0.4}, 6.0, e)));
}

TEST_CASE("potential spec validation") {
  const TangentPolySpec tp;
  CHECK_NOTHROW(PotentialSpec::make({2.0, 1.0}, 5.0, tp));
  CHECK_THROWS_AS(PotentialSpec::make({2.0, 1.0}, 9.0, tp), Error);
  CHECK_THROWS_AS(PotentialSpec::from_h0({-3.0, 0.0}, tp), Error);
  const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.5}, 2.0);
  CHECK(s.lambda0().real() == doctest::Approx(3.0));
  CHECK(s.lambda0().imag() == doctest::Approx(0.5));
}

TEST_CASE("Bose invariant is real, finite and matches direct substitution at the origin") {
  PotentialSpec s;
  s.h0 = {-1.0, 0.0};
  s.O00 = 0.7;
  CHECK(bose_invariant_eval(s, 0.0, 0.0) == doctest::Approx(0.25 * (2 * s.h0.real() + s.O00)));
  const PotentialSpec m = milson_spec({1.5, -0.8}, 2.5);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 20; ++i) CHECK(std::isfinite(bose_invariant_eval(m, u(rng), u(rng))));
}

TEST_CASE("variable map agrees with the closed-form integral") {
  const struct { double a, k; } cases[] = {{1.0, 1.0}, {1.0, 2.0}, {0.7, 3.5}};
  for (const auto& c : cases) {
    TangentPolySpec tp;
    tp.a = c.a;
    tp.kappa_plus = c.k;
    const VariableMap map = build_variable_map(tp, 20.0, 801);
    for (int i = 0; i < map.size(); i += 50)
      CHECK(map.x()[i] == doctest::Approx(oracle::map_x_of_eta(c.a, c.k, map.eta()[i])).epsilon(1e-10));
    for (double eta : {-30.0, -1.0, 0.0, 0.4, 7.0}) {
      const double x = map.x_of_eta(eta);
      CHECK(x == doctest::Approx(oracle::map_x_of_eta(c.a, c.k, eta)).epsilon(1e-11).scale(1.0));
      CHECK(map.eta_of_x(x) == doctest::Approx(eta).epsilon(1e-10).scale(1.0));
    }
    CHECK_THROWS_AS(map.eta_of_x(25.0), Error);
  }
}

TEST_CASE("Schwarzian closed form against finite differences") {
  for (double k : {1.0, 1.5, 2.0, 4.0}) {
    TangentPolySpec tp;
    tp.a = 1.3;
    tp.kappa_plus = k;
    for (double eta : {-3.0, -0.5, 0.0, 0.8, 2.2}) {
      const double fd = oracle::schwarzian_fd(1.3, k, eta);
      CHECK(schwarzian_eval(tp, eta) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
      CHECK(schwarzian_generic(tp, eta) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("Gendenshtein potential is Scarf II") {
  const double a = 2.5, b = 0.5;
  const auto g = gendenshtein_params(a, b);
  for (double x : {-4.0, -1.0, 0.0, 0.5, 3.0}) {
    const double eta = std::sinh(x);
    CHECK(potential_at_eta(g.spec, eta) == doctest::Approx(oracle::scarf2(a, b, x)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("potential decays and the decay radius is sensible") {
  const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.5}, 2.0);
  const double xm = decay_x_max(s, 1e-3);
  CHECK(xm > 1.0);
  CHECK(xm < 40.0);
  TangentPolySpec tp = s.tp;
  const VariableMap map = build_variable_map(tp, xm + 1.0, 401);
  CHECK(std::fabs(potential_eval(s, map, xm)) < 1e-3 * 1.0001);
}
