// Worked examples for each public operation.
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spectra/errors.hpp"
#include "spectra/reports.hpp"
#include "spectra/roots.hpp"

using namespace spectra;
using cd = std::complex<double>;

TEST_CASE("low-order Jacobi and Routh polynomials") {
  const cd b(0.3, -1.2), a(-2.1, 0.4), y(0.7, 1.9);
  CHECK(std::abs(jacobi_complex_eval(0, b, a, y) - 1.0) < 1e-15);
  CHECK(std::abs(jacobi_complex_eval(1, b, a, y) - ((a + b) * y + b - a) / 2.0) < 1e-14);
  CHECK(routh_polynomial(0, {2.0, 1.0}).exact == ExactPolynomial({Rational(1)}));
  const ComplexIndex al{1.25, -0.5};
  CHECK(routh_polynomial(1, al).exact == ExactPolynomial({Rational(1, 2), Rational(5, 4)}));
  CHECK(routh_rodrigues(1, al).exact == ExactPolynomial({Rational(-1), Rational(9, 2)}));
  CHECK(routh_rodrigues(0, al).exact == ExactPolynomial({Rational(1)}));
  CHECK(routh_hypergeometric_eval(0, al, 3.3) == doctest::Approx(1.0));
  CHECK(routh_hypergeometric_eval(1, {-3.0, 0.0}, 2.0) == doctest::Approx(-6.0));
  CHECK(std::fabs(routh_hypergeometric_eval(2, {-3.0, 0.0}, 1.0 / std::sqrt(5.0))) < 1e-14);
}

TEST_CASE("weights and inner products") {
  CHECK(weight_eval({-1.7, 0.0}, 0.0) == doctest::Approx(1.0));
  CHECK(weight_eval({0.0, 1.0}, 1.0) == doctest::Approx(std::exp(M_PI / 2)));
  CHECK(weight_eval({-2.0, 0.0}, 1.0) == doctest::Approx(0.25));
  CHECK(inner_product(0, 0, {-2.0, 0.0}) == doctest::Approx(M_PI / 2).epsilon(1e-10));
  // Canonical index alpha = -4 is orthogonal under exponent -5.
  CHECK(orthogonal_family_index({-5.0, 0.0}).re == doctest::Approx(-4.0));
  CHECK(std::fabs(inner_product(0, 2, {-5.0, 0.0})) < 1e-9);
  CHECK(std::fabs(inner_product(0, 1, {-3.0, 0.0})) < 1e-12);
}

TEST_CASE("ODE residual examples") {
  CHECK(ode_residual(routh_polynomial(0, {0.4, 2.0})).is_zero());
  CHECK(ode_residual(routh_polynomial(1, {-3.0, 0.0})).is_zero());
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 10; ++i) CHECK(ode_residual(routh_polynomial(2, {u(rng), u(rng)})).is_zero());
}

TEST_CASE("root and discriminant examples") {
  const auto r = real_roots(RealPolynomial({-1.0, 0.0, 1.0}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -1.0);
  CHECK(r[1] == 1.0);
  CHECK(real_roots(RealPolynomial({1.0, 0.0, 1.0})).empty());
  CHECK(discriminant_order2({1.0, 1.0}).computed == doctest::Approx(-3.75));
  CHECK(routh_real_roots(routh_polynomial(2, {1.0, 1.0})).empty());
}

TEST_CASE("tangent polynomial and Schwarzian examples") {
  TangentPolySpec t;
  CHECK(tangent_eval(t, 0.0) == doctest::Approx(1.0));
  t.kappa_plus = 2.0;
  CHECK(tangent_eval(t, 1.0) == doctest::Approx(3.0));
  TangentPolySpec one;
  CHECK(schwarzian_eval(one, 0.0) == doctest::Approx(1.0));
  TangentPolySpec w;
  w.a = 1.7;
  w.kappa_plus = 2.5;
  CHECK(w.a * schwarzian_eval(w, 1e6) == doctest::Approx(-0.5).epsilon(1e-6));
  CHECK(w.a * schwarzian_eval(w, -1e6) == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("variable map examples") {
  const VariableMap m = build_variable_map(TangentPolySpec{}, 6.0, 601);
  for (int i = 0; i < m.size(); ++i) {
    CHECK(std::fabs(m.eta()[i] - std::sinh(m.x()[i])) <= 1e-10 * std::max(1.0, std::fabs(m.eta()[i])));
    CHECK(std::fabs(m.eta()[i] + m.eta()[m.size() - 1 - i]) <= 1e-10 * std::max(1.0, std::fabs(m.eta()[i])));
  }
  CHECK(m.eta()[300] == 0.0);
}

TEST_CASE("potential examples") {
  const PotentialSpec s = milson_spec({4.0, 0.0}, 2.0);
  const VariableMap m = build_variable_map(s.tp, 15.0, 1501);
  for (int i = 0; i < m.size(); i += 37) CHECK(potential_eval(s, m, m.x()[i]) == doctest::Approx(potential_eval(s, m, -m.x()[i])).epsilon(1e-10));
  CHECK(std::fabs(potential_eval(s, m, 14.9)) < 1e-3);
  CHECK(std::fabs(potential_eval(s, m, -14.9)) < 1e-3);
}

TEST_CASE("Stevenson variable") {
  CHECK(std::abs(stevenson_xi(0.0) - 2.0) < 1e-15);
  CHECK(std::abs(stevenson_xi(1e12)) < 1e-11);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 20; ++i) CHECK(std::abs(stevenson_xi(u(rng)) - 1.0) == doctest::Approx(1.0));
}

TEST_CASE("energy branch examples") {
  const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.5}, 2.0);
  const LambdaBranch l0 = lambda_of_energy(s, 0.0);
  CHECK(l0.value.real() == doctest::Approx(3.0));
  CHECK(l0.value.imag() == doctest::Approx(0.5));
  const auto g = gendenshtein_params(1.7, 0.9);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-10.0, 0.0);
  for (int i = 0; i < 20; ++i) {
    const double e = u(rng);
    CHECK(lambda_of_energy(g.spec, e).value.real() == doctest::Approx(2.2));
    const LambdaBranch l = lambda_of_energy(s, e);
    CHECK(2 * l.value.real() * l.value.imag() == doctest::Approx(s.h0.imag()));
  }
}

TEST_CASE("quartic examples at kappa = 1") {
  const PotentialSpec s = milson_spec({4.0, 0.0}, 1.0);
  const auto roots = quartic_lambda_roots(s, 1);
  // h_I = 0 leaves lambda^2 (lambda^2 - 5); the double zero at the origin is neither type.
  int typed = 0;
  for (const auto& r : roots) {
    if (r.kind == RootKind::Other) continue;
    ++typed;
    CHECK(std::fabs(std::fabs(r.lambda_re) - std::sqrt(5.0)) < 1e-12);
  }
  CHECK(typed == 2);
  const PotentialSpec m = milson_spec_from_lambda0({3.0, 0.5}, 2.0);
  CHECK(m.h0.real() == doctest::Approx(7.75));
  CHECK(m.h0.imag() == doctest::Approx(3.0));
  CHECK(!quartic_lambda_roots(m, 0).empty());
}

TEST_CASE("spectrum examples") {
  const Spectrum s = enumerate_bound_spectrum(gendenshtein_params(2.5, 0.5).spec);
  REQUIRE(s.states.size() == 3);
  CHECK(s.states[0].energy == doctest::Approx(-6.25));
  CHECK(s.states[1].energy == doctest::Approx(-2.25));
  CHECK(s.states[2].energy == doctest::Approx(-0.25));
}

TEST_CASE("Gendenshtein ground state in closed form") {
  const double a = 2.5, b = 0.5;
  const auto g = gendenshtein_params(a, b);
  const VariableMap map = build_variable_map(g.spec.tp, 20.0, 2001);
  const BoundState bs = assemble_eigenfunction(g.spec, 0, map);
  // psi_0 = C cosh^{-a} x exp(-b atan sinh x) in the pinned convention.
  auto ref = [&](double x) { return std::pow(std::cosh(x), -a) * std::exp(-b * std::atan(std::sinh(x))); };
  const double c = bs.psi[1000] / ref(0.0);
  for (int i = 400; i <= 1600; i += 100) CHECK(bs.psi[i] == doctest::Approx(c * ref(map.x()[i])).epsilon(1e-9));
}

TEST_CASE("AEH examples") {
  const auto g = gendenshtein_params(2.5, 0.5);
  CHECK(aeh_solution(g.spec, RootKind::D, 0).nodeless);
  CHECK(aeh_solution(milson_spec_from_lambda0({3.0, 0.5}, 2.0), RootKind::D, 0).nodeless);
  CHECK(aeh_solution(gendenshtein_params(2.5, 0.1).spec, RootKind::D, 2).nodeless);
}

TEST_CASE("residual sensitivity") {
  const auto g = gendenshtein_params(2.5, 0.5);
  const ClosedFormSolution sol = make_solution(g.lambda0, -6.25, 0, EigenConvention{});
  const auto& xs = default_residual_samples();
  CHECK(rcsle_residual(g.spec, sol, xs) < 1e-10);
  const Phi3 bumped = [&](double e, double& p, double& dp, double& ddp) {
    double q, dq, ddq;
    sol.phi3(e, q, dq, ddq);
    const double f = 1.0 + 0.01 * e;
    p = q * f;
    dp = dq * f + 0.01 * q;
    ddp = ddq * f + 0.02 * dq;
  };
  CHECK(rcsle_residual(g.spec, -6.25, bumped, xs) > 1e-4);
  const Phi3 zero = [](double, double& p, double& dp, double& ddp) { p = dp = ddp = 0.0; };
  CHECK(rcsle_residual(g.spec, -6.25, zero, xs) == 0.0);
}

TEST_CASE("Gendenshtein parameter examples") {
  const auto g = gendenshtein_params(2.5, 0.0);
  CHECK(g.lambda0.real() == doctest::Approx(3.0));
  CHECK(g.spec.h0.real() == doctest::Approx(8.0));
  CHECK(g.spec.h0.imag() == 0.0);
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> ua(0.1, 6.0), ub(-3.0, 3.0);
  for (int i = 0; i < 10; ++i) {
    const double a = ua(rng), b = ub(rng);
    const auto p = gendenshtein_params(a, b);
    CHECK(p.spec.h0.imag() == doctest::Approx((2 * a + 1) * b));
    CHECK(lambda0_re_closed_form(p.spec.h0) == doctest::Approx(a + 0.5).epsilon(1e-12));
  }
}

TEST_CASE("sigma and rho examples") {
  const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.0}, 2.0);
  CHECK(milson_sigma_rho(s, 0.0).sigma == doctest::Approx(-2.5));
  const PotentialSpec t = milson_spec_from_lambda0({3.0, 0.5}, 2.0);
  for (double e : {-0.3, -1.7, -4.0}) {
    const SigmaRho r = milson_sigma_rho(t, e);
    CHECK(r.two_lr_li == doctest::Approx(t.h0.imag()));
    CHECK(r.real_lhs == doctest::Approx(r.real_rhs));
  }
}

TEST_CASE("Stevenson identity examples") {
  CHECK(stevenson_identity_check(cd(3.0, 0.5), 0, {-2.0, 0.0, 1.0}).deviation < 1e-15);
  CHECK(stevenson_identity_check(cd(3.0, 0.5), 1, {-2.0, 0.0, 1.0}).deviation < 1e-10);
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int i = 0; i < 10; ++i)
    CHECK(stevenson_identity_check(cd(2.6 + u(rng), u(rng) - 2.0), 2, default_residual_samples()).deviation < 1e-10);
}

TEST_CASE("ground-state erasure with the assembled eigenfunction") {
  const auto g = gendenshtein_params(2.5, 0.5);
  const VariableMap map = build_variable_map(g.spec.tp, 30.0, 9831);
  const FactorizationFunction ff = ff_from_bound_state(assemble_eigenfunction(g.spec, 0, map));
  const PartnerPotentialGrid p = partner_potential(g.spec, ff, map);
  Grid1D V;
  V.x_min = p.x.front();
  V.x_max = p.x.back();
  V.n = static_cast<int>(p.x.size());
  V.values = p.V_partner;
  const auto lv = numerov_spectrum(V, 0, 1e-10);
  REQUIRE(lv.size() == 2);
  CHECK(lv[0].energy == doctest::Approx(-2.25).epsilon(1e-3));
  CHECK(lv[1].energy == doctest::Approx(-0.25).epsilon(1e-3));
}

TEST_CASE("planted node is detected") {
  const auto g = gendenshtein_params(2.5, 0.5);
  const VariableMap map = build_variable_map(g.spec.tp, 10.0, 1001);
  const FactorizationFunction ff = ff_from_aeh(aeh_solution(g.spec, RootKind::C, 2));
  CHECK_THROWS_AS(partner_potential(g.spec, ff, map), Error);
}
