#include <cmath>
#include <random>

#include "spectra/errors.hpp"
#include "spectra/reports.hpp"
#include "spectra/roots.hpp"

namespace spectra {

namespace {

json routh_suite() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ur(-4.0, 4.0);
  int checked = 0, real_ok = 0, ode_ok = 0, rod_ok = 0;
  for (int m = 0; m <= 6; ++m) {
    for (int k = 0; k < 50; ++k) {
      const ComplexIndex a{ur(rng), ur(rng)};
      ++checked;
      RouthPolynomial p;
      try {
        p = routh_polynomial(m, a);
        ++real_ok;
      } catch (const Error&) {
        continue;
      }
      const RouthPolynomial r = routh_rodrigues(m, a);
      ode_ok += ode_residual(p).is_zero() && ode_residual(r).is_zero();
      const RouthPolynomial c = routh_polynomial(m, rodrigues_index_map(a));
      rod_ok += r.exact == c.exact * rodrigues_scale(m);
    }
  }
  return {{"cases", checked},
          {"exactly_real", real_ok},
          {"ode_residual_zero", ode_ok},
          {"rodrigues_proportional", rod_ok},
          {"rodrigues_index_map", "alpha -> conj(alpha) + 1"},
          {"rodrigues_scale", "2^m m!"}};
}

json stevenson_suite() {
  std::mt19937_64 rng(7);
  double worst = 0.0, worst_pos = INFINITY;
  for (int n = 0; n <= 6; ++n) {
    std::uniform_real_distribution<double> lr(n + 0.6, n + 5.0), li(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
      const std::complex<double> lam(lr(rng), li(rng));
      const auto c = stevenson_identity_check(lam, n, {-2.0, -0.7, 0.0, 0.4, 1.0, 3.0});
      worst = std::max(worst, c.deviation);
      if (n > 0) worst_pos = std::min(worst_pos, c.deviation_positive_power);
    }
  }
  return {{"form", "b xi^{-n} F[-n, conj(lambda)-n; 2(Re lambda - n); xi] = R_n^{(1-conj(lambda))}"},
          {"max_deviation", worst},
          {"positive_power_min_deviation", worst_pos},
          {"positive_power_form_holds", worst_pos < 1e-8}};
}

json discriminant_table() {
  json rows = json::array();
  for (ComplexIndex a : {ComplexIndex{-3, 0}, ComplexIndex{1, 1}, ComplexIndex{-1.5, 0.7}, ComplexIndex{2.5, -1.2},
                         ComplexIndex{-0.25, 2.0}}) {
    const auto d = discriminant_order2(a);
    const auto p = order2_alt_coeffs(a);
    const RouthPolynomial shifted = routh_polynomial(2, {a.re + 1.0, a.im});
    rows.push_back({{"alpha", {a.re, a.im}},
                    {"computed", d.computed},
                    {"closed_form", d.closed_form},
                    {"alt_form", d.alt_form},
                    {"alt_coeffs", {p.c0, p.c1, p.c2}},
                    {"minus_canonical_at_alpha_plus_1",
                     {-shifted.poly.coeffs().at(0), -shifted.exact.coeff(1).get_d(), -shifted.exact.coeff(2).get_d()}},
                    {"alt_c0_with_4_alpha_I_sq", -0.125 * (4 * a.im * a.im + 2 * a.re + 4)}});
  }
  return rows;
}

}  // namespace

json identities_report() {
  json j;
  j["routh"] = routh_suite();
  j["stevenson_identity"] = stevenson_suite();
  j["discriminant_order2"] = discriminant_table();
  j["discriminant_sign_rule"] = "sign(computed) = -sign(2 a_R + 1); no dependence on a_I";

  // Quartic constant term at kappa = 1, lambda0 = 3 + 0.5i.
  {
    const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.5}, 1.0);
    double root = NAN;
    for (const auto& r : quartic_lambda_roots(s, 0))
      if (r.kind == RootKind::C) root = r.lambda_re;
    j["quartic_kappa_one"] = {{"lambda0", {3.0, 0.5}},
                        {"root_with_hI_sq_over_4", root},
                        {"closed_form_corrected", lambda0_re_closed_form(s.h0)},
                        {"closed_form_unscaled", lambda0_re_unscaled(s.h0)},
                        {"expected", 3.0}};
  }
  // Sigma/rho identities at a Milson point.
  {
    const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.5}, 2.0);
    const SigmaRho r = milson_sigma_rho(s, -1.0);
    j["sigma_rho_relations"] = {{"epsilon", -1.0},
                          {"sigma", r.sigma},
                          {"rho", {r.rho.real(), r.rho.imag()}},
                          {"real_lhs", r.real_lhs},
                          {"real_rhs_alt", r.real_rhs_alt},
                          {"real_rhs_with_minus_a_kappa_term", r.real_rhs},
                          {"imag_lhs", {r.imag_lhs.real(), r.imag_lhs.imag()}},
                          {"imag_rhs_alt", r.imag_rhs_alt},
                          {"two_lambdaR_lambdaI", r.two_lr_li}};
  }
  // Gendenshtein potential normalization.
  {
    const double a = 2.5, b = 0.5, x = 0.7;
    const auto g = gendenshtein_params(a, b);
    const double eta = std::sinh(x), ch = std::cosh(x);
    const double v_general = potential_at_eta(g.spec, eta);
    const double closed = (b * b - a * (a + 1)) / (ch * ch) + (2 * a + 1) * b * eta / (ch * ch);
    const double alt = (b * b - a * (a + 1) + b * (2 * a + 1) * eta) / (2 * ch * ch);
    j["gendenshtein_reduction"] = {{"x", x}, {"from_general_potential", v_general}, {"closed_form", closed}, {"alt_form", alt},
                             {"ratio_general_over_alt", v_general / alt}};
  }
  // Bound-state count at integer lambda0_R.
  {
    const auto g = gendenshtein_params(2.5, 0.0);
    const Spectrum s = enumerate_bound_spectrum(g.spec);
    j["level_count_formula"] = {{"lambda0_R", 3.0},
                             {"count_constructive", s.count_constructive},
                             {"n_max_formula", s.n_max_formula},
                             {"count_formula", s.count_formula},
                             {"discrepancy", s.formula_discrepancy}};
  }
  // Bose invariant at eps = 0, eta = 0.
  {
    // The invariant has no spectral precondition, so skip PotentialSpec::make.
    PotentialSpec s;
    s.h0 = {-1.0, 0.0};
    s.O00 = 0.7;
    const double v = bose_invariant_eval(s, 0.0, 0.0);
    j["bose_at_origin"] = {{"h0", {-1.0, 0.0}},
                           {"O00", s.O00},
                           {"value", v},
                           {"plus_quarter_sum", 0.25 * (2 * s.h0.real() + s.O00)},
                           {"minus_quarter_sum", -0.25 * (2 * s.h0.real() + s.O00)}};
  }
  // General tangent polynomial example.
  {
    json ex = {{"c", {1.0, 0.0}}, {"d", 2.0}};
    try {
      TangentPolySpec::from_general({1.0, 0.0}, 2.0);
      ex["accepted"] = true;
    } catch (const Error& e) {
      ex["accepted"] = false;
      ex["reason"] = e.what();
    }
    j["general_tp_example"] = ex;
  }
  // Pinned eigenfunction convention at the Milson reference point.
  {
    const PotentialSpec s = milson_spec_from_lambda0({3.0, 0.5}, 2.0);
    json rows = json::array();
    for (RootKind kind : {RootKind::C, RootKind::D}) {
      for (int m = 0; m <= 3; ++m) {
        json row = {{"kind", to_string(kind)}, {"m", m}};
        try {
          const auto roots = quartic_lambda_roots(s, m);
          const QuarticRoot* pick = nullptr;
          for (const auto& r : roots) if (r.kind == kind) pick = &r;
          if (!pick) {
            row["status"] = "no root";
          } else {
            const PinResult p = pin_convention(s, {pick->lambda_re, pick->lambda_im}, pick->energy, m);
            row["winner"] = {{"sign", p.winner.sign}, {"index", to_string(p.winner.index)}};
            row["residual"] = p.residual;
            json cands = json::array();
            for (const auto& c : p.candidates)
              cands.push_back({{"sign", c.convention.sign}, {"index", to_string(c.convention.index)}, {"residual", c.residual}});
            row["candidates"] = cands;
          }
        } catch (const Error& e) {
          row["status"] = e.what();
        }
        rows.push_back(row);
      }
    }
    j["eigen_convention_pinning"] = rows;
  }
  // Canonical discriminant of the type-d order-2 Gendenshtein polynomial.
  {
    json rows = json::array();
    for (double a : {0.5, 1.0, 2.5, 4.0})
      for (double b : {0.0, 1.0, 3.0}) {
        const auto s = aeh_solution(gendenshtein_params(a, b).spec, RootKind::D, 2);
        rows.push_back({{"a", a}, {"b", b}, {"index", {s.solution.poly.alpha.re, s.solution.poly.alpha.im}},
                        {"discriminant", discriminant_order2(s.solution.poly.alpha).computed},
                        {"nodeless", s.nodeless},
                        {"boundary_rule", b * b < (2 * a + 5) * (2 * a + 5) / (6 * a + 11)}});
      }
    j["type_d_order2"] = rows;
  }
  return j;
}

}  // namespace spectra
