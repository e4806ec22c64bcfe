// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "spectra/errors.hpp"
#include "spectra/reports.hpp"

using namespace spectra;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0.0 && dt > budget_s) {
    o.ok = false;
    o.detail += " (over time budget)";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s [%.2fs] %s\n", o.ok ? "PASS" : "FAIL", id, title, dt, o.detail.c_str());
  std::fflush(stdout);
}

char buf[512];

SpectrumVerification c1, c2;

Outcome spectrum_check(const PotentialSpec& s, double tol, SpectrumVerification& out) {
  out = verify_spectrum(s, tol);
  double worst = 0.0;
  for (const auto& l : out.levels) worst = std::max(worst, l.rel_error);
  std::snprintf(buf, sizeof buf, "%d levels, numeric %d, worst rel %.2e", out.analytic_count, out.numeric_count, worst);
  return {out.passed, buf};
}

Outcome kappa_limit() {
  const std::complex<double> l0(3.0, 0.5);
  const std::complex<double> h0 = l0 * l0 - 1.0;
  const double lr = lambda0_re_closed_form(h0);
  const double li = 0.5 * h0.imag() / lr;
  double worst = 0.0;
  int seen = 0;
  for (double k : {1.0 - 1e-8, 1.0 + 1e-8}) {
    const PotentialSpec s = milson_spec(h0, k);
    for (int m = 0; m <= 3; ++m)
      for (const auto& r : quartic_lambda_roots(s, m)) {
        if (r.kind == RootKind::Other) continue;
        const double sgn = r.kind == RootKind::C ? 1.0 : -1.0;
        worst = std::max({worst, std::fabs(r.lambda_re - sgn * lr), std::fabs(r.lambda_im - sgn * li)});
        ++seen;
      }
  }
  std::snprintf(buf, sizeof buf, "%d roots, max deviation %.2e", seen, worst);
  return {seen >= 8 && worst < 1e-6, buf};
}

Outcome identity_suite() {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  int cases = 0, bad_real = 0, bad_ode = 0, bad_rod = 0;
  double stev = 0.0;
  const std::vector<double>& samples = default_residual_samples();
  for (int t = 0; t < 50; ++t) {
    const ComplexIndex al{u(rng), u(rng)};
    for (int m = 0; m <= 6; ++m) {
      ++cases;
      const RouthPolynomial p = routh_polynomial(m, al);
      // (-i)^m P(i eta) evaluated in exact arithmetic has zero imaginary part.
      GaussianRational ph(Rational(1));
      for (int k = 0; k < m; ++k) ph = ph * GaussianRational(Rational(0), Rational(-1));
      for (int q = -3; q <= 3; ++q) {
        const GaussianRational v =
            ph * jacobi_complex_exact(m, al.conj().to_exact(), al.to_exact(), GaussianRational(0, Rational(q, 2)));
        if (sgn(v.im) != 0 || v.re != p.exact(Rational(q, 2))) ++bad_real;
      }
      if (!ode_residual(p).is_zero()) ++bad_ode;
      if (!(routh_rodrigues(m, al).exact == routh_polynomial(m, rodrigues_index_map(al)).exact * rodrigues_scale(m)))
        ++bad_rod;
      // Stevenson form with lambda chosen so the terminating order is m.
      const std::complex<double> lam(m + 0.75 + std::fabs(u(rng)), u(rng));
      stev = std::max(stev, stevenson_identity_check(lam, m, samples).deviation);
    }
  }
  std::snprintf(buf, sizeof buf, "%d cases, non-real %d, ODE %d, Rodrigues %d, Stevenson max %.2e", cases, bad_real,
                bad_ode, bad_rod, stev);
  return {bad_real == 0 && bad_ode == 0 && bad_rod == 0 && stev < 1e-10, buf};
}

Outcome orthogonality() {
  const WeightParams ws[] = {{-5.0, 0.0}, {-5.5, 0.8}, {-6.2, -1.5}, {-4.8, 2.0}};
  double worst = 0.0;
  int pairs = 0;
  for (const auto& w : ws)
    for (int n = 0; n <= 4; ++n)
      for (int m = n + 1; m <= 4; ++m) {
        if (!(2.0 * m + 2.0 * w.re < -1.0)) continue;
        const double ip = inner_product(n, m, w, 1e-14);
        const double nn = inner_product(n, n, w, 1e-14), mm = inner_product(m, m, w, 1e-14);
        worst = std::max(worst, std::fabs(ip) / std::sqrt(std::fabs(nn * mm)));
        ++pairs;
      }
  std::snprintf(buf, sizeof buf, "%d pairs, max relative overlap %.2e", pairs, worst);
  return {pairs > 0 && worst < 1e-9, buf};
}

Outcome node_counts() {
  int states = 0, bad = 0;
  for (const auto* v : {&c1, &c2})
    for (const auto& l : v->levels) {
      ++states;
      if (l.numeric_nodes != l.n || l.poly_roots != l.n) ++bad;
    }
  std::snprintf(buf, sizeof buf, "%d states, %d mismatches", states, bad);
  return {states >= 7 && bad == 0, buf};
}

Outcome insertion() {
  const auto g = gendenshtein_params(2.5, 0.5);
  const PartnerVerification p = verify_partner(g.spec, RootKind::D, 0, 1e-3);
  const double expect[] = {-12.25, -6.25, -2.25, -0.25};
  bool ok = p.passed && p.numeric.size() == 4;
  std::string d = "levels";
  for (std::size_t i = 0; i < p.numeric.size(); ++i) {
    if (i < 4) ok = ok && std::fabs(p.numeric[i].energy - expect[i]) <= 1e-3 * std::fabs(expect[i]);
    std::snprintf(buf, sizeof buf, " %.6f", p.numeric[i].energy);
    d += buf;
  }
  return {ok, d};
}

Outcome nodeless_map() {
  const RunConfig cfg = parse_config(R"({"potential": {"gendenshtein": {"a": 2.5, "b": 0.5}},
                                         "scan": {"a_range": [0.5, 5, 16], "b_range": [0, 4, 16], "m": 2}})");
  const CommandOutput o = cmd_scan_nodeless(cfg, 1);
  const json r = json::parse(o.files.at("nodeless_report.json"));
  bool ok = r["internally_consistent"].get<bool>() && r["cells"].size() == 256;
  for (const auto& c : r["cells"])
    ok = ok && c.contains("agrees_boundary_rule") && c.contains("agrees_canonical_disc") && !c["empirical_nodeless"].is_null();
  std::snprintf(buf, sizeof buf, "256 cells, boundary rule agrees on %d, canonical discriminant on %d",
                r["agree_boundary_rule"].get<int>(), r["agree_canonical_disc"].get<int>());
  return {ok, buf};
}

Outcome symmetric_positivity() {
  const struct { double k, l0; } cases[] = {{2.0, 3.0}, {1.5, 2.5}, {3.0, 4.0}};
  double min_v = INFINITY, asym = 0.0, res = 0.0, vasym = 0.0;
  for (const auto& c : cases) {
    const PotentialSpec s = milson_spec_from_lambda0({c.l0, 0.0}, c.k);
    const double e0 = enumerate_bound_spectrum(s).states.front().energy;
    const VariableMap map = build_variable_map(s.tp, 12.0, 2401);
    const SymmetricSolution sol = symmetric_irregular_solution(s, e0 - 1.0, map);
    min_v = std::min(min_v, sol.min_value);
    asym = std::max(asym, sol.max_asymmetry);
    res = std::max(res, sol.residual);
    vasym = std::max(vasym, sol.potential_asymmetry);
  }
  std::snprintf(buf, sizeof buf, "min psi %.3e, asymmetry %.2e, V asymmetry %.2e, Numerov residual %.2e", min_v,
                asym, vasym, res);
  return {min_v > 0.0 && asym < 1e-9 && vasym < 1e-9 && res < 1e-9, buf};
}

Outcome bound_count() {
  const Spectrum g = enumerate_bound_spectrum(gendenshtein_params(2.5, 0.0).spec);
  const Spectrum m = enumerate_bound_spectrum(milson_spec_from_lambda0({3.0, 0.5}, 2.0));
  std::snprintf(buf, sizeof buf, "constructive %d and %d, formula %d, flagged %d/%d", g.count_constructive,
                m.count_constructive, g.count_formula, g.formula_discrepancy, m.formula_discrepancy);
  return {g.count_constructive == 3 && m.count_constructive == 3 && g.formula_discrepancy && m.formula_discrepancy,
          buf};
}

}  // namespace

int main() {
  criterion(1, "Gendenshtein a=3.3 b=0.7 levels vs Numerov at 1e-4", 10.0,
            [] { return spectrum_check(gendenshtein_params(3.3, 0.7).spec, 1e-4, c1); });
  criterion(2, "Milson kappa=2 lambda0=3+0.5i levels vs Numerov at 1e-3", 30.0,
            [] { return spectrum_check(milson_spec_from_lambda0({3.0, 0.5}, 2.0), 1e-3, c2); });
  criterion(3, "quartic roots at kappa = 1 +- 1e-8 vs closed forms", 0.0, kappa_limit);
  criterion(4, "polynomial identity suite, m <= 6, 50 indices", 20.0, identity_suite);
  criterion(5, "orthogonality of Romanovski-Routh subsets", 0.0, orthogonality);
  criterion(6, "node counts of criteria 1-2 states", 0.0, node_counts);
  criterion(7, "Darboux insertion on Gendenshtein(2.5, 0.5)", 30.0, insertion);
  criterion(8, "16x16 nodeless map at m=2 internally consistent", 0.0, nodeless_map);
  criterion(9, "symmetric irregular solution positive and even", 0.0, symmetric_positivity);
  criterion(10, "bound count at lambda0_R = 3 with formula flag", 0.0, bound_count);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
