#include "susy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "susy/errors.hpp"
#include "susy/integrals.hpp"
#include "susy/ladder.hpp"
#include "susy/oracle.hpp"
#include "susy/published.hpp"
#include "susy/series.hpp"
#include "susy/wavefunction.hpp"

namespace susy {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<Rational>& golden_ms() {
  static const std::vector<Rational> ms{Rational(3, 2), Rational(5, 2), Rational(7, 2), Rational(9, 2)};
  return ms;
}

// Entries of the printed closed forms known to be misprinted.
const std::set<std::string>& known_errata() {
  static const std::set<std::string> keys{"E[4]", "b[3][2]", "b[4][1]", "b[4][2]", "a[4][1]", "a[4][2]", "R2"};
  return keys;
}

Series series_for(const Rational& m, int N) { return build_series(ModelParams{m, N, Mode::physical}); }

std::string fmt(const char* pattern, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

struct Collector {
  CriterionResult r;
  std::vector<std::string> mismatch_keys;

  Collector(int id, std::string title) {
    r.id = id;
    r.title = std::move(title);
    r.passed = true;
  }
  void fail(std::string detail, std::string key = {}) {
    r.passed = false;
    r.details.push_back(std::move(detail));
    mismatch_keys.push_back(std::move(key));
  }
  void note(std::string detail) { r.details.push_back(std::move(detail)); }
  CriterionResult finish() {
    if (!r.passed) {
      r.errata_only = true;
      for (const auto& k : mismatch_keys) {
        if (known_errata().count(k) == 0) r.errata_only = false;
      }
    }
    return r;
  }
};

CriterionResult golden_energies() {
  Collector c(1, "golden eigenvalue coefficients E_{0,1..4}");
  for (const Rational& m : golden_ms()) {
    const Series s = series_for(m, 4);
    for (int n = 1; n <= 4; ++n) {
      const Rational printed = published::energy(m, n);
      if (s.e.E0[static_cast<std::size_t>(n)] != printed) {
        c.fail("m=" + m.str() + " E[" + std::to_string(n) + "]: computed " + s.e.E0[static_cast<std::size_t>(n)].str() +
                   ", printed " + printed.str(),
               "E[" + std::to_string(n) + "]");
      }
    }
  }
  return c.finish();
}

CriterionResult golden_coefficients() {
  Collector c(2, "golden super-potential rows 1-4");
  for (const Rational& m : golden_ms()) {
    const Series s = series_for(m, 4);
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= 2; ++k) {
        const std::string idx = "[" + std::to_string(n) + "][" + std::to_string(k) + "]";
        const auto pa = published::a(m, n, k);
        const Rational ca = s.w.a_at(n, k);
        if (pa ? *pa != ca : !ca.is_zero()) {
          c.fail("m=" + m.str() + " a" + idx + ": computed " + ca.str() + ", printed " + (pa ? pa->str() : "none"),
                 "a" + idx);
        }
        const auto pb = published::b(m, n, k);
        const Rational cb = s.w.b_at(n, k);
        if (pb ? *pb != cb : !cb.is_zero()) {
          c.fail("m=" + m.str() + " b" + idx + ": computed " + cb.str() + ", printed " + (pb ? pb->str() : "none"),
                 "b" + idx);
        }
      }
    }
  }
  return c.finish();
}

CriterionResult riccati() {
  Collector c(3, "Riccati residual W^2 - W' - V + E0 through beta^8");
  for (const Rational& m : {Rational(3, 2), Rational(5, 2)}) {
    const Series s = series_for(m, 8);
    const auto res = riccati_residual(s.w, s.e, 8);
    for (std::size_t n = 0; n < res.size(); ++n) {
      if (!res[n].is_zero()) c.fail("m=" + m.str() + " order " + std::to_string(n) + ": " + res[n].str());
    }
  }
  if (c.r.passed) c.note("all orders 0..8 vanish exactly for m = 3/2, 5/2");
  return c.finish();
}

std::string first_mismatch(const Series& s, int n, const OrderSolution& r) {
  if (r.E != s.e.E0[static_cast<std::size_t>(n)]) return "E[" + std::to_string(n) + "]";
  for (int k = 1; k <= static_cast<int>(r.b.size()); ++k) {
    if (r.b[static_cast<std::size_t>(k - 1)] != s.w.b_at(n, k)) return "b[" + std::to_string(n) + "][" + std::to_string(k) + "]";
  }
  for (int k = 1; k <= static_cast<int>(r.a.size()); ++k) {
    if (r.a[static_cast<std::size_t>(k - 1)] != s.w.a_at(n, k)) return "a[" + std::to_string(n) + "][" + std::to_string(k) + "]";
  }
  return {};
}

CriterionResult route_equivalence() {
  Collector c(4, "route equivalence and g-term convention, n = 3..8");
  const GTermConvention all[] = {GTermConvention::DELTA, GTermConvention::XI, GTermConvention::XI_NEGATED};
  std::set<std::string> winners;
  for (const Rational& m : golden_ms()) {
    const Series s = series_for(m, 8);
    for (int n = 3; n <= 8; ++n) {
      int matches = 0;
      for (GTermConvention conv : all) {
        const std::string miss = first_mismatch(s, n, recurrence_coeffs(m, s.tables[static_cast<std::size_t>(n)], conv));
        if (miss.empty()) {
          ++matches;
          winners.insert(std::string(to_string(conv)));
        } else if (m == Rational(3, 2) && n == 3) {
          c.note(std::string(to_string(conv)) + " first mismatch at " + miss + " (m=3/2, n=3)");
        }
      }
      if (matches != 1) c.fail("m=" + m.str() + " n=" + std::to_string(n) + ": " + std::to_string(matches) + " conventions match");
    }
  }
  if (winners.size() == 1) {
    c.note("matching convention: " + *winners.begin());
  } else {
    c.fail("no single convention wins across all orders");
  }
  return c.finish();
}

CriterionResult divergence() {
  Collector c(5, "divergence cancellation b_1 = 0, n = 3..8");
  for (const Rational& m : golden_ms()) {
    const Series s = series_for(m, 8);
    for (int n = 3; n <= 8; ++n) {
      const Rational b1 = divergence_coefficient(m, s.tables[static_cast<std::size_t>(n)], s.e.E0[static_cast<std::size_t>(n)]);
      if (!b1.is_zero()) c.fail("m=" + m.str() + " n=" + std::to_string(n) + ": b_1 = " + b1.str());
    }
  }
  return c.finish();
}

double beta0_level(const Rational& m, int l) {
  const double md = m.to_double();
  return (md + l) * (md + l + 1) - 3.75;
}

CriterionResult oracle_beta0() {
  Collector c(6, "oracle beta = 0 spectrum");
  for (const Rational& m : {Rational(3, 2), Rational(5, 2)}) {
    OracleConfig fd;
    OracleConfig sh;
    sh.method = OracleMethod::SHOOTING;
    const OracleResult a = eigen_solve(m, 0.0, 3, fd);
    const OracleResult b = eigen_solve(m, 0.0, 3, sh);
    for (int l = 0; l < 3; ++l) {
      const auto ul = static_cast<std::size_t>(l);
      const double exact = beta0_level(m, l);
      const double ea = std::abs(a.E[ul] - exact);
      const double eb = std::abs(b.E[ul] - exact);
      const double agree = std::abs(a.E[ul] - b.E[ul]);
      c.note("m=" + m.str() + " l=" + std::to_string(l) + fmt(" fd err %.2e", ea) + fmt(", shooting err %.2e", eb) +
             fmt(", methods differ %.2e", agree));
      if (ea > 1e-8 || eb > 1e-8) c.fail("m=" + m.str() + " l=" + std::to_string(l) + " outside 1e-8");
      if (agree > 1e-7) c.fail("m=" + m.str() + " l=" + std::to_string(l) + " methods disagree beyond 1e-7");
    }
  }
  return c.finish();
}

CriterionResult convergence_scaling() {
  Collector c(7, "series-oracle scaling, m = 3/2, N = 4");
  const Series s = series_for(Rational(3, 2), 4);
  OracleConfig sh;
  sh.method = OracleMethod::SHOOTING;
  double err[3];
  const double betas[3] = {0.2, 0.1, 0.05};
  for (int i = 0; i < 3; ++i) {
    err[i] = std::abs(energy_sum(s.e, betas[i]) - eigen_solve(Rational(3, 2), betas[i], 1, sh).E[0]);
    c.note(fmt("beta=%.2f", betas[i]) + fmt(" err %.3e", err[i]));
  }
  for (int i = 0; i < 2; ++i) {
    const double ratio = err[i] / err[i + 1];
    c.note(fmt("ratio %.2f", ratio));
    if (!(ratio >= 8.0 && ratio <= 128.0)) c.fail(fmt("ratio %.2f outside [8, 128]", ratio));
  }
  if (err[1] > 1e-4) c.fail(fmt("err(0.1) = %.3e above 1e-4", err[1]));
  return c.finish();
}

CriterionResult ladder_beta0() {
  Collector c(8, "ladder at beta = 0");
  const Rational m(3, 2);
  const Series s = series_for(m, 4);
  const std::vector<Rational> exact = excited_energies_exact(s, Rational(0), 2);
  const std::vector<Rational> expected{Rational(0), Rational(5), Rational(12)};
  if (exact != expected) c.fail("exact levels differ from [0, 5, 12]");
  const OracleResult o = eigen_solve(m, 0.0, 3);
  for (std::size_t l = 0; l < 3; ++l) {
    if (std::abs(o.E[l] - exact[l].to_double()) > 1e-8) c.fail("level " + std::to_string(l) + fmt(" oracle differs by %.2e", std::abs(o.E[l] - exact[l].to_double())));
  }
  const auto chain = ladder_chain(s.w, 2);
  if (chain[0].R[0] != Rational(5) || chain[1].R[0] != Rational(7)) c.fail("R0 chain is not 5, 7");
  if (chain[0].C00 != Rational(3, 2) || chain[1].C00 != Rational(2)) c.fail("C00 chain is not 1 -> 3/2 -> 2");
  c.note("levels " + exact[0].str() + ", " + exact[1].str() + ", " + exact[2].str() + "; R0 chain " +
         chain[0].R[0].str() + ", " + chain[1].R[0].str());
  return c.finish();
}

CriterionResult shape_invariance() {
  Collector c(9, "shape invariance through order 4 and displayed R0..R2");
  const Rational m(3, 2);
  const Series s = series_for(m, 4);
  const LadderParams p = LadderParams::physical(s.w);
  LadderStep step;
  try {
    step = ladder_step(p);
    c.note("theta-dependent residual is zero for n = 0..4");
  } catch (const ShapeInvarianceBroken& e) {
    c.fail(e.what());
    return c.finish();
  }
  const auto d = published::ladder(m, p.A00, p.B00, p.bbar_at(1, 1), p.bbar_at(2, 1), p.abar_at(2, 1));
  const Rational shown[3] = {d.R0, d.R1, d.R2};
  for (int n = 0; n <= 2; ++n) {
    const Rational& got = step.R[static_cast<std::size_t>(n)];
    if (got != shown[n]) {
      c.fail("R" + std::to_string(n) + ": computed " + got.str() + ", displayed " + shown[n].str(), "R" + std::to_string(n));
    }
  }
  return c.finish();
}

CriterionResult level_response() {
  Collector c(10, "beta^1 response of E1 - E0");
  const Rational m(3, 2);
  const Series s = series_for(m, 4);
  OracleConfig sh;
  sh.method = OracleMethod::SHOOTING;
  const double h = 0.02;
  const OracleResult plus = eigen_solve(m, h, 2, sh);
  const OracleResult minus = eigen_solve(m, -h, 2, sh);
  const double slope = ((plus.E[1] - plus.E[0]) - (minus.E[1] - minus.E[0])) / (2 * h);
  const double predicted = ladder_chain(s.w, 1)[0].R[1].to_double();
  const double rel = std::abs(slope - predicted) / std::abs(predicted);
  c.note(fmt("oracle slope %.6f", slope) + fmt(", ladder R1 %.6f", predicted) + fmt(", relative %.2e", rel));
  if (rel > 0.05) c.fail("relative deviation above 5%");
  return c.finish();
}

double fitted_slope(const ClosedFormFunction& f, bool at_zero) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double d = 1e-4; d <= 1e-3 + 1e-12; d += 1e-4) {
    const double x = std::log(d);
    const double y = std::log(std::abs(f.eval(at_zero ? d : kPi - d)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CriterionResult ground_state_checks() {
  Collector c(11, "ground-state exponents and Schroedinger residual");
  const Rational m(3, 2);
  const Series s0 = series_for(m, 6);
  const Rational beta(1, 20);
  const ClosedFormFunction g = GroundState(s0.w, beta).function();
  const auto [a0, api] = indicial_exponents(m);
  const double k0 = fitted_slope(g, true);
  const double kpi = fitted_slope(g, false);
  c.note(fmt("slope at 0: %.5f", k0) + fmt(", at pi: %.5f", kpi));
  if (std::abs(k0 - a0.to_double()) > 0.01 * a0.to_double()) c.fail("exponent at 0 off by more than 1%");
  if (std::abs(kpi - api.to_double()) > 0.01 * api.to_double()) c.fail("exponent at pi off by more than 1%");

  const double E = energy_sum(s0.e, beta.to_double());
  double worst = 0.0;
  double peak = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double t = kPi * i / 21.0;
    peak = std::max(peak, std::abs(g.eval(t)));
    worst = std::max(worst, std::abs(schroedinger_residual(g, m, beta, E, t)));
  }
  c.note(fmt("max residual %.2e", worst) + fmt(", max |Psi| %.3f", peak));
  if (worst > 1e-6 * peak) c.fail("residual above 1e-6 max|Psi|");
  return c.finish();
}

CriterionResult integral_identities() {
  Collector c(12, "sine-power integrals, reduction formula, A_1 reconstruction");
  for (int mu = 2; mu <= 12; mu += 2) {
    const SinPowerIntegral p = p_even(mu);
    if (!(p.trig.derivative() + TrigPoly::constant(p.theta_coeff) == TrigPoly::sin_pow(mu))) {
      c.fail("P(" + std::to_string(mu) + ") derivative round trip");
    }
  }
  for (int mm = 2; mm <= 5; ++mm) {
    for (int n = 1; n <= 4; ++n) {
      if (!reduction_verified(mm, n)) c.fail("reduction formula at m=" + std::to_string(mm) + ", n=" + std::to_string(n));
    }
  }
  for (const Rational& m : golden_ms()) {
    const Series s = series_for(m, 1);
    const IntegrationRoute r = integrate_order(m, source_term(1));
    const TrigPoly one_minus_cos_cubed = TrigPoly::constant(4) + TrigPoly::cos_sin_pow(0, -4) +
                                         TrigPoly::sin_pow(2, -3) + TrigPoly::cos_sin_pow(2, 1);
    const TrigPoly expected_A = one_minus_cos_cubed.shift_sin(-1) * (Rational(-3) / (2 * m + 2));
    if (!(r.A.shifted == expected_A)) c.fail("m=" + m.str() + " A_1 = " + r.A.shifted.str() + " (times sin^2m)");
    if (!(r.W == TrigPoly::sin_pow(1, s.w.b_at(1, 1)))) c.fail("m=" + m.str() + " W_1 from A_1 = " + r.W.str());
    if (r.E != s.e.E0[1]) c.fail("m=" + m.str() + " E_1 from divergence cancellation = " + r.E.str());
  }
  if (c.r.passed) c.note("P(2..12), reduction for (2..5)x(1..4), A_1 -> W_1 = b_11 sin for m = 3/2..9/2");
  return c.finish();
}

}  // namespace

CriterionResult run_criterion(int id) {
  try {
    switch (id) {
      case 1: return golden_energies();
      case 2: return golden_coefficients();
      case 3: return riccati();
      case 4: return route_equivalence();
      case 5: return divergence();
      case 6: return oracle_beta0();
      case 7: return convergence_scaling();
      case 8: return ladder_beta0();
      case 9: return shape_invariance();
      case 10: return level_response();
      case 11: return ground_state_checks();
      case 12: return integral_identities();
      default: break;
    }
  } catch (const Error& e) {
    CriterionResult r;
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.details.push_back(std::string("error: ") + e.what());
    return r;
  }
  throw ValidationError("unknown criterion " + std::to_string(id));
}

bool VerifyReport::ok(bool allow_published_errata) const {
  if (!summary_ok) return false;
  for (const auto& c : criteria) {
    if (!c.passed && !(allow_published_errata && c.errata_only)) return false;
  }
  return true;
}

namespace {

std::string verdict(const CriterionResult& c, bool allow) {
  if (c.passed) return "PASS";
  return allow && c.errata_only ? "WARN" : "FAIL";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string VerifyReport::text(bool allow_published_errata) const {
  std::ostringstream os;
  for (const auto& line : summary) os << line << '\n';
  for (const auto& c : criteria) {
    os << verdict(c, allow_published_errata) << " [" << c.id << "] " << c.title << '\n';
    for (const auto& d : c.details) os << "    " << d << '\n';
  }
  os << (ok(allow_published_errata) ? "verify: all checks passed" : "verify: FAILED") << '\n';
  return os.str();
}

std::string VerifyReport::json(bool allow_published_errata) const {
  std::ostringstream os;
  os << "{\n  \"ok\": " << (ok(allow_published_errata) ? "true" : "false") << ",\n  \"summary\": [";
  for (std::size_t i = 0; i < summary.size(); ++i) os << (i ? ", " : "") << '"' << escape(summary[i]) << '"';
  os << "],\n  \"criteria\": [";
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    os << (i ? ",\n" : "\n") << "    {\"id\": " << c.id << ", \"title\": \"" << escape(c.title) << "\", \"verdict\": \""
       << verdict(c, allow_published_errata) << "\", \"details\": [";
    for (std::size_t j = 0; j < c.details.size(); ++j) os << (j ? ", " : "") << '"' << escape(c.details[j]) << '"';
    os << "]}";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

VerifyReport verify(const VerifyOptions& options) {
  VerifyReport report;
  const Series s = build_series(ModelParams{options.m, options.order, Mode::physical});

  const auto res = riccati_residual(s.w, s.e, options.order);
  bool all_zero = true;
  for (const auto& r : res) all_zero = all_zero && r.is_zero();
  report.summary.push_back(all_zero ? "riccati residual: 0 (all orders)" : "riccati residual: NONZERO");
  report.summary_ok = all_zero;

  for (int n = 3; n <= options.order; ++n) {
    const auto& row = s.tables[static_cast<std::size_t>(n)];
    const bool xi = first_mismatch(s, n, recurrence_coeffs(options.m, row, GTermConvention::XI)).empty();
    const bool div = divergence_coefficient(options.m, row, s.e.E0[static_cast<std::size_t>(n)]).is_zero();
    if (!xi || !div) {
      report.summary_ok = false;
      report.summary.push_back("order " + std::to_string(n) + ": recurrence route disagrees with the ODE route");
    }
  }
  if (report.summary_ok) report.summary.push_back("recurrence route (XI) matches the ODE route for all orders >= 3");

  try {
    ladder_step(LadderParams::physical(s.w));
    report.summary.push_back("shape invariance: certified through order " + std::to_string(options.order));
  } catch (const Error& e) {
    report.summary_ok = false;
    report.summary.push_back(std::string("shape invariance: ") + e.what());
  }

  for (int id = 1; id <= kCriterionCount; ++id) report.criteria.push_back(run_criterion(id));
  return report;
}

}  // namespace susy
