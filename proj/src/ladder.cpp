#include "susy/ladder.hpp"

#include <cmath>

#include "susy/errors.hpp"

namespace susy {

namespace {

Rational entry(const std::vector<std::vector<Rational>>& table, int n, int k) {
  if (n < 0 || n >= static_cast<int>(table.size())) return Rational(0);
  const auto& row = table[static_cast<std::size_t>(n)];
  if (k < 1 || k > static_cast<int>(row.size())) return Rational(0);
  return row[static_cast<std::size_t>(k - 1)];
}

std::vector<std::vector<Rational>> ratios(const std::vector<std::vector<Rational>>& scaled,
                                          const std::vector<std::vector<Rational>>& base, char name) {
  std::vector<std::vector<Rational>> out(scaled.size());
  for (std::size_t n = 0; n < scaled.size(); ++n) {
    for (std::size_t k = 0; k < scaled[n].size(); ++k) {
      const Rational denom = entry(base, static_cast<int>(n), static_cast<int>(k + 1));
      if (denom.is_zero()) {
        if (!scaled[n][k].is_zero()) {
          throw DenominatorVanishes(std::string("base coefficient ") + name + "[" + std::to_string(n) + "][" +
                                    std::to_string(k + 1) + "] is zero");
        }
        out[n].push_back(Rational(1));
      } else {
        out[n].push_back(scaled[n][k] / denom);
      }
    }
  }
  return out;
}

Rational checked(const Rational& d, const char* what, int n, int p) {
  if (d.is_zero()) {
    throw DenominatorVanishes(std::string(what) + " vanishes at order " + std::to_string(n) + ", p = " +
                              std::to_string(p));
  }
  return d;
}

}  // namespace

LadderParams LadderParams::physical(const WSeries& w) {
  LadderParams p;
  p.m = w.m;
  p.abar = w.a;
  p.bbar = w.b;
  return p;
}

Rational LadderParams::abar_at(int n, int k) const { return entry(abar, n, k); }
Rational LadderParams::bbar_at(int n, int k) const { return entry(bbar, n, k); }

TrigPoly LadderParams::term(int n) const {
  if (n == 0) {
    return TrigPoly::cos_sin_pow(-1, -A00 * (m + Rational(1, 2))) + TrigPoly::sin_pow(-1, -kSpin * B00);
  }
  TrigPoly t;
  const auto& arow = abar.at(static_cast<std::size_t>(n));
  const auto& brow = bbar.at(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < arow.size(); ++k) t += TrigPoly::cos_sin_pow(static_cast<int>(2 * k + 1), arow[k]);
  for (std::size_t k = 0; k < brow.size(); ++k) t += TrigPoly::sin_pow(static_cast<int>(2 * k + 1), brow[k]);
  return t;
}

TrigPoly LadderParams::at(const Rational& beta) const {
  TrigPoly w;
  Rational power(1);
  for (int n = 0; n <= order(); ++n) {
    w += term(n) * power;
    power *= beta;
  }
  return w;
}

TrigPoly LadderParams::partner(int n, int sign) const {
  TrigPoly v;
  for (int k = 0; k <= n; ++k) v += term(k) * term(n - k);
  const TrigPoly d = term(n).derivative();
  return sign > 0 ? v + d : v - d;
}

std::vector<std::vector<Rational>> LadderParams::a_ratios(const WSeries& w) const { return ratios(abar, w.a, 'a'); }
std::vector<std::vector<Rational>> LadderParams::b_ratios(const WSeries& w) const { return ratios(bbar, w.b, 'b'); }

LadderParams LadderStep::as_params(const Rational& m) const {
  LadderParams p;
  p.m = m;
  p.A00 = C00;
  p.B00 = D00;
  p.abar = cbar;
  p.bbar = dbar;
  return p;
}

Rational alpha(int p, const Rational& C00, const Rational& m) { return (2 * m + 1) * C00 + (2 * p - 1); }

InitialStep step_init(const LadderParams& params) {
  if (params.order() < 2) throw ValidationError("step_init needs parameters through order 2");
  const Rational& m = params.m;
  const Rational x = (2 * m + 1) * params.A00;
  const Rational& B = params.B00;
  checked(x + 3, "(2m+1)A00+3", 0, 1);
  checked(x + 4, "(2m+1)A00+4", 0, 2);
  const Rational b11 = params.bbar_at(1, 1);
  const Rational b21 = params.bbar_at(2, 1);
  const Rational a21 = params.abar_at(2, 1);

  InitialStep s;
  s.C00 = params.A00 + Rational(2) / (2 * m + 1);
  s.D00 = B;
  s.D11 = (x - 1) / (x + 3) * b11;
  s.C21 = (x - 2) / (x + 4) * a21 + 8 * (x + 1) * b11 * b11 / (pow(x + 3, 2) * (x + 4));
  s.D21 = (x - 1) / (x + 3) * b21 + 18 * B * a21 / ((x + 3) * (x + 4)) -
          24 * B * (x + 1) * b11 * b11 / (pow(x + 3, 3) * (x + 4));
  s.R0 = x + 1;
  s.R1 = -12 * B * b11 / (x + 3);
  s.R2 = -12 * B * b21 / (x + 3) +
         (x + 1) * (8 * pow(x + 3, 2) - 72 * B * B) / (pow(x + 3, 3) * (x + 4)) * b11 * b11 +
         (54 * B * B - 2 * (x + 1) * (x + 3)) / ((x + 3) * (x + 4)) * a21;
  return s;
}

Rational remainder_extract(const LadderParams& a1, const LadderParams& a2, int n) {
  const TrigPoly diff = a1.partner(n, +1) - a2.partner(n, -1);
  const Rational constant = diff.constant_term();
  const TrigPoly rest = diff - TrigPoly::constant(constant);
  if (!rest.is_zero()) {
    throw ShapeInvarianceBroken("order " + std::to_string(n) + ": theta-dependent residual " + rest.str());
  }
  return constant;
}

LadderStep step_zero(const LadderParams& params) {
  const Rational& m = params.m;
  LadderStep step;
  step.C00 = params.A00 + Rational(2) / checked(2 * m + 1, "2m+1", 0, 0);
  step.D00 = params.B00;
  step.cbar.emplace_back();
  step.dbar.emplace_back();
  step.R.push_back(remainder_extract(params, step.as_params(m), 0));
  return step;
}

void step_general(const LadderParams& params, LadderStep& prior, int n) {
  if (n < 1 || n > params.order()) throw ValidationError("step_general: order outside the parameter range");
  if (static_cast<int>(prior.R.size()) != n) throw ValidationError("step_general: prior step must hold orders < n");
  const Rational& m = params.m;

  const LadderParams known = prior.as_params(m);
  TrigPoly K = params.partner(n, +1);
  for (int k = 1; k < n; ++k) K -= known.term(k) * known.term(n - k);

  const Rational kappa = 3 * prior.D00;
  const int P = n / 2 + 1;
  std::vector<Rational> c(static_cast<std::size_t>(P + 1));
  std::vector<Rational> d(static_cast<std::size_t>(P + 1));
  Rational R;
  for (int p = P; p >= 1; --p) {
    const Rational al = checked(alpha(p, prior.C00, m), "alpha_p", n, p);
    const auto up = static_cast<std::size_t>(p);
    d[up] = -(K.cos_coeff(2 * p - 2) + kappa * c[up]) / al;
    const Rational rhs = kappa * d[up] + al * c[up] + K.even_coeff(2 * p - 2);
    if (p > 1) {
      c[up - 1] = rhs / checked(al - 1, "alpha_p - 1", n, p);
    } else {
      R = rhs;
    }
  }

  const int ka = n / 2;
  const int kb = (n + 1) / 2;
  for (int p = ka + 1; p <= P; ++p) {
    if (!c[static_cast<std::size_t>(p)].is_zero()) {
      throw ShapeInvarianceBroken("order " + std::to_string(n) + ": cos coefficient outside the ansatz at p = " +
                                  std::to_string(p));
    }
  }
  for (int p = kb + 1; p <= P; ++p) {
    if (!d[static_cast<std::size_t>(p)].is_zero()) {
      throw ShapeInvarianceBroken("order " + std::to_string(n) + ": sin coefficient outside the ansatz at p = " +
                                  std::to_string(p));
    }
  }
  prior.cbar.emplace_back(c.begin() + 1, c.begin() + 1 + ka);
  prior.dbar.emplace_back(d.begin() + 1, d.begin() + 1 + kb);
  prior.R.push_back(R);

  const Rational certified = remainder_extract(params, prior.as_params(m), n);
  if (certified != R) {
    throw ShapeInvarianceBroken("order " + std::to_string(n) + ": recurrence remainder " + R.str() +
                                " differs from the expanded remainder " + certified.str());
  }
}

LadderStep ladder_step(const LadderParams& params) {
  LadderStep step = step_zero(params);
  for (int n = 1; n <= params.order(); ++n) step_general(params, step, n);
  return step;
}

std::vector<LadderStep> ladder_chain(const WSeries& w, int L) {
  if (L < 0) throw ValidationError("number of levels must be non-negative");
  std::vector<LadderStep> chain;
  LadderParams current = LadderParams::physical(w);
  for (int l = 0; l < L; ++l) {
    chain.push_back(ladder_step(current));
    current = chain.back().as_params(w.m);
  }
  return chain;
}

ExcitedSpectrum excited_energies(const Series& series, double beta, int L) {
  ExcitedSpectrum out;
  out.m = series.w.m;
  out.beta = beta;
  out.N = series.w.order();
  double level = energy_sum(series.e, beta);
  out.levels.push_back(level);
  for (const LadderStep& step : ladder_chain(series.w, L)) {
    double r = 0.0;
    for (auto it = step.R.rbegin(); it != step.R.rend(); ++it) r = r * beta + it->to_double();
    level += r;
    out.levels.push_back(level);
    out.R_series.push_back(step.R);
  }
  return out;
}

std::vector<Rational> excited_energies_exact(const Series& series, const Rational& beta, int L) {
  auto horner = [&beta](const std::vector<Rational>& coeffs) {
    Rational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * beta + *it;
    return acc;
  };
  std::vector<Rational> levels{horner(series.e.E0)};
  for (const LadderStep& step : ladder_chain(series.w, L)) levels.push_back(levels.back() + horner(step.R));
  return levels;
}

}  // namespace susy
