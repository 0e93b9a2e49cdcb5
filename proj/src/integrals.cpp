#include "susy/integrals.hpp"

#include "susy/errors.hpp"

namespace susy {

Rational ibar(const Rational& nu, int k) {
  if (k < 0) throw ValidationError("ibar needs k >= 0");
  Rational r(1);
  for (int t = 0; t <= k; ++t) {
    const Rational den = nu - 2 * t;
    if (den.is_zero()) {
      throw DenominatorVanishes("ibar(" + nu.str() + ", " + std::to_string(k) + "): factor nu-" +
                                std::to_string(2 * t) + " is zero");
    }
    r *= (nu + 1 - 2 * t) / den;
  }
  return r;
}

SinPowerIntegral p_even(int mu) {
  if (mu <= 0 || mu % 2 != 0) throw ValidationError("p_even needs a positive even exponent");
  const int m = mu / 2;
  SinPowerIntegral out;
  for (int k = 0; k <= m - 1; ++k) {
    out.trig += TrigPoly::cos_sin_pow(2 * m - 2 * k - 1, -ibar(mu, k) / (2 * m + 1));
  }
  Rational ratio(1);
  for (int j = 1; j <= m; ++j) ratio *= Rational(2 * j - 1, 2 * j);
  out.theta_coeff = ratio;
  return out;
}

TrigPoly odd_sin_antideriv(int k) {
  if (k < 1) throw ValidationError("odd_sin_antideriv needs k >= 1");
  TrigPoly out;
  Rational binom(1);
  for (int j = 0; j <= k - 1; ++j) {
    const Rational sign = j % 2 == 0 ? Rational(-1) : Rational(1);
    out += TrigPoly::cos_pow(2 * j + 1) * (sign * binom / (2 * j + 1));
    binom = binom * (k - 1 - j) / (j + 1);
  }
  return out;
}

Reduction reduction_formula(int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("reduction_formula needs m, n >= 1");
  const int nu = 2 * m + 2 * n - 2;
  Reduction out;
  for (int l = 1; l <= n; ++l) {
    out.trig += TrigPoly::cos_sin_pow(2 * m + 2 * l - 3, -ibar(nu, n - l) / (2 * m + 2 * n - 1));
  }
  out.base_coeff = Rational(2 * m - 1, 2 * m + 2 * n - 1) * ibar(nu, n - 1);
  return out;
}

bool reduction_verified(int m, int n) {
  const Reduction r = reduction_formula(m, n);
  return r.trig.derivative() + TrigPoly::sin_pow(2 * m - 2, r.base_coeff) == TrigPoly::sin_pow(2 * m + 2 * n - 2);
}

WeightedIntegral integrate_weighted(const Rational& m, const TrigPoly& f) {
  const TrigPoly weight = TrigPoly::constant(4) + TrigPoly::cos_sin_pow(0, -4) + TrigPoly::sin_pow(2, -3) +
                          TrigPoly::cos_sin_pow(2, 1);
  const TrigPoly g = f * weight;
  WeightedIntegral out;
  // g sin^{2m-2}: cos sin^{2m-2+k} integrates to sin^{2m-1+k} / (2m-1+k)
  for (const auto& [k, v] : g.cos_part()) {
    if (k < 0 || k % 2 != 0) throw ValidationError("integrate_weighted needs even non-negative sine powers");
    out.shifted += TrigPoly::sin_pow(k - 1, v / (2 * m - 1 + k));
  }
  // sin^{mu} -> -cos sin^{mu-1} / mu + (mu-1)/mu P(mu-2), down to P(2m-2)
  for (const auto& [k, v] : g.even_part()) {
    if (k < 0 || k % 2 != 0) throw ValidationError("integrate_weighted needs even non-negative sine powers");
    Rational coef = v;
    Rational mu = 2 * m - 2 + k;
    for (int cur = k; cur > 0; cur -= 2) {
      out.shifted += TrigPoly::cos_sin_pow(cur - 3, -coef / mu);
      coef *= (mu - 1) / mu;
      mu -= 2;
    }
    out.base += coef;
  }
  return out;
}

IntegrationRoute integrate_order(const Rational& m, const TrigPoly& f_without_E) {
  const WeightedIntegral rest = integrate_weighted(m, f_without_E);
  const WeightedIntegral unit = integrate_weighted(m, TrigPoly::constant(1));
  IntegrationRoute out;
  out.E = -rest.base / unit.base;
  out.A.shifted = rest.shifted + unit.shifted * out.E;
  out.A.base = rest.base + unit.base * out.E;
  const TrigPoly inverse_weight = TrigPoly::constant(4) + TrigPoly::cos_sin_pow(0, 4) + TrigPoly::sin_pow(2, -3) +
                                  TrigPoly::cos_sin_pow(2, -1);
  out.W = inverse_weight * out.A.shifted.shift_sin(-4);
  return out;
}

}  // namespace susy
