#include "susy/wavefunction.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "susy/errors.hpp"
#include "susy/integrals.hpp"

namespace susy {

namespace {

constexpr double kPi = std::numbers::pi;

void check_domain(double theta) {
  if (!(theta > 0.0 && theta < kPi)) throw DomainError("theta must lie in (0, pi)");
}

template <class F>
double integrate(F&& f) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, kPi, 15, 1e-13);
}

}  // namespace

TrigPoly ClosedFormFunction::envelope_log_derivative() const {
  return TrigPoly::cos_sin_pow(-1, sin_power) + TrigPoly::sin_pow(-1, tan_half_power) + exponent.derivative();
}

ClosedFormFunction ClosedFormFunction::derivative() const {
  ClosedFormFunction d = *this;
  d.poly = poly.derivative() + poly * envelope_log_derivative();
  return d;
}

double ClosedFormFunction::eval(double theta) const {
  check_domain(theta);
  const double log_env = sin_power.to_double() * std::log(std::sin(theta)) +
                         tan_half_power.to_double() * std::log(std::tan(0.5 * theta)) + exponent.eval(theta);
  return scale * poly.eval(theta) * std::exp(log_env);
}

TrigPoly integrate_odd(const TrigPoly& w) {
  TrigPoly out;
  for (const auto& [k, v] : w.cos_part()) {
    if (k < 1 || k % 2 == 0) throw ValidationError("integrate_odd needs odd positive sine powers");
    out += TrigPoly::sin_pow(k + 1, v / (k + 1));
  }
  for (const auto& [k, v] : w.even_part()) {
    if (k < 1 || k % 2 == 0) throw ValidationError("integrate_odd needs odd positive sine powers");
    out += odd_sin_antideriv((k + 1) / 2) * v;
  }
  return out;
}

ClosedFormFunction ground_function(const LadderParams& params, const Rational& beta) {
  ClosedFormFunction f;
  f.sin_power = params.A00 * (params.m + Rational(1, 2));
  f.tan_half_power = kSpin * params.B00;
  Rational power(1);
  for (int n = 1; n <= params.order(); ++n) {
    power *= beta;
    if (!power.is_zero()) f.exponent -= integrate_odd(params.term(n)) * power;
  }
  return f;
}

ClosedFormFunction apply_raising(const LadderParams& params, const Rational& beta, const ClosedFormFunction& f) {
  ClosedFormFunction out = f;
  out.poly = params.at(beta) * f.poly - f.derivative().poly;
  return out;
}

double norm_squared(const ClosedFormFunction& f) {
  return integrate([&f](double t) {
    const double v = f.eval(t);
    return v * v;
  });
}

ClosedFormFunction normalized(ClosedFormFunction f) {
  f.scale = 1.0;
  const double n2 = norm_squared(f);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw NoConvergence("wavefunction norm is not finite and positive");
  f.scale = 1.0 / std::sqrt(n2);
  return f;
}

GroundState::GroundState(const WSeries& w, const Rational& beta)
    : f_(normalized(ground_function(LadderParams::physical(w), beta))) {}

double GroundState::theta_fn(double theta) const { return psi(theta) / std::sqrt(std::sin(theta)); }

double ground_psi(const WSeries& w, double theta, const Rational& beta) {
  check_domain(theta);
  return GroundState(w, beta).psi(theta);
}

double ground_theta(const WSeries& w, double theta, const Rational& beta) {
  check_domain(theta);
  return GroundState(w, beta).theta_fn(theta);
}

ClosedFormFunction excited_function(const WSeries& w, int l, const Rational& beta) {
  if (l < 0) throw ValidationError("level must be non-negative");
  std::vector<LadderParams> params{LadderParams::physical(w)};
  for (const LadderStep& step : ladder_chain(w, l)) params.push_back(step.as_params(w.m));
  ClosedFormFunction f = ground_function(params.back(), beta);
  for (int k = l - 1; k >= 0; --k) f = apply_raising(params[static_cast<std::size_t>(k)], beta, f);
  return normalized(f);
}

double excited_wavefunction(const WSeries& w, int l, double theta, const Rational& beta) {
  check_domain(theta);
  return excited_function(w, l, beta).eval(theta);
}

double potential_value(const Rational& m, const Rational& beta, double theta) {
  check_domain(theta);
  double v = 0.0;
  double power = 1.0;
  const double b = beta.to_double();
  for (int n = 0; n <= 2; ++n) {
    v += power * potential_term(m, n).eval(theta);
    power *= b;
  }
  return v;
}

double rayleigh_quotient(const ClosedFormFunction& f, const Rational& m, const Rational& beta) {
  const ClosedFormFunction d2 = f.derivative().derivative();
  const double num = integrate([&](double t) { return f.eval(t) * (-d2.eval(t) + potential_value(m, beta, t) * f.eval(t)); });
  return num / norm_squared(f);
}

double schroedinger_residual(const ClosedFormFunction& f, const Rational& m, const Rational& beta, double E,
                             double theta) {
  const double psi = f.eval(theta);
  return -f.derivative().derivative().eval(theta) + (potential_value(m, beta, theta) - E) * psi;
}

}  // namespace susy
