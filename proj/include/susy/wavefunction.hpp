#pragma once

#include <vector>

#include "susy/ladder.hpp"
#include "susy/rational.hpp"
#include "susy/series.hpp"
#include "susy/trig_poly.hpp"

namespace susy {

/// f(theta) = scale * P(theta) * sin^sin_power * tan(theta/2)^tan_half_power * exp(J(theta))
/// with P a Laurent trig polynomial and J regular. Closed under d/dtheta.
struct ClosedFormFunction {
  TrigPoly poly = TrigPoly::constant(1);
  Rational sin_power;
  Rational tan_half_power;
  TrigPoly exponent;
  double scale = 1.0;

  /// Logarithmic derivative of the envelope: sin_power cot + tan_half_power csc + J'.
  TrigPoly envelope_log_derivative() const;
  ClosedFormFunction derivative() const;
  /// Throws DomainError outside (0, pi).
  double eval(double theta) const;
};

/// int W for W with odd sine powers only: cos sin^{2k-1} -> sin^{2k}/(2k),
/// sin^{2k-1} -> odd_sin_antideriv(k).
TrigPoly integrate_odd(const TrigPoly& w);

/// exp(-int W(params)) at an exact beta, unnormalised.
ClosedFormFunction ground_function(const LadderParams& params, const Rational& beta);

/// -f' + W(params) f
ClosedFormFunction apply_raising(const LadderParams& params, const Rational& beta, const ClosedFormFunction& f);

/// int_0^pi f^2 dtheta by adaptive Gauss-Kronrod.
double norm_squared(const ClosedFormFunction& f);
ClosedFormFunction normalized(ClosedFormFunction f);

/// Normalised ground state Psi0 of the series; Theta0 = Psi0 / sqrt(sin).
class GroundState {
 public:
  GroundState(const WSeries& w, const Rational& beta);

  double psi(double theta) const { return f_.eval(theta); }
  double theta_fn(double theta) const;
  const ClosedFormFunction& function() const { return f_; }

 private:
  ClosedFormFunction f_;
};

double ground_psi(const WSeries& w, double theta, const Rational& beta);
double ground_theta(const WSeries& w, double theta, const Rational& beta);

/// Normalised Psi_l = A+(a_1) ... A+(a_l) Psi0(a_{l+1}) along the ladder chain.
ClosedFormFunction excited_function(const WSeries& w, int l, const Rational& beta);
double excited_wavefunction(const WSeries& w, int l, double theta, const Rational& beta);

/// V(theta) at exact beta from the per-order potential terms.
double potential_value(const Rational& m, const Rational& beta, double theta);

/// <f, H f> / <f, f> with H = -d^2 + V.
double rayleigh_quotient(const ClosedFormFunction& f, const Rational& m, const Rational& beta);

/// -f'' + V f - E f at theta.
double schroedinger_residual(const ClosedFormFunction& f, const Rational& m, const Rational& beta, double E,
                             double theta);

}  // namespace susy
