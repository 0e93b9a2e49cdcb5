#pragma once

#include <vector>

#include "susy/rational.hpp"
#include "susy/trig_poly.hpp"

namespace susy {

/// Ibar(nu, k) = prod_{t=0}^{k} (nu + 1 - 2t) / (nu - 2t).
Rational ibar(const Rational& nu, int k);

/// Antiderivative trig + theta_coeff * theta.
struct SinPowerIntegral {
  TrigPoly trig;
  Rational theta_coeff;
};

/// Closed form of P(mu) = int sin^mu for a positive even mu.
SinPowerIntegral p_even(int mu);

/// int sin^{2k-1} as a polynomial in cos (canonical TrigPoly form).
TrigPoly odd_sin_antideriv(int k);

/// Right-hand side of the reduction identity for P(2m+2n-2) in terms of
/// P(2m-2), integer m >= 1, n >= 1.
struct Reduction {
  TrigPoly trig;
  Rational base_coeff;
};
Reduction reduction_formula(int m, int n);

/// True when d/dtheta [trig + base_coeff * P(2m-2)] == sin^{2m+2n-2}.
bool reduction_verified(int m, int n);

/// s^{2m} * shifted + base * P(2m-2) with symbolic, possibly fractional, m:
/// exponents in `shifted` are relative to sin^{2m}.
struct WeightedIntegral {
  TrigPoly shifted;
  Rational base;
};

/// int f (1 - cos)^3 sin^{2m-2} for a regular f with only even sine powers.
WeightedIntegral integrate_weighted(const Rational& m, const TrigPoly& f);

/// Integration route for order n: picks E_{0,n} to cancel the P(2m-2) term
/// and returns W_n = (1 + cos)^3 sin^{-2m-4} A_n.
struct IntegrationRoute {
  Rational E;
  WeightedIntegral A;
  TrigPoly W;
};
IntegrationRoute integrate_order(const Rational& m, const TrigPoly& f_without_E);

}  // namespace susy
