#pragma once

#include <vector>

#include "susy/rational.hpp"
#include "susy/series.hpp"
#include "susy/trig_poly.hpp"

namespace susy {

/// Parameter set (A, B) of the deformed super-potential
///   W(A,B) = -A00 (m+1/2) cot - (3/2) B00 csc + sum_n beta^n Wbar_n,
///   Wbar_n = sum_k abar[n][k] cos sin^{2k-1} + bbar[n][k] sin^{2k-1},
/// stored through the scaled coefficients abar = A a, bbar = B b.
struct LadderParams {
  Rational m;
  Rational A00{1};
  Rational B00{1};
  std::vector<std::vector<Rational>> abar;  // abar[n][k-1], row 0 empty
  std::vector<std::vector<Rational>> bbar;

  static LadderParams physical(const WSeries& w);

  int order() const { return static_cast<int>(abar.size()) - 1; }
  Rational abar_at(int n, int k) const;
  Rational bbar_at(int n, int k) const;
  /// Wbar_n; n == 0 gives the Laurent order-0 part.
  TrigPoly term(int n) const;
  /// Full W at an exact beta, truncated at order().
  TrigPoly at(const Rational& beta) const;
  /// V^{+-}_n = sum_k Wbar_k Wbar_{n-k} +- Wbar_n'.
  TrigPoly partner(int n, int sign) const;

  /// Ratio tables A[n][k] = abar/a and B[n][k] = bbar/b against base w.
  /// Throws DenominatorVanishes when a base coefficient is zero under a
  /// nonzero scaled one.
  std::vector<std::vector<Rational>> a_ratios(const WSeries& w) const;
  std::vector<std::vector<Rational>> b_ratios(const WSeries& w) const;
};

/// Closed-form values of the first orders (derived forms, see README).
struct InitialStep {
  Rational C00, D00, D11, C21, D21, R0, R1, R2;
};

struct LadderStep {
  Rational C00;
  Rational D00;
  std::vector<std::vector<Rational>> cbar;  // same layout as LadderParams::abar
  std::vector<std::vector<Rational>> dbar;
  std::vector<Rational> R;

  /// The stepped parameters (C, D) as the next parameter set.
  LadderParams as_params(const Rational& m) const;
};

struct ExcitedSpectrum {
  Rational m;
  double beta = 0.0;
  int N = 0;
  std::vector<double> levels;
  /// R_series[k] = remainder coefficients R_n of ladder step k+1.
  std::vector<std::vector<Rational>> R_series;
};

/// (2m+1) C00 + 2p - 1
Rational alpha(int p, const Rational& C00, const Rational& m);

InitialStep step_init(const LadderParams& params);

/// Order-0 part of a step: C00, D00 and R0, certified.
LadderStep step_zero(const LadderParams& params);

/// Extends prior (orders < n filled) by order n >= 1, top-down in p from
/// P = n/2 + 1 with c_P = 0, then certifies with remainder_extract.
void step_general(const LadderParams& params, LadderStep& prior, int n);

/// Full step through params.order().
LadderStep ladder_step(const LadderParams& params);

/// Constant remainder of V+_n(a1) - V-_n(a2); throws ShapeInvarianceBroken
/// listing the theta-dependent monomials otherwise.
Rational remainder_extract(const LadderParams& a1, const LadderParams& a2, int n);

/// Successive ladder steps from the physical start.
std::vector<LadderStep> ladder_chain(const WSeries& w, int L);

ExcitedSpectrum excited_energies(const Series& series, double beta, int L);
/// Exact levels at a rational beta.
std::vector<Rational> excited_energies_exact(const Series& series, const Rational& beta, int L);

}  // namespace susy
