#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "susy/rational.hpp"
#include "susy/trig_poly.hpp"

namespace susy {

/// Spin weight of the Rarita-Schwinger field.
inline const Rational kSpin{3, 2};

enum class Mode { physical, formal };

struct ModelParams {
  Rational m;
  int N = 0;
  Mode mode = Mode::physical;

  /// Throws ValidationError for an out-of-range m or N, DenominatorVanishes
  /// when some factor 2m + j (1 <= j <= 2(N/2) + 2) is zero.
  void validate() const;
};

struct OrderZero {
  Rational E00;
  Rational csc_coeff;  // 3/2
  Rational cot_coeff;  // m + 1/2

  /// W0 = -(csc_coeff + cot_coeff cos) / sin as a Laurent polynomial.
  TrigPoly laurent() const;
};

/// Triangular coefficient tables of W = W0 + sum_n beta^n W_n with
///   W_n = sum_k a[n][k] cos sin^{2k-1} + sum_k b[n][k] sin^{2k-1}.
/// Rows are stored 0-based in k; a_at/b_at take the 1-based index and return
/// zero outside the stored range.
struct WSeries {
  Rational m;
  OrderZero order0;
  std::vector<std::vector<Rational>> a;
  std::vector<std::vector<Rational>> b;

  int order() const { return static_cast<int>(a.size()) - 1; }
  Rational a_at(int n, int k) const;
  Rational b_at(int n, int k) const;
  /// W_n for n >= 1 (regular), W0 in Laurent form for n == 0.
  TrigPoly term(int n) const;
};

struct ESeries {
  std::vector<Rational> E0;
};

/// Row n of the convolution tables h, g, i, j, indexed by p (0..P+1 with
/// P = n/2 + 1; unused low entries are zero).
struct ConvolutionRow {
  int n = 0;
  std::vector<Rational> h;
  std::vector<Rational> g;
  std::vector<Rational> i;
  std::vector<Rational> j;

  Rational h_at(int p) const;
  Rational g_at(int p) const;
  Rational i_at(int p) const;
  Rational j_at(int p) const;
};

struct OrderSolution {
  std::vector<Rational> a;  // a[k-1]
  std::vector<Rational> b;  // b[k-1]
  Rational E;
};

struct SolveOptions {
  /// Extra a/b columns beyond the ansatz ranges; their solved values must
  /// come out zero.
  int extra_columns = 0;
};

struct Series {
  ModelParams params;
  WSeries w;
  ESeries e;
  std::vector<ConvolutionRow> tables;  // tables[n], n >= 1
};

enum class GTermConvention { DELTA, XI, XI_NEGATED };

std::string_view to_string(GTermConvention c);

OrderZero order_zero(const ModelParams& params);

/// The part of f_n that is neither E_{0,n} nor the W-convolution.
TrigPoly source_term(int n);

/// Convolution row n from rows 1..n-1 of w, cross-checked against the direct
/// product sum_k W_k W_{n-k}; throws InconsistentConvolution on mismatch.
ConvolutionRow convolve(const WSeries& w, int n);

/// Per-order ODE route: W_n' - 2 W0 W_n = E_n + source_n + sum_k W_k W_{n-k}.
OrderSolution solve_order(const WSeries& w, int n, const SolveOptions& options = {});

/// Solves orders 1..N.
Series build_series(const ModelParams& params);

/// Closed recurrence route for n >= 3.
OrderSolution recurrence_coeffs(const Rational& m, const ConvolutionRow& row, GTermConvention convention);

/// Coefficient of the divergent P(2m-2) term given E_{0,n}; zero for the
/// regular solution.
Rational divergence_coefficient(const Rational& m, const ConvolutionRow& row, const Rational& En);

/// V_n, the beta^n coefficient of the potential.
SingularTrig potential_term(const Rational& m, int n);

/// Per-order coefficients of W^2 - W' - V + E0 through order up_to.
std::vector<SingularTrig> riccati_residual(const WSeries& w, const ESeries& e, int up_to);

/// Horner partial sum of E0 to the series order.
double energy_sum(const ESeries& e, double beta);

}  // namespace susy
