#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "susy/rational.hpp"

namespace susy {

enum class OracleMethod { SHOOTING, FINITE_DIFFERENCE };

std::string_view to_string(OracleMethod method);

struct OracleConfig {
  OracleMethod method = OracleMethod::FINITE_DIFFERENCE;
  int gridPoints = 4000;
  double boundaryOffset = 1e-6;
  double tolerance = 1e-8;
  int maxLevels = 12;

  void validate() const;
};

struct OracleResult {
  OracleMethod method = OracleMethod::FINITE_DIFFERENCE;
  std::vector<double> E;
  /// Eigenvalue of the untransformed angular equation; identical to E.
  std::vector<double> lambda;
  std::vector<double> residualNorms;
  std::vector<double> convergenceEstimate;
  /// Observed order of the raw grid-halving sequence (finite differences only).
  std::vector<double> convergenceOrder;
};

/// V(theta) of the Schroedinger form with s = 3/2.
double potential_eval(double theta, const Rational& m, double beta);

/// Frobenius exponents 1/2 + |m + 3/2| at 0 and 1/2 + |m - 3/2| at pi.
std::pair<Rational, Rational> indicial_exponents(const Rational& m);

/// Lowest `count` eigenvalues of -Psi'' + V Psi = E Psi with regular
/// behaviour at both ends. Both methods work on Psi = sin(t/2)^a cos(t/2)^b u
/// with (a, b) the indicial exponents, which leaves a bounded potential for u.
OracleResult eigen_solve(const Rational& m, double beta, int count, const OracleConfig& config = {});

}  // namespace susy
