#pragma once

#include <string>
#include <vector>

#include "susy/ladder.hpp"
#include "susy/oracle.hpp"
#include "susy/series.hpp"

namespace susy {

/// Fixed "%.12e" rendering used by every export.
std::string format_double(double x);

std::string coeffs_json(const Series& series);
std::string coeffs_csv(const Series& series);

/// Partial sums of E0(beta) for orders 0..N.
std::vector<double> partial_sums(const ESeries& e, double beta);
std::string energy_json(const Series& series, double beta);
std::string energy_csv(const Series& series, double beta);

std::string spectrum_json(const ExcitedSpectrum& spectrum);
std::string spectrum_csv(const ExcitedSpectrum& spectrum);

std::string oracle_json(const Rational& m, double beta, const OracleResult& result);
std::string oracle_csv(const OracleResult& result);

struct Samples {
  std::vector<double> theta;
  std::vector<double> value;
};
std::string samples_json(const Rational& m, double beta, int level, int order, const Samples& samples);
std::string samples_csv(const Samples& samples, const std::string& value_name);

}  // namespace susy
