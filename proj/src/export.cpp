#include "susy/export.hpp"

#include <cstdio>
#include <sstream>

namespace susy {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string rational_array(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += quoted(values[i].str());
  }
  return out + "]";
}

std::string double_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_double(values[i]);
  }
  return out + "]";
}

std::string table(const std::vector<std::vector<Rational>>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i != 0) out += ", ";
    out += rational_array(rows[i]);
  }
  return out + "]";
}

void csv_rows(std::ostringstream& os, const std::vector<std::vector<Rational>>& rows, const char* kind) {
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      os << n << ',' << k + 1 << ',' << kind << ',' << rows[n][k].numerator().get_str() << ','
         << rows[n][k].denominator().get_str() << '\n';
    }
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::string coeffs_json(const Series& series) {
  std::ostringstream os;
  os << "{\n  \"m\": " << quoted(series.w.m.str()) << ",\n  \"s\": " << quoted(kSpin.str())
     << ",\n  \"N\": " << series.w.order() << ",\n  \"E0\": " << rational_array(series.e.E0)
     << ",\n  \"a\": " << table(series.w.a) << ",\n  \"b\": " << table(series.w.b) << "\n}\n";
  return os.str();
}

std::string coeffs_csv(const Series& series) {
  std::ostringstream os;
  os << "n,k,kind,numerator,denominator\n";
  for (std::size_t n = 0; n < series.e.E0.size(); ++n) {
    os << n << ",0,E," << series.e.E0[n].numerator().get_str() << ',' << series.e.E0[n].denominator().get_str()
       << '\n';
  }
  csv_rows(os, series.w.a, "a");
  csv_rows(os, series.w.b, "b");
  return os.str();
}

std::vector<double> partial_sums(const ESeries& e, double beta) {
  std::vector<double> out;
  double sum = 0.0;
  double power = 1.0;
  for (const Rational& c : e.E0) {
    sum += c.to_double() * power;
    power *= beta;
    out.push_back(sum);
  }
  return out;
}

std::string energy_json(const Series& series, double beta) {
  std::ostringstream os;
  os << "{\n  \"m\": " << quoted(series.w.m.str()) << ",\n  \"beta\": " << format_double(beta)
     << ",\n  \"order\": " << series.w.order() << ",\n  \"E0\": " << rational_array(series.e.E0)
     << ",\n  \"partial_sums\": " << double_array(partial_sums(series.e, beta)) << "\n}\n";
  return os.str();
}

std::string energy_csv(const Series& series, double beta) {
  std::ostringstream os;
  os << "n,E0_n,partial_sum\n";
  const std::vector<double> sums = partial_sums(series.e, beta);
  for (std::size_t n = 0; n < sums.size(); ++n) os << n << ',' << series.e.E0[n].str() << ',' << format_double(sums[n]) << '\n';
  return os.str();
}

std::string spectrum_json(const ExcitedSpectrum& spectrum) {
  std::ostringstream os;
  os << "{\n  \"m\": " << quoted(spectrum.m.str()) << ",\n  \"beta\": " << format_double(spectrum.beta)
     << ",\n  \"order\": " << spectrum.N << ",\n  \"levels\": " << double_array(spectrum.levels)
     << ",\n  \"R_series\": " << table(spectrum.R_series) << "\n}\n";
  return os.str();
}

std::string spectrum_csv(const ExcitedSpectrum& spectrum) {
  std::ostringstream os;
  os << "l,E_l\n";
  for (std::size_t l = 0; l < spectrum.levels.size(); ++l) os << l << ',' << format_double(spectrum.levels[l]) << '\n';
  return os.str();
}

std::string oracle_json(const Rational& m, double beta, const OracleResult& result) {
  std::ostringstream os;
  os << "{\n  \"m\": " << quoted(m.str()) << ",\n  \"beta\": " << format_double(beta) << ",\n  \"method\": "
     << quoted(std::string(to_string(result.method))) << ",\n  \"levels\": " << double_array(result.E)
     << ",\n  \"lambda\": " << double_array(result.lambda) << ",\n  \"residualNorms\": "
     << double_array(result.residualNorms) << ",\n  \"convergenceEstimate\": "
     << double_array(result.convergenceEstimate) << "\n}\n";
  return os.str();
}

std::string oracle_csv(const OracleResult& result) {
  std::ostringstream os;
  os << "l,E_l,residualNorm,convergenceEstimate\n";
  for (std::size_t l = 0; l < result.E.size(); ++l) {
    os << l << ',' << format_double(result.E[l]) << ',' << format_double(result.residualNorms[l]) << ','
       << format_double(result.convergenceEstimate[l]) << '\n';
  }
  return os.str();
}

std::string samples_json(const Rational& m, double beta, int level, int order, const Samples& samples) {
  std::ostringstream os;
  os << "{\n  \"m\": " << quoted(m.str()) << ",\n  \"beta\": " << format_double(beta) << ",\n  \"level\": " << level
     << ",\n  \"order\": " << order << ",\n  \"theta\": " << double_array(samples.theta)
     << ",\n  \"value\": " << double_array(samples.value) << "\n}\n";
  return os.str();
}

std::string samples_csv(const Samples& samples, const std::string& value_name) {
  std::ostringstream os;
  os << "theta," << value_name << '\n';
  for (std::size_t i = 0; i < samples.theta.size(); ++i) {
    os << format_double(samples.theta[i]) << ',' << format_double(samples.value[i]) << '\n';
  }
  return os.str();
}

}  // namespace susy
