#include "susy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "susy/errors.hpp"
#include "susy/export.hpp"
#include "susy/ladder.hpp"
#include "susy/oracle.hpp"
#include "susy/series.hpp"
#include "susy/verify.hpp"
#include "susy/wavefunction.hpp"

namespace susy {

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerification = 3;

struct Request {
  std::string subcommand;
  std::string m = "3/2";
  std::string beta = "0";
  int order = 4;
  int levels = 3;
  int level = 0;
  int points = 512;
  int grid = 4000;
  double tol = 1e-8;
  double eps = 1e-6;
  std::string method = "finite-difference";
  std::string format = "text";
  std::string output;
  bool formal = false;
  bool allow_errata = false;
};

struct Emitted {
  std::string body;
  int status = 0;
};

Series make_series(const Request& req, const Rational& m) {
  return build_series(ModelParams{m, req.order, req.formal ? Mode::formal : Mode::physical});
}

OracleConfig oracle_config(const Request& req) {
  OracleConfig cfg;
  if (req.method == "shooting") {
    cfg.method = OracleMethod::SHOOTING;
  } else if (req.method == "finite-difference" || req.method == "fd") {
    cfg.method = OracleMethod::FINITE_DIFFERENCE;
  } else {
    throw ValidationError("unknown oracle method '" + req.method + "'");
  }
  cfg.gridPoints = req.grid;
  cfg.tolerance = req.tol;
  cfg.boundaryOffset = req.eps;
  cfg.maxLevels = std::max(cfg.maxLevels, req.levels);
  cfg.validate();
  return cfg;
}

std::string coeffs_text(const Series& s) {
  std::ostringstream os;
  os << "m = " << s.w.m.str() << ", N = " << s.w.order() << '\n';
  for (std::size_t n = 0; n < s.e.E0.size(); ++n) os << "E0[" << n << "] = " << s.e.E0[n].str() << '\n';
  for (int n = 1; n <= s.w.order(); ++n) os << "W_" << n << " = " << s.w.term(n).str() << '\n';
  return os.str();
}

std::string energy_text(const Series& s, double beta) {
  std::ostringstream os;
  const std::vector<double> sums = partial_sums(s.e, beta);
  os << "m = " << s.w.m.str() << ", beta = " << format_double(beta) << '\n';
  for (std::size_t n = 0; n < sums.size(); ++n) {
    os << "order " << n << ": E0_n = " << s.e.E0[n].str() << ", partial sum = " << format_double(sums[n]) << '\n';
  }
  return os.str();
}

std::string spectrum_text(const ExcitedSpectrum& sp) {
  std::ostringstream os;
  os << "m = " << sp.m.str() << ", beta = " << format_double(sp.beta) << ", N = " << sp.N << '\n';
  for (std::size_t l = 0; l < sp.levels.size(); ++l) os << "E_" << l << " = " << format_double(sp.levels[l]) << '\n';
  for (std::size_t k = 0; k < sp.R_series.size(); ++k) {
    os << "R (step " << k + 1 << "):";
    for (const Rational& r : sp.R_series[k]) os << ' ' << r.str();
    os << '\n';
  }
  return os.str();
}

std::string oracle_text(const Rational& m, double beta, const OracleResult& r) {
  std::ostringstream os;
  os << "m = " << m.str() << ", beta = " << format_double(beta) << ", method = " << to_string(r.method) << '\n';
  for (std::size_t l = 0; l < r.E.size(); ++l) {
    os << "E_" << l << " = " << format_double(r.E[l]) << "  residual " << format_double(r.residualNorms[l])
       << "  estimate " << format_double(r.convergenceEstimate[l]) << '\n';
  }
  return os.str();
}

Emitted run_request(const Request& req) {
  const Rational m = Rational::parse(req.m);
  const Rational beta_exact = Rational::parse(req.beta);
  const double beta = beta_exact.to_double();
  if (req.order < 0) throw ValidationError("--order must be non-negative");
  if (req.levels < 1) throw ValidationError("--levels must be at least 1");
  const bool json = req.format == "json";
  const bool csv = req.format == "csv";

  if (req.subcommand == "coeffs") {
    const Series s = make_series(req, m);
    return {json ? coeffs_json(s) : csv ? coeffs_csv(s) : coeffs_text(s)};
  }
  if (req.subcommand == "energy") {
    const Series s = make_series(req, m);
    return {json ? energy_json(s, beta) : csv ? energy_csv(s, beta) : energy_text(s, beta)};
  }
  if (req.subcommand == "ladder") {
    const Series s = make_series(req, m);
    const ExcitedSpectrum sp = excited_energies(s, beta, req.levels - 1);
    return {json ? spectrum_json(sp) : csv ? spectrum_csv(sp) : spectrum_text(sp)};
  }
  if (req.subcommand == "oracle") {
    const OracleResult r = eigen_solve(m, beta, req.levels, oracle_config(req));
    return {json ? oracle_json(m, beta, r) : csv ? oracle_csv(r) : oracle_text(m, beta, r)};
  }
  if (req.subcommand == "wavefunction") {
    if (req.points < 1) throw ValidationError("--points must be positive");
    if (req.level < 0) throw ValidationError("--level must be non-negative");
    const Series s = make_series(req, m);
    Samples samples;
    const GroundState ground(s.w, beta_exact);
    const ClosedFormFunction f = req.level == 0 ? ground.function() : excited_function(s.w, req.level, beta_exact);
    for (int i = 1; i <= req.points; ++i) {
      const double t = std::numbers::pi * i / (req.points + 1);
      samples.theta.push_back(t);
      samples.value.push_back(req.level == 0 ? ground.theta_fn(t) : f.eval(t));
    }
    const std::string name = req.level == 0 ? "Theta0" : "Psi" + std::to_string(req.level);
    return {json ? samples_json(m, beta, req.level, req.order, samples) : samples_csv(samples, name)};
  }
  if (req.subcommand == "verify") {
    VerifyOptions opts;
    opts.m = m;
    opts.order = req.order;
    opts.allow_published_errata = req.allow_errata;
    const VerifyReport report = verify(opts);
    return {json ? report.json(req.allow_errata) : report.text(req.allow_errata),
            report.ok(req.allow_errata) ? 0 : kExitVerification};
  }
  throw ValidationError("unknown subcommand '" + req.subcommand + "'");
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Spin-3/2 spheroidal eigenvalue series, shape-invariance ladder and numerical oracle"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Request req;
  req.order = -1;
  app.add_option("--m", req.m, "m as p/q or a terminating decimal")->capture_default_str();
  app.add_option("--beta", req.beta, "deformation parameter beta")->capture_default_str();
  app.add_option("--order", req.order, "series order N (default 4, verify 6)");
  app.add_option("--levels", req.levels, "number of levels")->capture_default_str();
  app.add_option("--level", req.level, "wavefunction level l")->capture_default_str();
  app.add_option("--points", req.points, "interior sample points")->capture_default_str();
  app.add_option("--grid", req.grid, "finite-difference cells")->capture_default_str();
  app.add_option("--tol", req.tol, "oracle convergence tolerance")->capture_default_str();
  app.add_option("--eps", req.eps, "oracle boundary offset")->capture_default_str();
  app.add_option("--method", req.method, "oracle method")
      ->check(CLI::IsMember({"finite-difference", "fd", "shooting"}))
      ->capture_default_str();
  app.add_option("--format", req.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", req.output, "output path (default stdout)");
  app.add_flag("--formal", req.formal, "formal mode: allow non-physical m");
  app.add_flag("--allow-published-errata", req.allow_errata, "report known misprints as warnings");

  app.add_subcommand("coeffs", "exact super-potential and eigenvalue coefficients");
  app.add_subcommand("energy", "partial sums of E0(beta) per order");
  app.add_subcommand("ladder", "excited levels from the shape-invariance ladder");
  app.add_subcommand("wavefunction", "sampled Theta0 or Psi_l");
  app.add_subcommand("oracle", "numerical eigenvalues");
  app.add_subcommand("verify", "conformance report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  req.subcommand = app.get_subcommands().front()->get_name();
  if (req.order < 0) req.order = req.subcommand == "verify" ? 6 : 4;

  Emitted out;
  try {
    out = run_request(req);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }

  if (req.output.empty()) {
    std::cout << out.body;
  } else {
    std::ofstream file(req.output);
    if (!file) {
      std::cerr << "error: cannot open " << req.output << '\n';
      return kExitValidation;
    }
    file << out.body;
  }
  return out.status;
}

}  // namespace susy
