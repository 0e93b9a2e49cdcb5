#include "susy/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "susy/errors.hpp"

namespace susy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kS = 1.5;

Rational abs_value(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Psi = g u with g = sin(t/2)^a cos(t/2)^b; u solves -(p u')' + p q u = E p u
// with p = g^2 and q = V - g''/g, bounded on [0, pi].
struct Reduced {
  double m;
  double beta;
  double a;
  double b;

  double q(double t) const {
    const double c = std::cos(t);
    const double S = std::sin(0.5 * t);
    const double C = std::cos(0.5 * t);
    const double r0 = (m + kS) * (m + kS) - 0.25 - a * (a - 1.0);
    const double rpi = (m - kS) * (m - kS) - 0.25 - b * (b - 1.0);
    double v = -(0.25 + kS + beta * beta * c * c - 2.0 * kS * beta * c) - kS * kS + 0.25 * (a + b) * (a + b);
    if (r0 != 0.0) v += r0 / (4.0 * S * S);
    if (rpi != 0.0) v += rpi / (4.0 * C * C);
    return v;
  }

  double log_p(double t) const { return 2.0 * a * std::log(std::sin(0.5 * t)) + 2.0 * b * std::log(std::cos(0.5 * t)); }

  double dlog_p(double t) const { return a / std::tan(0.5 * t) - b * std::tan(0.5 * t); }

  double min_q() const {
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 1; i < 2000; ++i) lo = std::min(lo, q(kPi * i / 2000.0));
    return lo;
  }
};

Reduced make_reduced(const Rational& m, double beta) {
  const auto [a0, api] = indicial_exponents(m);
  return Reduced{m.to_double(), beta, a0.to_double(), api.to_double()};
}

// ---- finite differences -----------------------------------------------------

struct FdLevels {
  std::vector<double> E;
  std::vector<double> residual;
};

FdLevels fd_levels(const Reduced& prob, int cells, double eps, int count) {
  const double h = (kPi - 2.0 * eps) / cells;
  std::vector<double> lp(static_cast<std::size_t>(cells));
  std::vector<double> lface(static_cast<std::size_t>(cells + 1));
  for (int i = 0; i < cells; ++i) lp[static_cast<std::size_t>(i)] = prob.log_p(eps + (i + 0.5) * h);
  for (int i = 0; i <= cells; ++i) lface[static_cast<std::size_t>(i)] = prob.log_p(eps + i * h);

  std::vector<double> d(static_cast<std::size_t>(cells));
  std::vector<double> e(static_cast<std::size_t>(cells > 1 ? cells - 1 : 1));
  const double inv_h2 = 1.0 / (h * h);
  for (int i = 0; i < cells; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    double diag = prob.q(eps + (i + 0.5) * h);
    if (i > 0) diag += std::exp(lface[ui] - lp[ui]) * inv_h2;
    if (i < cells - 1) diag += std::exp(lface[ui + 1] - lp[ui]) * inv_h2;
    d[ui] = diag;
    if (i < cells - 1) e[ui] = -std::exp(lface[ui + 1] - 0.5 * (lp[ui] + lp[ui + 1])) * inv_h2;
  }
  const std::vector<double> d0 = d;
  const std::vector<double> e0 = e;

  lapack_int found = 0;
  std::vector<double> w(static_cast<std::size_t>(cells));
  std::vector<double> z(static_cast<std::size_t>(cells) * static_cast<std::size_t>(count));
  std::vector<lapack_int> ifail(static_cast<std::size_t>(cells));
  const lapack_int info = LAPACKE_dstevx(LAPACK_COL_MAJOR, 'V', 'I', cells, d.data(), e.data(), 0.0, 0.0, 1, count,
                                         2.0 * LAPACKE_dlamch('S'), &found, w.data(), z.data(), cells, ifail.data());
  if (info != 0 || found != count) throw NoConvergence("tridiagonal eigensolver failed (info " + std::to_string(info) + ")");

  FdLevels out;
  for (int k = 0; k < count; ++k) {
    const double* v = z.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(cells);
    double r2 = 0.0;
    for (int i = 0; i < cells; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      double tv = d0[ui] * v[i];
      if (i > 0) tv += e0[ui - 1] * v[i - 1];
      if (i < cells - 1) tv += e0[ui] * v[i + 1];
      r2 += (tv - w[static_cast<std::size_t>(k)] * v[i]) * (tv - w[static_cast<std::size_t>(k)] * v[i]);
    }
    out.E.push_back(w[static_cast<std::size_t>(k)]);
    out.residual.push_back(std::sqrt(r2));
  }
  return out;
}

OracleResult solve_fd(const Reduced& prob, int count, const OracleConfig& cfg) {
  const int n = cfg.gridPoints;
  const FdLevels coarse = fd_levels(prob, n / 4, cfg.boundaryOffset, count);
  const FdLevels mid = fd_levels(prob, n / 2, cfg.boundaryOffset, count);
  const FdLevels fine = fd_levels(prob, n, cfg.boundaryOffset, count);
  OracleResult out;
  out.method = OracleMethod::FINITE_DIFFERENCE;
  for (int k = 0; k < count; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const double r_lo = (4.0 * mid.E[uk] - coarse.E[uk]) / 3.0;
    const double r_hi = (4.0 * fine.E[uk] - mid.E[uk]) / 3.0;
    out.E.push_back(r_hi);
    out.convergenceEstimate.push_back(std::abs(r_hi - r_lo));
    out.residualNorms.push_back(fine.residual[uk]);
    out.convergenceOrder.push_back(std::log2(std::abs(coarse.E[uk] - mid.E[uk]) / std::abs(mid.E[uk] - fine.E[uk])));
  }
  return out;
}

// ---- shooting ---------------------------------------------------------------

using State = std::array<double, 2>;

struct Shot {
  double u;
  double du;
};

Shot shoot(const Reduced& prob, double E, double eps, bool from_left, double tol) {
  namespace odeint = boost::numeric::odeint;
  const double start = from_left ? eps : kPi - eps;
  const double expo = from_left ? prob.a : prob.b;
  const double slope = (prob.q(start) - E) * eps / (2.0 * expo + 1.0);
  State x{1.0, from_left ? slope : -slope};
  auto rhs = [&prob, E](const State& s, State& ds, double t) {
    ds[0] = s[1];
    ds[1] = -prob.dlog_p(t) * s[1] + (prob.q(t) - E) * s[0];
  };
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
  const double stop = 0.5 * kPi;
  const double dt = from_left ? 1e-3 : -1e-3;
  odeint::integrate_adaptive(stepper, rhs, x, start, stop, dt);
  return Shot{x[0], x[1]};
}

struct Mismatch {
  double value;
  double scale;
};

Mismatch wronskian(const Reduced& prob, double E, double eps, double tol) {
  const Shot l = shoot(prob, E, eps, true, tol);
  const Shot r = shoot(prob, E, eps, false, tol);
  const double value = l.du * r.u - l.u * r.du;
  const double scale = std::hypot(l.u, l.du) * std::hypot(r.u, r.du);
  return Mismatch{value / scale, scale};
}

double refine(const Reduced& prob, double lo, double hi, double eps, double tol) {
  auto f = [&](double E) { return wronskian(prob, E, eps, tol).value; };
  std::uintmax_t iters = 200;
  const auto [x0, x1] =
      boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (x0 + x1);
}

OracleResult solve_shooting(const Reduced& prob, int count, const OracleConfig& cfg) {
  const double eps = cfg.boundaryOffset;
  const double tight = 1e-12;
  const double loose = 1e-10;
  const double step = 0.1;
  const double lower = prob.min_q() - 1.0;
  const double ceiling = lower + 40.0 + 4.0 * count * (count + prob.m) + 4.0 * std::abs(prob.beta) * (1.0 + std::abs(prob.beta));

  OracleResult out;
  out.method = OracleMethod::SHOOTING;
  double x_prev = lower;
  double f_prev = wronskian(prob, x_prev, eps, loose).value;
  while (static_cast<int>(out.E.size()) < count) {
    const double x = x_prev + step;
    if (x > ceiling) throw NoConvergence("shooting: fewer than " + std::to_string(count) + " levels below " + std::to_string(ceiling));
    const double f = wronskian(prob, x, eps, loose).value;
    if (f == 0.0 || (f_prev < 0) != (f < 0)) {
      const double e_tight = refine(prob, x_prev, x, eps, tight);
      double e_loose = e_tight;
      try {
        e_loose = refine(prob, x_prev, x, eps, loose);
      } catch (const boost::math::evaluation_error&) {
      }
      out.E.push_back(e_tight);
      out.convergenceEstimate.push_back(std::abs(e_tight - e_loose));
      out.residualNorms.push_back(std::abs(wronskian(prob, e_tight, eps, tight).value));
    }
    x_prev = x;
    f_prev = f;
  }
  return out;
}

}  // namespace

std::string_view to_string(OracleMethod method) {
  return method == OracleMethod::SHOOTING ? "shooting" : "finite-difference";
}

void OracleConfig::validate() const {
  if (gridPoints < 200) throw ValidationError("gridPoints must be at least 200");
  if (!(boundaryOffset > 0.0 && boundaryOffset < 1e-3)) throw ValidationError("boundary offset must lie in (0, 1e-3)");
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  if (maxLevels < 1) throw ValidationError("maxLevels must be positive");
}

double potential_eval(double theta, const Rational& m, double beta) {
  if (!(theta > 0.0 && theta < kPi)) throw DomainError("potential_eval needs theta in (0, pi)");
  const double md = m.to_double();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return -(0.25 + kS + beta * beta * c * c - 2.0 * kS * beta * c - ((md + kS * c) * (md + kS * c) - 0.25) / (s * s));
}

std::pair<Rational, Rational> indicial_exponents(const Rational& m) {
  return {Rational(1, 2) + abs_value(m + Rational(3, 2)), Rational(1, 2) + abs_value(m - Rational(3, 2))};
}

OracleResult eigen_solve(const Rational& m, double beta, int count, const OracleConfig& config) {
  config.validate();
  if (count < 1 || count > config.maxLevels) throw ValidationError("level count outside 1..maxLevels");
  const Reduced prob = make_reduced(m, beta);
  OracleResult out = config.method == OracleMethod::SHOOTING ? solve_shooting(prob, count, config)
                                                             : solve_fd(prob, count, config);
  for (std::size_t k = 0; k < out.E.size(); ++k) {
    if (k > 0 && !(out.E[k] > out.E[k - 1])) throw NoConvergence("eigenvalues not strictly ascending");
    if (out.convergenceEstimate[k] > config.tolerance) {
      throw NoConvergence("level " + std::to_string(k) + " convergence estimate " +
                          std::to_string(out.convergenceEstimate[k]) + " above tolerance");
    }
  }
  out.lambda = out.E;
  return out;
}

}  // namespace susy
