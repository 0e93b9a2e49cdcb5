#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "susy/errors.hpp"
#include "susy/ladder.hpp"
#include "susy/oracle.hpp"
#include "susy/series.hpp"
#include "susy/wavefunction.hpp"

using namespace susy;

namespace {

constexpr double kPi = std::numbers::pi;

double overlap(const ClosedFormFunction& f, const ClosedFormFunction& g) {
  auto integrand = [&](double t) { return f.eval(t) * g.eval(t); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, kPi, 15, 1e-13);
}

}  // namespace

TEST_SUITE("wavefunction") {
  TEST_CASE("beta = 0 ground state closed form") {
    const Series s = build_series(ModelParams{Rational(3, 2), 4});
    const GroundState g(s.w, Rational(0));
    const double ratio = g.theta_fn(1.0) / std::pow(1 - std::cos(1.0), 1.5);
    for (double t : {0.3, 0.9, 1.7, 2.5, 3.0}) {
      CHECK(g.theta_fn(t) / std::pow(1 - std::cos(t), 1.5) == doctest::Approx(ratio).epsilon(1e-12));
    }
    auto weight = [&](double t) { return g.theta_fn(t) * g.theta_fn(t) * std::sin(t); };
    CHECK(boost::math::quadrature::gauss_kronrod<double, 61>::integrate(weight, 0.0, kPi, 15, 1e-13) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(ground_psi(s.w, 0.0, Rational(0)), DomainError);
    CHECK_THROWS_AS(ground_theta(s.w, kPi, Rational(0)), DomainError);
  }

  TEST_CASE("indicial behaviour at the ends") {
    const Series s = build_series(ModelParams{Rational(3, 2), 4});
    const GroundState g(s.w, Rational(0));
    const double slope0 = (std::log(g.psi(1e-4)) - std::log(g.psi(1e-3))) / (std::log(1e-4) - std::log(1e-3));
    const double slope_pi =
        (std::log(g.psi(kPi - 1e-4)) - std::log(g.psi(kPi - 1e-3))) / (std::log(1e-4) - std::log(1e-3));
    CHECK(slope0 == doctest::Approx(3.5).epsilon(0.01));
    CHECK(slope_pi == doctest::Approx(0.5).epsilon(0.01));
  }

  TEST_CASE("excited states") {
    const Series s = build_series(ModelParams{Rational(3, 2), 4});
    const Rational beta(0);
    const GroundState g(s.w, beta);
    for (double t : {0.4, 1.2, 2.8}) CHECK(excited_wavefunction(s.w, 0, t, beta) == doctest::Approx(g.psi(t)).epsilon(1e-12));
    const ClosedFormFunction psi0 = excited_function(s.w, 0, beta);
    const ClosedFormFunction psi1 = excited_function(s.w, 1, beta);
    const ClosedFormFunction psi2 = excited_function(s.w, 2, beta);
    CHECK(std::abs(overlap(psi0, psi1)) < 1e-8);
    CHECK(std::abs(overlap(psi0, psi2)) < 1e-8);
    CHECK(std::abs(overlap(psi1, psi2)) < 1e-8);
    CHECK(rayleigh_quotient(psi1, Rational(3, 2), beta) == doctest::Approx(5.0).epsilon(1e-6));
    CHECK(rayleigh_quotient(psi2, Rational(3, 2), beta) == doctest::Approx(12.0).epsilon(1e-6));
  }

  TEST_CASE("series ground state solves the equation at small beta") {
    const Series s = build_series(ModelParams{Rational(3, 2), 6});
    const Rational beta(1, 20);
    const ClosedFormFunction f = GroundState(s.w, beta).function();
    const double E = energy_sum(s.e, 0.05);
    for (int i = 1; i <= 20; ++i) CHECK(std::abs(schroedinger_residual(f, Rational(3, 2), beta, E, kPi * i / 21)) < 1e-8);
    const double rq = rayleigh_quotient(f, Rational(3, 2), beta);
    CHECK(rq >= eigen_solve(Rational(3, 2), 0.05, 1).E[0] - 1e-8);
  }

  TEST_CASE("potential") {
    CHECK(potential_value(Rational(3, 2), Rational(0), kPi / 2) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(potential_value(Rational(3, 2), Rational(1, 10), 0.7) ==
          doctest::Approx(potential_eval(0.7, Rational(3, 2), 0.1)).epsilon(1e-13));
  }

  TEST_CASE("raising operator intertwines the partner Hamiltonians") {
    const Series s = build_series(ModelParams{Rational(3, 2), 4});
    const LadderParams a1 = LadderParams::physical(s.w);
    const LadderParams a2 = ladder_step(a1).as_params(a1.m);
    const Rational R0 = ladder_step(a1).R[0];
    const Rational beta(0);
    const ClosedFormFunction psi = ground_function(a2, beta);
    const ClosedFormFunction up = apply_raising(a1, beta, psi);
    const TrigPoly v1 = a1.partner(0, -1);
    const TrigPoly v2 = a2.partner(0, -1);
    const ClosedFormFunction psi_dd = psi.derivative().derivative();
    const ClosedFormFunction up_dd = up.derivative().derivative();
    for (int i = 1; i <= 20; ++i) {
      const double t = kPi * i / 21;
      const double h2_psi = -psi_dd.eval(t) + v2.eval(t) * psi.eval(t);
      CHECK(std::abs(h2_psi) <= 1e-6 * (1 + std::abs(psi.eval(t))));
      const double lhs = -up_dd.eval(t) + v1.eval(t) * up.eval(t);
      const double rhs = R0.to_double() * up.eval(t);
      CHECK(std::abs(lhs - rhs) <= 1e-6 * (1 + std::abs(rhs)));
    }
  }
}
