#include <doctest.h>

#include "susy/errors.hpp"
#include "susy/integrals.hpp"
#include "susy/series.hpp"

using namespace susy;

TEST_SUITE("integrals") {
  TEST_CASE("ibar") {
    CHECK(ibar(Rational(3), 0) == Rational(4, 3));
    CHECK(ibar(Rational(6), 1) == Rational(35, 24));
    CHECK_THROWS_AS(ibar(Rational(2), 1), DenominatorVanishes);
  }

  TEST_CASE("even sine powers") {
    const SinPowerIntegral p2 = p_even(2);
    CHECK(p2.trig == TrigPoly::cos_sin_pow(1, Rational(-1, 2)));
    CHECK(p2.theta_coeff == Rational(1, 2));
    const SinPowerIntegral p4 = p_even(4);
    CHECK(p4.trig == TrigPoly::cos_sin_pow(3, Rational(-1, 4)) + TrigPoly::cos_sin_pow(1, Rational(-3, 8)));
    CHECK(p4.theta_coeff == Rational(3, 8));
    for (int mu = 2; mu <= 12; mu += 2) {
      const SinPowerIntegral p = p_even(mu);
      CHECK(p.trig.derivative() + TrigPoly::constant(p.theta_coeff) == TrigPoly::sin_pow(mu));
    }
  }

  TEST_CASE("odd sine powers") {
    CHECK(odd_sin_antideriv(1) == TrigPoly::cos_sin_pow(0, -1));
    CHECK(odd_sin_antideriv(2) == TrigPoly::cos_pow(1) * Rational(-1) + TrigPoly::cos_pow(3) * Rational(1, 3));
    CHECK(odd_sin_antideriv(3) == TrigPoly::cos_pow(1) * Rational(-1) + TrigPoly::cos_pow(3) * Rational(2, 3) +
                                      TrigPoly::cos_pow(5) * Rational(-1, 5));
    for (int k = 1; k <= 6; ++k) CHECK(odd_sin_antideriv(k).derivative() == TrigPoly::sin_pow(2 * k - 1));
  }

  TEST_CASE("reduction identity") {
    const Reduction r = reduction_formula(2, 2);
    CHECK(r.base_coeff == Rational(3, 7) * ibar(Rational(6), 1));
    for (int m = 2; m <= 5; ++m) {
      for (int n = 1; n <= 4; ++n) CHECK(reduction_verified(m, n));
    }
  }

  TEST_CASE("integration route reproduces the ODE route") {
    for (const Rational& m : {Rational(3, 2), Rational(5, 2)}) {
      const Series s = build_series(ModelParams{m, 5});
      for (int n = 1; n <= 5; ++n) {
        TrigPoly conv;
        for (int k = 1; k < n; ++k) conv += s.w.term(k) * s.w.term(n - k);
        const IntegrationRoute r = integrate_order(m, source_term(n) + conv);
        CHECK(r.E == s.e.E0[static_cast<std::size_t>(n)]);
        CHECK(r.W == s.w.term(n));
      }
    }
  }
}
