#include <doctest.h>

#include "susy/errors.hpp"
#include "susy/series.hpp"

using namespace susy;

namespace {

Series series(const Rational& m, int N) { return build_series(ModelParams{m, N, Mode::physical}); }

void validate(const Rational& m, int N, Mode mode) { ModelParams{m, N, mode}.validate(); }

Rational E00(const Rational& m) { return order_zero(ModelParams{m, 0, Mode::physical}).E00; }

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("model parameter validation") {
    CHECK_NOTHROW(validate(Rational(3, 2), 4, Mode::physical));
    CHECK_THROWS_AS(validate(Rational(1, 2), 4, Mode::physical), ValidationError);
    CHECK_THROWS_AS(validate(Rational(2), 4, Mode::physical), ValidationError);
    CHECK_NOTHROW(validate(Rational(1, 2), 4, Mode::formal));
    CHECK_THROWS_AS(validate(Rational(-3, 2), 4, Mode::formal), DenominatorVanishes);
  }

  TEST_CASE("order zero") {
    CHECK(E00(Rational(3, 2)) == Rational(0));
    CHECK(E00(Rational(5, 2)) == Rational(5));
  }

  TEST_CASE("source terms") {
    CHECK(source_term(1) == TrigPoly::cos_sin_pow(0, -3));
    CHECK(source_term(2) == TrigPoly::constant(1) - TrigPoly::sin_pow(2));
    CHECK(source_term(5).is_zero());
  }

  TEST_CASE("ODE route at m = 3/2") {
    const Series s = series(Rational(3, 2), 8);
    CHECK(s.w.b_at(1, 1) == Rational(-3, 5));
    CHECK(s.e.E0[1] == Rational(-9, 5));
    CHECK(s.w.b_at(2, 1) == Rational(-8, 125));
    CHECK(s.w.a_at(2, 1) == Rational(8, 75));
    CHECK(s.e.E0[2] == Rational(-247, 375));
    CHECK(s.e.E0[3] == Rational(-1536, 21875));
    CHECK(s.e.E0[4] == Rational(-2816, 2953125));
    CHECK(s.w.b_at(4, 2) == Rational(52, 21875));
    CHECK(s.w.term(1).str() == "(-3/5)*s^1");
    CHECK(s.w.term(2).str() == "(-8/125)*s^1 + (8/75)*c*s^1");
    CHECK(s.e.E0[8] == Rational(-5217046583296LL, 251817352294921875LL));
  }

  TEST_CASE("ODE route at m = 5/2") {
    const Series s = series(Rational(5, 2), 4);
    CHECK(s.e.E0[0] == Rational(5));
    CHECK(s.e.E0[1] == Rational(-9, 7));
    CHECK(s.e.E0[2] == Rational(-143, 343));
    CHECK(s.e.E0[3] == Rational(-800, 16807));
    CHECK(s.e.E0[4] == Rational(-4820, 823543));
  }

  TEST_CASE("convolution rows") {
    const Series s = series(Rational(3, 2), 3);
    CHECK(s.tables[2].g_at(1).is_zero());
    CHECK(s.tables[2].h_at(2) == Rational(9, 25));
    CHECK(s.tables[3].g_at(2) == Rational(-16, 125));
  }

  TEST_CASE("recurrence route and convention") {
    for (const Rational& m : {Rational(3, 2), Rational(5, 2), Rational(7, 2), Rational(9, 2)}) {
      const Series s = series(m, 8);
      for (int n = 3; n <= 8; ++n) {
        const OrderSolution xi = recurrence_coeffs(m, s.tables[static_cast<std::size_t>(n)], GTermConvention::XI);
        CHECK(xi.E == s.e.E0[static_cast<std::size_t>(n)]);
        for (std::size_t k = 0; k < xi.b.size(); ++k) CHECK(xi.b[k] == s.w.b_at(n, static_cast<int>(k + 1)));
        for (std::size_t k = 0; k < xi.a.size(); ++k) CHECK(xi.a[k] == s.w.a_at(n, static_cast<int>(k + 1)));
        const OrderSolution delta = recurrence_coeffs(m, s.tables[static_cast<std::size_t>(n)], GTermConvention::DELTA);
        CHECK(delta.b[1] != s.w.b_at(n, 2));
        CHECK(divergence_coefficient(m, s.tables[static_cast<std::size_t>(n)], s.e.E0[static_cast<std::size_t>(n)]).is_zero());
      }
    }
  }

  TEST_CASE("vanishing pattern with extra columns") {
    const Series s = series(Rational(3, 2), 5);
    Series partial = s;
    partial.w.a.resize(5);
    partial.w.b.resize(5);
    const OrderSolution r = solve_order(partial.w, 5, SolveOptions{2});
    REQUIRE(r.a.size() >= 4);
    REQUIRE(r.b.size() >= 5);
    CHECK(r.a[2].is_zero());
    CHECK(r.a[3].is_zero());
    CHECK(r.b[3].is_zero());
    CHECK(r.b[4].is_zero());
    CHECK(r.E == s.e.E0[5]);
  }

  TEST_CASE("Riccati residual vanishes") {
    for (const Rational& m : {Rational(3, 2), Rational(5, 2)}) {
      const Series s = series(m, 8);
      for (const SingularTrig& r : riccati_residual(s.w, s.e, 8)) CHECK(r.is_zero());
    }
  }

  TEST_CASE("energy partial sums") {
    CHECK(energy_sum(series(Rational(3, 2), 6).e, 0.0) == 0.0);
    CHECK(energy_sum(series(Rational(3, 2), 1).e, 0.1) == doctest::Approx(-0.18).epsilon(1e-14));
    CHECK(energy_sum(series(Rational(3, 2), 4).e, 0.1) == doctest::Approx(-0.186656979166).epsilon(1e-11));
  }
}
