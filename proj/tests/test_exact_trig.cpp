#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "susy/errors.hpp"
#include "susy/linear_solve.hpp"
#include "susy/rational.hpp"
#include "susy/trig_poly.hpp"

using namespace susy;

namespace {

const TrigPoly s = TrigPoly::sin_pow(1);
const TrigPoly c = TrigPoly::cos_sin_pow(0);

TrigPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-10, 10);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> expo(0, 5);
  std::uniform_int_distribution<int> count(0, 4);
  TrigPoly p;
  for (int i = count(rng); i > 0; --i) p += TrigPoly::sin_pow(expo(rng), Rational(coef(rng), den(rng)));
  for (int i = count(rng); i > 0; --i) p += TrigPoly::cos_sin_pow(expo(rng), Rational(coef(rng), den(rng)));
  return p;
}

}  // namespace

TEST_SUITE("exact_trig") {
  TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("2.5") == Rational(5, 2));
    CHECK(Rational::parse("-0.05") == Rational(-1, 20));
    CHECK(Rational::parse("1.5e-3") == Rational(3, 2000));
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational::parse("abc"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  }

  TEST_CASE("addition") {
    CHECK((s + (-s)).is_zero());
    CHECK(c + c == TrigPoly::cos_sin_pow(0, 2));
    CHECK(TrigPoly::constant(1) - TrigPoly::sin_pow(2) + TrigPoly::sin_pow(2) == TrigPoly::constant(1));
  }

  TEST_CASE("multiplication reduces cos^2") {
    CHECK(c * c == TrigPoly::constant(1) - TrigPoly::sin_pow(2));
    CHECK(c * TrigPoly::cos_sin_pow(1) == s - TrigPoly::sin_pow(3));
    const TrigPoly w1 = TrigPoly::sin_pow(1, Rational(-3, 5));
    CHECK(w1 * w1 == TrigPoly::sin_pow(2, Rational(9, 25)));
    CHECK(TrigPoly::cos_pow(3) == TrigPoly::cos_sin_pow(0) - TrigPoly::cos_sin_pow(2));
  }

  TEST_CASE("derivative") {
    CHECK(s.derivative() == c);
    CHECK(TrigPoly::sin_pow(2).derivative() == TrigPoly::cos_sin_pow(1, 2));
    CHECK(TrigPoly::cos_sin_pow(1).derivative() == TrigPoly::constant(1) - TrigPoly::sin_pow(2, 2));
  }

  TEST_CASE("evaluation") {
    CHECK(c.eval(std::numbers::pi / 2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK((TrigPoly::constant(1) - TrigPoly::sin_pow(2)).eval(std::numbers::pi / 2) == doctest::Approx(0.0));
    CHECK(TrigPoly::sin_pow(3).eval(std::numbers::pi / 6) == doctest::Approx(0.125).epsilon(1e-15));
  }

  TEST_CASE("division by sin") {
    CHECK(s.div_sin() == TrigPoly::constant(1));
    CHECK(TrigPoly::cos_sin_pow(3).div_sin() == TrigPoly::cos_sin_pow(2));
    CHECK_THROWS_AS(TrigPoly::constant(1).div_sin(), DivisionNotExact);
    CHECK_THROWS_AS(c.div_sin(), DivisionNotExact);
  }

  TEST_CASE("canonical rendering and parse round trip") {
    const TrigPoly w = TrigPoly::sin_pow(1, Rational(-3, 5)) + TrigPoly::cos_sin_pow(1, Rational(8, 75));
    CHECK(w.str() == "(-3/5)*s^1 + (8/75)*c*s^1");
    CHECK(TrigPoly().str() == "0");
    CHECK(TrigPoly::parse(w.str()) == w);
  }

  TEST_CASE("ring laws on random instances") {
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 200; ++trial) {
      const TrigPoly x = random_poly(rng);
      const TrigPoly y = random_poly(rng);
      const TrigPoly z = random_poly(rng);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(TrigPoly::parse(x.str()) == x);
      CHECK((x * y).cos_part().size() <= (x * y).term_count());
    }
  }

  TEST_CASE("derivative against centred differences") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> angle(0.1, std::numbers::pi - 0.1);
    for (int trial = 0; trial < 200; ++trial) {
      const TrigPoly x = random_poly(rng);
      const double t = angle(rng);
      const double h = 1e-6;
      const double fd = (x.eval(t + h) - x.eval(t - h)) / (2 * h);
      const double exact = x.derivative().eval(t);
      CHECK(std::abs(exact - fd) <= 1e-6 * (1 + std::abs(exact)));
    }
  }

  TEST_CASE("singular form algebra") {
    const TrigPoly laurent = TrigPoly::sin_pow(-2, 3) + TrigPoly::cos_sin_pow(-2, 2) + TrigPoly::sin_pow(2);
    const SingularTrig st = SingularTrig::from_laurent(laurent);
    CHECK(st.csc2() == Rational(3));
    CHECK(st.cotcsc() == Rational(2));
    CHECK(st.to_laurent() == laurent);
    CHECK_THROWS_AS(SingularTrig::from_laurent(TrigPoly::sin_pow(-1)), SingularOrderExceeded);
    CHECK_THROWS_AS(st * st, SingularOrderExceeded);
    CHECK(st.eval(1.0) == doctest::Approx(laurent.eval(1.0)));
  }

  TEST_CASE("exact linear solve") {
    const LinearSolution u = solve_exact({{2, 1}, {1, 3}}, {Rational(3), Rational(5)});
    REQUIRE(u.status == SolveStatus::unique);
    CHECK(u.x[0] == Rational(4, 5));
    CHECK(u.x[1] == Rational(7, 5));
    CHECK(solve_exact({{1, 1}, {2, 2}}, {Rational(1), Rational(2)}).status == SolveStatus::rank_deficient);
    CHECK(solve_exact({{1, 1}, {2, 2}}, {Rational(1), Rational(3)}).status == SolveStatus::inconsistent);
  }
}
