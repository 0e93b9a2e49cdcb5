#include <doctest.h>

#include "susy/errors.hpp"
#include "susy/ladder.hpp"
#include "susy/oracle.hpp"
#include "susy/published.hpp"
#include "susy/series.hpp"

using namespace susy;

namespace {

Series series(const Rational& m, int N) { return build_series(ModelParams{m, N}); }

}  // namespace

TEST_SUITE("ladder") {
  TEST_CASE("alpha") {
    CHECK(alpha(1, Rational(3, 2), Rational(3, 2)) == Rational(7));
    CHECK(alpha(1, Rational(1), Rational(3, 2)) == Rational(5));
    CHECK(alpha(2, Rational(1), Rational(3, 2)) - alpha(1, Rational(1), Rational(3, 2)) == Rational(2));
  }

  TEST_CASE("initial step at the physical start") {
    const LadderParams p = LadderParams::physical(series(Rational(3, 2), 4).w);
    const InitialStep s = step_init(p);
    CHECK(s.C00 == Rational(3, 2));
    CHECK(s.D00 == Rational(1));
    CHECK(s.R0 == Rational(5));
    CHECK(s.D11 == Rational(-9, 35));
    CHECK(s.R1 == Rational(36, 35));
    CHECK(s.C21 == Rational(233, 3675));
    CHECK(s.D21 == Rational(-381, 42875));
    CHECK(s.R2 == Rational(37192, 128625));
  }

  TEST_CASE("displayed forms with unit coefficients") {
    const auto d = published::ladder(Rational(3, 2), 1, 1, 1, 1, 1);
    CHECK(d.C00 == Rational(3, 2));
    CHECK(d.R0 == Rational(5));
    CHECK(d.D11 == Rational(3, 7));
    CHECK(d.R1 == Rational(-12, 7));
  }

  TEST_CASE("general step agrees with the initial closed forms") {
    const LadderParams p = LadderParams::physical(series(Rational(3, 2), 4).w);
    const InitialStep init = step_init(p);
    const LadderStep step = ladder_step(p);
    CHECK(step.C00 == init.C00);
    CHECK(step.dbar[1][0] == init.D11);
    CHECK(step.cbar[2][0] == init.C21);
    CHECK(step.dbar[2][0] == init.D21);
    CHECK(step.R[0] == init.R0);
    CHECK(step.R[1] == init.R1);
    CHECK(step.R[2] == init.R2);
    CHECK(step.R[3] == Rational(4875872, 52521875));
    for (int n = 0; n <= 4; ++n) CHECK(remainder_extract(p, step.as_params(p.m), n) == step.R[static_cast<std::size_t>(n)]);
  }

  TEST_CASE("remainder extraction rejects a mismatched partner") {
    const LadderParams p = LadderParams::physical(series(Rational(3, 2), 2).w);
    CHECK(remainder_extract(p, ladder_step(p).as_params(p.m), 0) == Rational(5));
    LadderParams wrong = p;
    CHECK_THROWS_AS(remainder_extract(p, wrong, 0), ShapeInvarianceBroken);
  }

  TEST_CASE("beta = 0 closure along the chain") {
    const Series s = series(Rational(3, 2), 4);
    const auto chain = ladder_chain(s.w, 4);
    Rational C00(1);
    for (std::size_t l = 0; l < chain.size(); ++l) {
      C00 += Rational(2, 4);
      CHECK(chain[l].C00 == C00);
      CHECK(chain[l].R[0] == 2 * (Rational(3, 2) + static_cast<long>(l)) + 2);
    }
    CHECK(excited_energies_exact(s, Rational(0), 2) == std::vector<Rational>{0, 5, 12});
    const Series s5 = series(Rational(5, 2), 4);
    CHECK(excited_energies_exact(s5, Rational(0), 1) == std::vector<Rational>{5, 12});
  }

  TEST_CASE("excited levels") {
    const Series s = series(Rational(3, 2), 4);
    const ExcitedSpectrum sp = excited_energies(s, 0.1, 2);
    REQUIRE(sp.levels.size() == 3);
    CHECK(sp.levels[0] == doctest::Approx(energy_sum(s.e, 0.1)).epsilon(1e-15));
    CHECK(sp.levels[1] == doctest::Approx(4.9191839253).epsilon(1e-8));
    CHECK(sp.levels[2] == doctest::Approx(11.9534447524).epsilon(1e-8));
    CHECK(excited_energies(s, 0.1, 0).levels == std::vector<double>{energy_sum(s.e, 0.1)});
  }

  TEST_CASE("level spacing follows R1 against the oracle") {
    const Series s = series(Rational(3, 2), 4);
    const ExcitedSpectrum sp = excited_energies(s, 0.05, 1);
    const OracleResult o = eigen_solve(Rational(3, 2), 0.05, 2);
    CHECK(std::abs((sp.levels[1] - sp.levels[0]) - (o.E[1] - o.E[0])) < 1e-6);
    CHECK(sp.levels[1] - sp.levels[0] > 5.0);
  }

  TEST_CASE("ratio tables") {
    const Series s = series(Rational(3, 2), 4);
    const LadderParams p = LadderParams::physical(s.w);
    for (const auto& row : p.b_ratios(s.w)) {
      for (const Rational& r : row) CHECK(r == Rational(1));
    }
    LadderParams q = p;
    q.bbar[1][0] = Rational(0);
    Series zero = s;
    zero.w.b[1][0] = Rational(0);
    CHECK_NOTHROW(q.b_ratios(zero.w));
    CHECK_THROWS_AS(p.b_ratios(zero.w), DenominatorVanishes);
  }
}
