#include "susy/published.hpp"

#include "susy/errors.hpp"

namespace susy::published {

namespace {

Rational quintic(const Rational& m) {
  return 16 * pow(m, 5) + 672 * pow(m, 4) + 3320 * pow(m, 3) + 2416 * m * m - 6975 * m - 7942;
}

Rational cubic4(const Rational& m) { return 4 * pow(m, 3) + 16 * m * m + 25 * m + 64; }

}  // namespace

Rational energy(const Rational& m, int n) {
  const Rational x = 2 * m;
  switch (n) {
    case 1: return Rational(-9) / (x + 2);
    case 2: return -(8 * pow(m, 3) + 96 * m * m + 168 * m - 1) / (pow(x + 2, 3) * (x + 3));
    case 3: return -36 * pow(x - 1, 2) * pow(x + 5, 2) / (pow(x + 2, 5) * (x + 3) * (x + 4));
    case 4:
      return -4 * pow(x - 1, 2) * (x + 5) * quintic(m) / (pow(x + 2, 7) * pow(x + 4, 2) * pow(x + 3, 3));
    default: throw ValidationError("printed energies cover n = 1..4");
  }
}

std::optional<Rational> a(const Rational& m, int n, int k) {
  const Rational x = 2 * m;
  if (n == 2 && k == 1) return (x - 1) * (x + 5) / (pow(x + 2, 2) * (x + 3));
  if (n == 3 && k == 1) return -36 * (x - 1) * (x + 5) / (pow(x + 2, 4) * (x + 3) * (x + 4));
  if (n == 4 && k == 1) return 12 * (x - 1) * quintic(m) / (pow(x + 2, 5) * pow(x + 4, 2) * (x + 3));
  if (n == 4 && k == 2) return -4 * (x - 1) * cubic4(m) / (pow(x + 2, 4) * pow(x + 4, 2) * pow(x + 3, 2));
  return std::nullopt;
}

std::optional<Rational> b(const Rational& m, int n, int k) {
  const Rational x = 2 * m;
  if (n == 1 && k == 1) return Rational(-3) / (x + 2);
  if (n == 2 && k == 1) return -3 * (x - 1) * (x + 5) / (pow(x + 2, 3) * (x + 3));
  if (n == 3 && k == 1) return 108 * (x - 1) * (x + 5) / (pow(x + 2, 5) * (x + 3) * (x + 4));
  if (n == 3 && k == 2) return 6 * (x - 1) * (x + 5) / (pow(x + 2, 3) * (x + 3) * (x + 4));
  if (n == 4 && k == 1) return 36 * (x - 1) * quintic(m) / (pow(x + 2, 6) * pow(x + 4, 2) * (x + 3));
  if (n == 4 && k == 2) return -2 * (x - 1) * cubic4(m) / (pow(x + 2, 4) * pow(x + 4, 2) * (x + 3));
  return std::nullopt;
}

LadderDisplays ladder(const Rational& m, const Rational& A00, const Rational& B00, const Rational& b11,
                      const Rational& b21, const Rational& a21) {
  const Rational x = (2 * m + 1) * A00;
  LadderDisplays d;
  d.C00 = A00 + Rational(2) / (2 * m + 1);
  d.D00 = B00;
  d.D11 = (x - 1) / (x + 3) * b11;
  d.D21 = (x - 1) / (x + 3) * b21 + 18 * B00 * b21 / ((x + 3) * (x + 4)) -
          24 * (x + 1) * B00 * b11 * b11 / (pow(x + 3, 3) * (x + 4));
  d.C21 = 8 * (x + 1) * b11 * b11 / (pow(x + 3, 3) * (x + 4)) + (x - 2) / (x + 4) * a21;
  d.R0 = x + 1;
  d.R1 = -12 * B00 * b11 / (x + 3);
  const Rational coef_b = (72 * B00 * B00 - 8 * (x - 1) * (x + 3)) / (pow(x + 3, 3) * (x + 4));
  const Rational coef_a = (54 * B00 * B00 - 2 * (x - 1) * (x + 3)) / ((x + 3) * (x + 4));
  d.R2 = -4 * B00 * b21 / (x + 3) + coef_b * b11 * b11 + coef_a * a21;
  return d;
}

}  // namespace susy::published
