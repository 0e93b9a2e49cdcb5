#pragma once

#include <optional>

#include "susy/rational.hpp"

namespace susy {

/// Printed closed forms of the first four orders, as functions of m.
/// Kept verbatim (including the known misprints) so conformance checks can
/// report where the computed series departs from them.
namespace published {

/// E_{0,n;m} for n = 1..4.
Rational energy(const Rational& m, int n);

/// Printed a/b coefficients; nullopt when the list has no entry. The order-1
/// entry (labelled a_{1,1} in print) is returned as b(1,1).
std::optional<Rational> a(const Rational& m, int n, int k);
std::optional<Rational> b(const Rational& m, int n, int k);

/// Displayed ladder initial values, with B_{n,j}/A_{n,j} in the displays
/// taken as the scaled coefficients b̄, ā passed in.
struct LadderDisplays {
  Rational C00, D00, D11, D21, C21, R0, R1, R2;
};
LadderDisplays ladder(const Rational& m, const Rational& A00, const Rational& B00, const Rational& b11,
                      const Rational& b21, const Rational& a21);

}  // namespace published
}  // namespace susy
