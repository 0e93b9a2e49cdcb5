#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "susy/rational.hpp"

namespace susy {

/// Exact trigonometric polynomial
///
///   T(theta) = sum_k p_k sin^k(theta) + cos(theta) * sum_k q_k sin^k(theta)
///
/// kept canonical: cos appears at most linearly (cos^2 -> 1 - sin^2) and no
/// zero coefficient is stored, so equality of representations is equality of
/// functions on (0, pi). Exponents are usually >= 0 ("regular"); negative
/// exponents are allowed for the Laurent algebra used by wavefunctions.
class TrigPoly {
 public:
  using Terms = std::map<int, Rational>;

  TrigPoly() = default;

  static TrigPoly constant(const Rational& c);
  /// c * sin^k
  static TrigPoly sin_pow(int k, const Rational& c = Rational(1));
  /// c * cos * sin^k
  static TrigPoly cos_sin_pow(int k, const Rational& c = Rational(1));
  /// cos^j reduced to canonical form.
  static TrigPoly cos_pow(int j);

  /// Inverse of str(); accepts exactly the canonical rendering.
  static TrigPoly parse(std::string_view text);

  const Terms& even_part() const { return even_; }
  const Terms& cos_part() const { return cos_; }
  Rational even_coeff(int k) const;
  Rational cos_coeff(int k) const;

  bool is_zero() const { return even_.empty() && cos_.empty(); }
  bool is_constant() const;
  /// Constant term p_0.
  Rational constant_term() const { return even_coeff(0); }
  bool is_regular() const;
  int min_exponent() const;
  int max_exponent() const;
  std::size_t term_count() const { return even_.size() + cos_.size(); }

  TrigPoly operator-() const;
  TrigPoly& operator+=(const TrigPoly& rhs);
  TrigPoly& operator-=(const TrigPoly& rhs);
  TrigPoly& operator*=(const Rational& c);

  friend TrigPoly operator+(TrigPoly lhs, const TrigPoly& rhs) { return lhs += rhs; }
  friend TrigPoly operator-(TrigPoly lhs, const TrigPoly& rhs) { return lhs -= rhs; }
  friend TrigPoly operator*(TrigPoly lhs, const Rational& c) { return lhs *= c; }
  friend TrigPoly operator*(const Rational& c, TrigPoly rhs) { return rhs *= c; }
  friend TrigPoly operator*(const TrigPoly& lhs, const TrigPoly& rhs);
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

  /// d/dtheta, using (sin^k)' = k cos sin^{k-1} and
  /// (cos sin^k)' = k sin^{k-1} - (k+1) sin^{k+1}.
  TrigPoly derivative() const;
  /// Exact division by sin; throws DivisionNotExact on a sin^0 monomial.
  TrigPoly div_sin() const;
  /// Multiplication by sin^j, j of either sign.
  TrigPoly shift_sin(int j) const;

  double eval(double theta) const;

  /// Canonical text, e.g. "(-3/5)*s^1 + (8/75)*c*s^1"; ordered by sine
  /// exponent, even part before cos part at equal exponent. Zero is "0".
  std::string str() const;

 private:
  static void accumulate(Terms& terms, int k, const Rational& c);

  Terms even_;
  Terms cos_;
};

/// c1 / sin^2 + c2 cos / sin^2 + T(theta) with T regular: the closed form of
/// the potential and of the partner potentials W^2 +- W'.
class SingularTrig {
 public:
  SingularTrig() = default;
  SingularTrig(Rational csc2, Rational cotcsc, TrigPoly regular);

  /// Accepts a Laurent TrigPoly whose only negative exponent is -2; anything
  /// else throws SingularOrderExceeded.
  static SingularTrig from_laurent(const TrigPoly& laurent);
  TrigPoly to_laurent() const;

  const Rational& csc2() const { return csc2_; }
  const Rational& cotcsc() const { return cotcsc_; }
  const TrigPoly& regular() const { return regular_; }

  bool is_zero() const { return csc2_.is_zero() && cotcsc_.is_zero() && regular_.is_zero(); }
  /// True when every non-constant component vanishes.
  bool is_constant() const;
  Rational constant_term() const { return regular_.constant_term(); }
  /// This value with its constant term removed.
  SingularTrig nonconstant_part() const;

  friend SingularTrig operator+(const SingularTrig& lhs, const SingularTrig& rhs);
  friend SingularTrig operator-(const SingularTrig& lhs, const SingularTrig& rhs);
  friend SingularTrig operator*(const SingularTrig& lhs, const SingularTrig& rhs);
  friend bool operator==(const SingularTrig&, const SingularTrig&) = default;

  double eval(double theta) const;
  std::string str() const;

 private:
  Rational csc2_;
  Rational cotcsc_;
  TrigPoly regular_;
};

}  // namespace susy
