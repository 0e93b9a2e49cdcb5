#include "susy/trig_poly.hpp"

#include <cmath>
#include <sstream>

#include "susy/errors.hpp"

namespace susy {

void TrigPoly::accumulate(Terms& terms, int k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TrigPoly TrigPoly::constant(const Rational& c) { return sin_pow(0, c); }

TrigPoly TrigPoly::sin_pow(int k, const Rational& c) {
  TrigPoly t;
  accumulate(t.even_, k, c);
  return t;
}

TrigPoly TrigPoly::cos_sin_pow(int k, const Rational& c) {
  TrigPoly t;
  accumulate(t.cos_, k, c);
  return t;
}

TrigPoly TrigPoly::cos_pow(int j) {
  if (j < 0) throw DomainError("negative power of cos is not a trig polynomial");
  TrigPoly result = constant(1);
  const TrigPoly c = cos_sin_pow(0);
  for (int i = 0; i < j; ++i) result = result * c;
  return result;
}

Rational TrigPoly::even_coeff(int k) const {
  auto it = even_.find(k);
  return it == even_.end() ? Rational(0) : it->second;
}

Rational TrigPoly::cos_coeff(int k) const {
  auto it = cos_.find(k);
  return it == cos_.end() ? Rational(0) : it->second;
}

bool TrigPoly::is_constant() const {
  return cos_.empty() && (even_.empty() || (even_.size() == 1 && even_.begin()->first == 0));
}

bool TrigPoly::is_regular() const { return is_zero() || min_exponent() >= 0; }

int TrigPoly::min_exponent() const {
  if (is_zero()) throw DomainError("min_exponent of the zero polynomial");
  int lo = even_.empty() ? cos_.begin()->first : even_.begin()->first;
  if (!cos_.empty()) lo = std::min(lo, cos_.begin()->first);
  return lo;
}

int TrigPoly::max_exponent() const {
  if (is_zero()) throw DomainError("max_exponent of the zero polynomial");
  int hi = even_.empty() ? cos_.rbegin()->first : even_.rbegin()->first;
  if (!cos_.empty()) hi = std::max(hi, cos_.rbegin()->first);
  return hi;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly t = *this;
  t *= Rational(-1);
  return t;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& rhs) {
  for (const auto& [k, c] : rhs.even_) accumulate(even_, k, c);
  for (const auto& [k, c] : rhs.cos_) accumulate(cos_, k, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& rhs) {
  for (const auto& [k, c] : rhs.even_) accumulate(even_, k, -c);
  for (const auto& [k, c] : rhs.cos_) accumulate(cos_, k, -c);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    even_.clear();
    cos_.clear();
    return *this;
  }
  for (auto& [k, v] : even_) v *= c;
  for (auto& [k, v] : cos_) v *= c;
  return *this;
}

TrigPoly operator*(const TrigPoly& lhs, const TrigPoly& rhs) {
  TrigPoly out;
  for (const auto& [i, x] : lhs.even_) {
    for (const auto& [j, y] : rhs.even_) TrigPoly::accumulate(out.even_, i + j, x * y);
    for (const auto& [j, y] : rhs.cos_) TrigPoly::accumulate(out.cos_, i + j, x * y);
  }
  for (const auto& [i, x] : lhs.cos_) {
    for (const auto& [j, y] : rhs.even_) TrigPoly::accumulate(out.cos_, i + j, x * y);
    for (const auto& [j, y] : rhs.cos_) {
      // cos^2 sin^{i+j} = sin^{i+j} - sin^{i+j+2}
      const Rational xy = x * y;
      TrigPoly::accumulate(out.even_, i + j, xy);
      TrigPoly::accumulate(out.even_, i + j + 2, -xy);
    }
  }
  return out;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly d;
  for (const auto& [k, c] : even_) {
    if (k != 0) accumulate(d.cos_, k - 1, c * Rational(k));
  }
  for (const auto& [k, c] : cos_) {
    if (k != 0) accumulate(d.even_, k - 1, c * Rational(k));
    accumulate(d.even_, k + 1, -c * Rational(k + 1));
  }
  return d;
}

TrigPoly TrigPoly::div_sin() const {
  if (even_.count(0) != 0 || cos_.count(0) != 0) {
    throw DivisionNotExact("division by sin(theta) of a polynomial with a sin^0 term: " + str());
  }
  return shift_sin(-1);
}

TrigPoly TrigPoly::shift_sin(int j) const {
  TrigPoly t;
  for (const auto& [k, c] : even_) t.even_.emplace(k + j, c);
  for (const auto& [k, c] : cos_) t.cos_.emplace(k + j, c);
  return t;
}

double TrigPoly::eval(double theta) const {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  long double even_sum = 0.0L;
  long double cos_sum = 0.0L;
  for (const auto& [k, v] : even_) even_sum += static_cast<long double>(v.to_double()) * std::pow(static_cast<long double>(s), k);
  for (const auto& [k, v] : cos_) cos_sum += static_cast<long double>(v.to_double()) * std::pow(static_cast<long double>(s), k);
  return static_cast<double>(even_sum + static_cast<long double>(c) * cos_sum);
}

namespace {

std::string render_term(const Rational& c, bool with_cos, int k) {
  std::string out = "(" + c.str() + ")";
  if (with_cos) out += "*c";
  if (k != 0) out += "*s^" + std::to_string(k);
  return out;
}

}  // namespace

std::string TrigPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  auto e = even_.begin();
  auto c = cos_.begin();
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  while (e != even_.end() || c != cos_.end()) {
    if (c == cos_.end() || (e != even_.end() && e->first <= c->first)) {
      append(render_term(e->second, false, e->first));
      ++e;
    } else {
      append(render_term(c->second, true, c->first));
      ++c;
    }
  }
  return out;
}

TrigPoly TrigPoly::parse(std::string_view text) {
  TrigPoly t;
  if (text == "0") return t;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(" + ", pos);
    std::string_view term = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 3;

    if (term.size() < 3 || term.front() != '(') throw ValidationError("bad trig term '" + std::string(term) + "'");
    const std::size_t close = term.find(')');
    if (close == std::string_view::npos) throw ValidationError("bad trig term '" + std::string(term) + "'");
    const Rational coeff = Rational::parse(term.substr(1, close - 1));
    std::string_view rest = term.substr(close + 1);
    bool with_cos = false;
    if (rest.starts_with("*c")) {
      with_cos = true;
      rest.remove_prefix(2);
    }
    int k = 0;
    if (rest.starts_with("*s^")) {
      rest.remove_prefix(3);
      k = static_cast<int>(Rational::parse(rest).numerator().get_si());
      if (!Rational::parse(rest).is_integer()) throw ValidationError("non-integer exponent");
    } else if (!rest.empty()) {
      throw ValidationError("bad trig term '" + std::string(term) + "'");
    }
    accumulate(with_cos ? t.cos_ : t.even_, k, coeff);
  }
  return t;
}

// --- SingularTrig -----------------------------------------------------------

SingularTrig::SingularTrig(Rational csc2, Rational cotcsc, TrigPoly regular)
    : csc2_(std::move(csc2)), cotcsc_(std::move(cotcsc)), regular_(std::move(regular)) {
  if (!regular_.is_regular()) throw SingularOrderExceeded("regular part has negative sine exponents");
}

SingularTrig SingularTrig::from_laurent(const TrigPoly& laurent) {
  Rational csc2;
  Rational cotcsc;
  TrigPoly regular;
  for (const auto& [k, c] : laurent.even_part()) {
    if (k == -2) {
      csc2 = c;
    } else if (k < 0) {
      throw SingularOrderExceeded("term sin^" + std::to_string(k) + " outside the csc^2 form");
    } else {
      regular += TrigPoly::sin_pow(k, c);
    }
  }
  for (const auto& [k, c] : laurent.cos_part()) {
    if (k == -2) {
      cotcsc = c;
    } else if (k < 0) {
      throw SingularOrderExceeded("term cos*sin^" + std::to_string(k) + " outside the csc^2 form");
    } else {
      regular += TrigPoly::cos_sin_pow(k, c);
    }
  }
  return SingularTrig(csc2, cotcsc, regular);
}

TrigPoly SingularTrig::to_laurent() const {
  return regular_ + TrigPoly::sin_pow(-2, csc2_) + TrigPoly::cos_sin_pow(-2, cotcsc_);
}

bool SingularTrig::is_constant() const {
  return csc2_.is_zero() && cotcsc_.is_zero() && regular_.is_constant();
}

SingularTrig SingularTrig::nonconstant_part() const {
  return SingularTrig(csc2_, cotcsc_, regular_ - TrigPoly::constant(regular_.constant_term()));
}

SingularTrig operator+(const SingularTrig& lhs, const SingularTrig& rhs) {
  return SingularTrig(lhs.csc2_ + rhs.csc2_, lhs.cotcsc_ + rhs.cotcsc_, lhs.regular_ + rhs.regular_);
}

SingularTrig operator-(const SingularTrig& lhs, const SingularTrig& rhs) {
  return SingularTrig(lhs.csc2_ - rhs.csc2_, lhs.cotcsc_ - rhs.cotcsc_, lhs.regular_ - rhs.regular_);
}

SingularTrig operator*(const SingularTrig& lhs, const SingularTrig& rhs) {
  return SingularTrig::from_laurent(lhs.to_laurent() * rhs.to_laurent());
}

double SingularTrig::eval(double theta) const { return to_laurent().eval(theta); }

std::string SingularTrig::str() const {
  return "(" + csc2_.str() + ")*csc^2 + (" + cotcsc_.str() + ")*c*csc^2 + [" + regular_.str() + "]";
}

}  // namespace susy
