#include "susy/series.hpp"

#include <map>
#include <utility>

#include "susy/errors.hpp"
#include "susy/integrals.hpp"
#include "susy/linear_solve.hpp"

namespace susy {

namespace {

Rational at_or_zero(const std::vector<Rational>& row, int idx) {
  if (idx < 0 || idx >= static_cast<int>(row.size())) return Rational(0);
  return row[static_cast<std::size_t>(idx)];
}

// L[X] = X' - 2 W0 X = X' + (3 + (2m+1) cos) X / sin
TrigPoly ode_operator(const Rational& m, const TrigPoly& x) {
  const TrigPoly factor = TrigPoly::constant(3) + TrigPoly::cos_sin_pow(0, 2 * m + 1);
  return x.derivative() + factor * x.div_sin();
}

TrigPoly convolution_product(const WSeries& w, int n) {
  TrigPoly sum;
  for (int k = 1; k < n; ++k) sum += w.term(k) * w.term(n - k);
  return sum;
}

}  // namespace

void ModelParams::validate() const {
  if (N < 0) throw ValidationError("order N must be non-negative");
  if (mode == Mode::physical) {
    const Rational two_m = 2 * m;
    if (!two_m.is_integer() || two_m.numerator() % 2 == 0 || m < Rational(3, 2)) {
      throw ValidationError("physical mode requires half-integer m >= 3/2, got " + m.str());
    }
  }
  const int top = 2 * (N / 2) + 2;
  for (int j = 1; j <= top; ++j) {
    if ((2 * m + j).is_zero()) {
      throw DenominatorVanishes("factor (2m+" + std::to_string(j) + ") vanishes at m = " + m.str());
    }
  }
}

TrigPoly OrderZero::laurent() const {
  return TrigPoly::sin_pow(-1, -csc_coeff) + TrigPoly::cos_sin_pow(-1, -cot_coeff);
}

Rational WSeries::a_at(int n, int k) const {
  if (n < 0 || n >= static_cast<int>(a.size())) return Rational(0);
  return at_or_zero(a[static_cast<std::size_t>(n)], k - 1);
}

Rational WSeries::b_at(int n, int k) const {
  if (n < 0 || n >= static_cast<int>(b.size())) return Rational(0);
  return at_or_zero(b[static_cast<std::size_t>(n)], k - 1);
}

TrigPoly WSeries::term(int n) const {
  if (n == 0) return order0.laurent();
  TrigPoly t;
  const auto& arow = a.at(static_cast<std::size_t>(n));
  const auto& brow = b.at(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < arow.size(); ++k) t += TrigPoly::cos_sin_pow(static_cast<int>(2 * k + 1), arow[k]);
  for (std::size_t k = 0; k < brow.size(); ++k) t += TrigPoly::sin_pow(static_cast<int>(2 * k + 1), brow[k]);
  return t;
}

Rational ConvolutionRow::h_at(int p) const { return at_or_zero(h, p); }
Rational ConvolutionRow::g_at(int p) const { return at_or_zero(g, p); }
Rational ConvolutionRow::i_at(int p) const { return at_or_zero(i, p); }
Rational ConvolutionRow::j_at(int p) const { return at_or_zero(j, p); }

std::string_view to_string(GTermConvention c) {
  switch (c) {
    case GTermConvention::DELTA: return "DELTA";
    case GTermConvention::XI: return "XI";
    case GTermConvention::XI_NEGATED: return "XI_NEGATED";
  }
  return "?";
}

OrderZero order_zero(const ModelParams& params) {
  params.validate();
  const Rational& m = params.m;
  return OrderZero{m * m + m - Rational(15, 4), kSpin, m + Rational(1, 2)};
}

TrigPoly source_term(int n) {
  if (n < 1) throw ValidationError("source_term needs n >= 1");
  if (n == 1) return TrigPoly::cos_sin_pow(0, -3);
  if (n == 2) return TrigPoly::cos_pow(2);
  return {};
}

ConvolutionRow convolve(const WSeries& w, int n) {
  if (n < 1 || n > w.order() + 1) throw ValidationError("convolve: rows below n are not populated");
  const Rational& m = w.m;
  const int P = n / 2 + 1;
  ConvolutionRow row;
  row.n = n;
  row.h.assign(static_cast<std::size_t>(P + 2), Rational(0));
  row.g.assign(static_cast<std::size_t>(P + 2), Rational(0));
  row.i.assign(static_cast<std::size_t>(P + 2), Rational(0));
  row.j.assign(static_cast<std::size_t>(P + 2), Rational(0));

  for (int p = 1; p <= P + 1; ++p) {
    Rational hs;
    Rational gs;
    for (int k = 1; k < n; ++k) {
      for (int j = 1; j < p; ++j) {
        hs += w.b_at(k, p - j) * w.b_at(n - k, j) + w.a_at(k, p - j) * w.a_at(n - k, j) -
              w.a_at(k, p - 1 - j) * w.a_at(n - k, j);
        gs += w.b_at(k, p - j) * w.a_at(n - k, j) + w.a_at(k, p - j) * w.b_at(n - k, j);
      }
    }
    row.h[static_cast<std::size_t>(p)] = hs;
    row.g[static_cast<std::size_t>(p)] = gs;
  }

  TrigPoly expected;
  for (int p = 1; p <= P + 1; ++p) {
    expected += TrigPoly::sin_pow(2 * p - 2, row.h_at(p)) + TrigPoly::cos_sin_pow(2 * p - 2, row.g_at(p));
  }
  const TrigPoly direct = convolution_product(w, n);
  if (!(direct == expected)) {
    throw InconsistentConvolution("order " + std::to_string(n) + ": table " + expected.str() +
                                  " differs from product " + direct.str());
  }

  for (int p = 2; p <= P; ++p) {
    const Rational h = row.h_at(p);
    const Rational g = row.g_at(p);
    const Rational d0 = 2 * m + 2 * p - 2;
    const Rational d1 = 2 * m + 2 * p;
    row.i[static_cast<std::size_t>(p)] = (5 * g - 3 * h) / d0 + (2 * m + 2 * p - 1) * g / (d0 * d1);
    row.j[static_cast<std::size_t>(p)] = (h * d1 - 3 * g) * (2 * m + 2 * p + 1) / (d0 * d1);
  }
  return row;
}

OrderSolution solve_order(const WSeries& w, int n, const SolveOptions& options) {
  if (n < 1 || n > w.order() + 1) throw ValidationError("solve_order: rows below n are not populated");
  const Rational& m = w.m;
  const int ka = n / 2 + options.extra_columns;
  const int kb = (n + 1) / 2 + options.extra_columns;

  std::vector<TrigPoly> images;
  for (int k = 1; k <= ka; ++k) images.push_back(ode_operator(m, TrigPoly::cos_sin_pow(2 * k - 1)));
  for (int k = 1; k <= kb; ++k) images.push_back(ode_operator(m, TrigPoly::sin_pow(2 * k - 1)));
  images.push_back(TrigPoly::constant(-1));

  const TrigPoly rhs = source_term(n) + convolution_product(w, n);

  // one equation per basis monomial; key = (sine exponent, has cos)
  std::map<std::pair<int, bool>, std::size_t> eq_index;
  auto index_of = [&eq_index](int k, bool c) {
    auto [it, inserted] = eq_index.try_emplace({k, c}, eq_index.size());
    return it->second;
  };
  for (const auto& img : images) {
    for (const auto& [k, v] : img.even_part()) index_of(k, false);
    for (const auto& [k, v] : img.cos_part()) index_of(k, true);
  }
  for (const auto& [k, v] : rhs.even_part()) index_of(k, false);
  for (const auto& [k, v] : rhs.cos_part()) index_of(k, true);

  const std::size_t cols = images.size();
  std::vector<std::vector<Rational>> A(eq_index.size(), std::vector<Rational>(cols));
  std::vector<Rational> b(eq_index.size());
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& [k, v] : images[c].even_part()) A[eq_index.at({k, false})][c] = v;
    for (const auto& [k, v] : images[c].cos_part()) A[eq_index.at({k, true})][c] = v;
  }
  for (const auto& [k, v] : rhs.even_part()) b[eq_index.at({k, false})] = v;
  for (const auto& [k, v] : rhs.cos_part()) b[eq_index.at({k, true})] = v;

  const LinearSolution sol = solve_exact(std::move(A), std::move(b));
  if (sol.status == SolveStatus::inconsistent) {
    throw AnsatzInsufficient("order " + std::to_string(n) + " has no solution in the regular ansatz at m = " + m.str());
  }
  if (sol.status == SolveStatus::rank_deficient) {
    throw SingularLinearSystem("order " + std::to_string(n) + " system is singular at m = " + m.str());
  }

  OrderSolution out;
  out.a.assign(sol.x.begin(), sol.x.begin() + ka);
  out.b.assign(sol.x.begin() + ka, sol.x.begin() + ka + kb);
  out.E = sol.x.back();
  return out;
}

Series build_series(const ModelParams& params) {
  Series s;
  s.params = params;
  s.w.m = params.m;
  s.w.order0 = order_zero(params);
  s.w.a.emplace_back();
  s.w.b.emplace_back();
  s.e.E0.push_back(s.w.order0.E00);
  s.tables.emplace_back();
  for (int n = 1; n <= params.N; ++n) {
    s.tables.push_back(convolve(s.w, n));
    OrderSolution sol = solve_order(s.w, n);
    s.w.a.push_back(std::move(sol.a));
    s.w.b.push_back(std::move(sol.b));
    s.e.E0.push_back(sol.E);
  }
  return s;
}

namespace {

Rational divergent_sum(const Rational& m, const ConvolutionRow& row) {
  const int P = row.n / 2 + 1;
  Rational sum;
  for (int p = 2; p <= P; ++p) {
    sum += row.j_at(p) * (2 * m - 1) / (2 * m + 2 * p - 3) * ibar(2 * m + 2 * p - 4, p - 2);
  }
  return sum;
}

}  // namespace

OrderSolution recurrence_coeffs(const Rational& m, const ConvolutionRow& row, GTermConvention convention) {
  const int n = row.n;
  if (n < 3) throw ValidationError("recurrence route covers n >= 3");
  const int P = n / 2 + 1;

  OrderSolution out;
  out.E = -(2 * m) / (2 * m + 3) * divergent_sum(m, row);

  for (int l = 1; l <= (n + 1) / 2; ++l) {
    Rational s;
    for (int p = l + 1; p <= P; ++p) {
      s += 3 * (2 * m + 2 * l - 2) * row.j_at(p) * ibar(2 * m + 2 * p - 4, p - l - 1) /
           ((2 * m + 2 * l + 1) * (2 * m + 2 * l + 3) * (2 * m + 2 * p - 3));
    }
    const Rational gterm = row.g_at(l) / (2 * m + 2 * l);
    switch (convention) {
      case GTermConvention::DELTA:
        if (l == 1) s += gterm;
        break;
      case GTermConvention::XI:
        if (l != 1) s += gterm;
        break;
      case GTermConvention::XI_NEGATED:
        if (l != 1) s -= gterm;
        break;
    }
    out.b.push_back(s);
  }
  for (int l = 1; l <= n / 2; ++l) {
    Rational s;
    for (int p = l + 1; p <= P; ++p) {
      s -= (2 * m + 2 * l - 2) * (2 * m + 2 * l) * row.j_at(p) * ibar(2 * m + 2 * p - 4, p - l - 1) /
           ((2 * m + 2 * l + 1) * (2 * m + 2 * l + 3) * (2 * m + 2 * p - 3));
    }
    out.a.push_back(s);
  }
  return out;
}

Rational divergence_coefficient(const Rational& m, const ConvolutionRow& row, const Rational& En) {
  return (2 * m + 3) / (2 * m) * En + divergent_sum(m, row);
}

SingularTrig potential_term(const Rational& m, int n) {
  switch (n) {
    case 0: return SingularTrig(m * m + 2, 3 * m, TrigPoly::constant(-4));
    case 1: return SingularTrig(0, 0, TrigPoly::cos_sin_pow(0, 3));
    case 2: return SingularTrig(0, 0, TrigPoly::constant(-1) + TrigPoly::sin_pow(2));
    default: return {};
  }
}

std::vector<SingularTrig> riccati_residual(const WSeries& w, const ESeries& e, int up_to) {
  if (up_to > w.order() || up_to >= static_cast<int>(e.E0.size())) {
    throw ValidationError("riccati_residual beyond the computed order");
  }
  std::vector<SingularTrig> out;
  for (int n = 0; n <= up_to; ++n) {
    TrigPoly r;
    for (int k = 0; k <= n; ++k) r += w.term(k) * w.term(n - k);
    r -= w.term(n).derivative();
    r += TrigPoly::constant(e.E0[static_cast<std::size_t>(n)]);
    out.push_back(SingularTrig::from_laurent(r) - potential_term(w.m, n));
  }
  return out;
}

double energy_sum(const ESeries& e, double beta) {
  double acc = 0.0;
  for (auto it = e.E0.rbegin(); it != e.E0.rend(); ++it) acc = acc * beta + it->to_double();
  return acc;
}

}  // namespace susy
