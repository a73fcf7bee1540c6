#pragma once

#include "qes/diff_op.hpp"

namespace qes {

/// Rewrite rule F'' = value_coeff·F + slope_coeff·F' for a solution F of a
/// second-order linear ODE.
template <ExactField F>
struct SecondOrderRule {
  LaurentPoly<F> value_coeff;
  LaurentPoly<F> slope_coeff;
};

/// Builds the rewrite rule of q·F'' + p·F' + r·F = 0. The leading
/// coefficient q must be a single monomial so the rule stays Laurent.
template <ExactField F>
SecondOrderRule<F> rule_from_ode(const DiffOp<F>& ode) {
  if (ode.order() != 2) throw std::invalid_argument("rule_from_ode: ODE must be of order two");
  const LaurentPoly<F>& lead = ode.coeff(2);
  return {(-ode.coeff(0)).divided_by_monomial(lead), (-ode.coeff(1)).divided_by_monomial(lead)};
}

/// The function value(x)·F(x) + slope(x)·F'(x) over a fundamental function F.
template <ExactField F>
struct PairElement {
  LaurentPoly<F> value;
  LaurentPoly<F> slope;

  [[nodiscard]] bool is_zero() const { return value.is_zero() && slope.is_zero(); }

  /// d/dx, with F'' eliminated through the rule.
  [[nodiscard]] PairElement derivative(const SecondOrderRule<F>& rule) const {
    return {value.derivative() + slope * rule.value_coeff,
            value + slope.derivative() + slope * rule.slope_coeff};
  }

  PairElement& operator+=(const PairElement& o) {
    value += o.value;
    slope += o.slope;
    return *this;
  }
  PairElement& operator-=(const PairElement& o) {
    value -= o.value;
    slope -= o.slope;
    return *this;
  }
  friend PairElement operator+(PairElement a, const PairElement& b) { return a += b; }
  friend PairElement operator-(PairElement a, const PairElement& b) { return a -= b; }
  friend PairElement operator*(const F& c, const PairElement& a) { return {a.value * c, a.slope * c}; }
  friend PairElement operator*(const LaurentPoly<F>& p, const PairElement& a) { return {p * a.value, p * a.slope}; }
  friend bool operator==(const PairElement& a, const PairElement& b) = default;
};

/// Applies a differential operator to a pair element symbolically.
template <ExactField F>
PairElement<F> apply_op(const DiffOp<F>& op, const PairElement<F>& element, const SecondOrderRule<F>& rule) {
  PairElement<F> out;
  PairElement<F> current = element;
  for (int k = 0; k <= op.order(); ++k) {
    if (k > 0) current = current.derivative(rule);
    const auto& c = op.coeff(k);
    if (!c.is_zero()) out += c * current;
  }
  return out;
}

}  // namespace qes
