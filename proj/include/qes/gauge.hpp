#pragma once

#include <stdexcept>

#include "qes/diff_op.hpp"

namespace qes {

/// Gauge factor φ(z) = exp(η·z²) or z·exp(η·z²); the sign of η is part of η.
template <ExactField F>
struct GaugeFactor {
  F eta;
  bool with_z = false;

  /// φ'/φ = 2ηz (+ 1/z when the z prefactor is present).
  [[nodiscard]] LaurentPoly<F> log_derivative() const {
    auto w = LaurentPoly<F>::monomial(1, F(2) * eta);
    if (with_z) w += LaurentPoly<F>::monomial(-1);
    return w;
  }

  [[nodiscard]] GaugeFactor inverse_exponent() const { return {-eta, with_z}; }
};

/// φ⁻¹∘A∘φ. Conjugation is an algebra automorphism fixing multiplication
/// operators and sending d/dz to d/dz + φ'/φ.
template <ExactField F>
DiffOp<F> conjugate_by_gauge(const DiffOp<F>& a, const GaugeFactor<F>& gauge) {
  const DiffOp<F> shifted_d = DiffOp<F>::derivative() + DiffOp<F>(gauge.log_derivative());
  DiffOp<F> out;
  DiffOp<F> d_power = DiffOp<F>::identity();
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) d_power = d_power * shifted_d;
    if (!a.coeff(k).is_zero()) out += DiffOp<F>(a.coeff(k)) * d_power;
  }
  return out;
}

/// Conjugation by the bare monomial z (φ = z): d/dz → d/dz + 1/z.
template <ExactField F>
DiffOp<F> conjugate_by_z(const DiffOp<F>& a) {
  return conjugate_by_gauge(a, GaugeFactor<F>{F(0), true});
}

/// Rewrites an operator in x as an operator in z under x = c·z²:
/// x^k → c^k z^{2k}, d/dx → (1/(2cz))·d/dz.
template <ExactField F>
DiffOp<F> substitute_square(const DiffOp<F>& a, const F& c) {
  if (c.is_zero()) throw std::domain_error("substitute_square: scale must be nonzero");
  const DiffOp<F> d_x = DiffOp<F>::term(1, LaurentPoly<F>::monomial(-1, (F(2) * c).inverse()));
  DiffOp<F> out;
  DiffOp<F> d_power = DiffOp<F>::identity();
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) d_power = d_power * d_x;
    if (!a.coeff(k).is_zero()) out += DiffOp<F>(a.coeff(k).substitute_square(c)) * d_power;
  }
  return out;
}

}  // namespace qes
