#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qes/laurent_poly.hpp"

namespace qes {

/// Linear differential operator Σ_k p_k(x)·(d/dx)^k with Laurent-polynomial
/// coefficients, stored in normal form (derivatives to the right).
template <ExactField F>
class DiffOp {
 public:
  using Poly = LaurentPoly<F>;

  DiffOp() = default;
  /// Multiplication operator by p(x).
  DiffOp(Poly p) { set(0, std::move(p)); }  // NOLINT(google-explicit-constructor)
  DiffOp(const F& c) : DiffOp(Poly(c)) {}  // NOLINT(google-explicit-constructor)

  static DiffOp identity() { return DiffOp(Poly(F(1))); }
  static DiffOp derivative() { return term(1, Poly(F(1))); }
  static DiffOp multiply_by_x() { return DiffOp(Poly::x()); }
  /// p(x)·(d/dx)^order
  static DiffOp term(int order, Poly p) {
    DiffOp op;
    op.set(order, std::move(p));
    return op;
  }
  /// Builds Σ coeffs[k]·(d/dx)^k.
  static DiffOp from_coefficients(std::vector<Poly> coeffs) {
    DiffOp op;
    op.coeffs_ = std::move(coeffs);
    op.trim();
    return op;
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Highest derivative order present (0 for the zero operator).
  [[nodiscard]] int order() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Poly coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : Poly();
  }
  [[nodiscard]] const std::vector<Poly>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool has_polynomial_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_polynomial(); });
  }

  void set(int k, Poly p) {
    if (static_cast<int>(coeffs_.size()) <= k) coeffs_.resize(static_cast<std::size_t>(k) + 1);
    coeffs_[static_cast<std::size_t>(k)] = std::move(p);
    trim();
  }

  /// Applies the operator to a concrete Laurent polynomial.
  [[nodiscard]] Poly apply(const Poly& f) const {
    Poly out;
    Poly current = f;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k > 0) current = current.derivative();
      out += coeffs_[k] * current;
    }
    return out;
  }

  template <class G, class Map>
  [[nodiscard]] DiffOp<G> map_coefficients(Map&& map) const {
    std::vector<LaurentPoly<G>> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.push_back(p.template map_coefficients<G>(map));
    return DiffOp<G>::from_coefficients(std::move(out));
  }

  [[nodiscard]] std::string str(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
      const Poly& p = coeffs_[static_cast<std::size_t>(k)];
      if (p.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << '[' << p.str(var) << ']';
      if (k == 1) os << "*d/d" << var;
      else if (k > 1) os << "*d^" << k << "/d" << var << '^' << k;
    }
    return os.str();
  }

  DiffOp& operator+=(const DiffOp& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  DiffOp& operator*=(const F& s) {
    for (auto& p : coeffs_) p *= s;
    trim();
    return *this;
  }

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(DiffOp a) { return a *= F(-1); }
  friend DiffOp operator*(DiffOp a, const F& s) { return a *= s; }
  friend DiffOp operator*(const F& s, DiffOp a) { return a *= s; }

  /// Composition A∘B via the Leibniz rule:
  /// a·D^i ∘ b·D^j = Σ_m C(i,m)·a·b^{(m)}·D^{i−m+j}.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    std::vector<Poly> out(a.coeffs_.empty() || b.coeffs_.empty() ? 0 : a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const Poly& bj = b.coeffs_[j];
      if (bj.is_zero()) continue;
      Poly bj_derivative = bj;
      for (std::size_t m = 0; m < a.coeffs_.size(); ++m) {
        if (m > 0) bj_derivative = bj_derivative.derivative();
        if (bj_derivative.is_zero()) break;
        long binomial = 1;  // C(i, m), built incrementally in i
        for (std::size_t i = m; i < a.coeffs_.size(); ++i) {
          if (i > m) binomial = binomial * static_cast<long>(i) / static_cast<long>(i - m);
          const Poly& ai = a.coeffs_[i];
          if (!ai.is_zero()) out[i - m + j] += (ai * bj_derivative) * F(binomial);
        }
      }
    }
    return from_coefficients(std::move(out));
  }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Poly> coeffs_;
};

template <ExactField F>
DiffOp<F> commutator(const DiffOp<F>& a, const DiffOp<F>& b) {
  return a * b - b * a;
}

/// A^exponent under composition.
template <ExactField F>
DiffOp<F> power(const DiffOp<F>& a, int exponent) {
  DiffOp<F> out = DiffOp<F>::identity();
  for (int i = 0; i < exponent; ++i) out = out * a;
  return out;
}

}  // namespace qes
