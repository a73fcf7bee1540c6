#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qes/field.hpp"

namespace qes {

/// Finite Laurent polynomial Σ c_k x^k, k ∈ ℤ, with exact coefficients.
/// Zero coefficients are never stored.
template <ExactField F>
class LaurentPoly {
 public:
  using Terms = std::map<int, F>;

  LaurentPoly() = default;
  LaurentPoly(F constant) { set(0, std::move(constant)); }  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LaurentPoly(I constant) : LaurentPoly(F(constant)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, F coeff = F(1)) {
    LaurentPoly p;
    p.set(exponent, std::move(coeff));
    return p;
  }
  static LaurentPoly x() { return monomial(1); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  /// Highest exponent; only meaningful for a nonzero polynomial.
  [[nodiscard]] int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  [[nodiscard]] int low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  [[nodiscard]] bool is_polynomial() const { return terms_.empty() || low_degree() >= 0; }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  [[nodiscard]] F coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? F(0) : it->second;
  }

  void set(int exponent, F value) {
    if (value.is_zero()) terms_.erase(exponent);
    else terms_[exponent] = std::move(value);
  }
  void add_to(int exponent, const F& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] LaurentPoly derivative(int times = 1) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
      F factor(1);
      for (int i = 0; i < times; ++i) factor *= F(e - i);
      out.add_to(e - times, c * factor);
    }
    return out;
  }

  /// Multiplies by x^shift.
  [[nodiscard]] LaurentPoly shifted(int shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
  }

  /// Exact division by a single-term polynomial c·x^k.
  [[nodiscard]] LaurentPoly divided_by_monomial(const LaurentPoly& divisor) const {
    if (divisor.terms_.size() != 1) throw std::invalid_argument("LaurentPoly: divisor is not a monomial");
    const auto& [k, c] = *divisor.terms_.begin();
    const F inv = c.inverse();
    LaurentPoly out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e - k, v * inv);
    return out;
  }

  /// Substitutes x = c·z², giving a Laurent polynomial in z.
  [[nodiscard]] LaurentPoly substitute_square(const F& c) const {
    LaurentPoly out;
    for (const auto& [e, v] : terms_) {
      F factor(1);
      const F base = e >= 0 ? c : c.inverse();
      for (int i = 0; i < std::abs(e); ++i) factor *= base;
      out.terms_.emplace(2 * e, v * factor);
    }
    return out;
  }

  template <class G, class Map>
  [[nodiscard]] LaurentPoly<G> map_coefficients(Map&& map) const {
    LaurentPoly<G> out;
    for (const auto& [e, v] : terms_) out.set(e, map(v));
    return out;
  }

  [[nodiscard]] double evaluate(double x) const {
    double sum = 0.0;
    for (const auto& [e, v] : terms_) sum += to_double(v) * std::pow(x, e);
    return sum;
  }

  [[nodiscard]] std::string str(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << " + ";
      first = false;
      os << '(' << to_string(c) << ')';
      if (e == 1) os << '*' << var;
      else if (e != 0) os << '*' << var << '^' << e;
    }
    return os.str();
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_to(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_to(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const F& s) {
    if (s.is_zero()) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_to(ea + eb, ca * cb);
    return out;
  }
  friend LaurentPoly operator*(LaurentPoly a, const F& s) { return a *= s; }
  friend LaurentPoly operator*(const F& s, LaurentPoly a) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace qes
