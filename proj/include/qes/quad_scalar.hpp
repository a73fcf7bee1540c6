#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "qes/rational.hpp"

namespace qes {

/// Element a + b√2 + c√3 + d√6 of the biquadratic field ℚ(√2,√3).
///
/// The basis {1, √2, √3, √6} is fixed, so equality and the zero test are
/// plain coefficient comparisons.
class QuadScalar {
 public:
  QuadScalar() = default;
  template <std::integral I>
  QuadScalar(I value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& value) : c_{value, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static QuadScalar sqrt2() { return {0, 1, 0, 0}; }
  static QuadScalar sqrt3() { return {0, 0, 1, 0}; }
  static QuadScalar sqrt6() { return {0, 0, 0, 1}; }

  /// Parses the canonical form produced by str(), e.g. "3/5+2/7*sqrt2-sqrt6".
  static QuadScalar parse(std::string_view text);

  [[nodiscard]] const Rational& rational_part() const { return c_[0]; }
  [[nodiscard]] const Rational& sqrt2_part() const { return c_[1]; }
  [[nodiscard]] const Rational& sqrt3_part() const { return c_[2]; }
  [[nodiscard]] const Rational& sqrt6_part() const { return c_[3]; }
  [[nodiscard]] const std::array<Rational, 4>& coefficients() const { return c_; }

  [[nodiscard]] bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  [[nodiscard]] bool is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }

  [[nodiscard]] QuadScalar inverse() const;
  /// Correctly rounded double (adaptive-precision evaluation of the radicals).
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;

  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o) { return *this *= o.inverse(); }

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }
  friend QuadScalar operator-(const QuadScalar& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }

  friend bool operator==(const QuadScalar& a, const QuadScalar& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const QuadScalar& q) { return os << q.str(); }

 private:
  std::array<Rational, 4> c_{};
};

inline double to_double(const QuadScalar& q) { return q.to_double(); }
inline std::string to_string(const QuadScalar& q) { return q.str(); }

}  // namespace qes
