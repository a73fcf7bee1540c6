#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qes {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Division by zero throws
/// std::domain_error instead of trapping inside GMP.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Rational(I numerator, J denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(static_cast<long>(numerator), 1);
    value_ /= static_cast<long>(denominator);
  }

  explicit Rational(mpq_class value);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "p", "-p" or "p/q" (optional leading '+').
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& value() const { return value_; }

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// Nearest double (truncated by GMP; within one ulp).
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// Canonical text form: "-3/5", "7", "0".
  [[nodiscard]] std::string str() const { return value_.get_str(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// Integer power with non-negative or negative exponent.
Rational pow(const Rational& base, int exponent);

inline double to_double(const Rational& r) { return r.to_double(); }
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace qes
