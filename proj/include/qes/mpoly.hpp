#pragma once

#include <array>
#include <map>
#include <string>

#include "qes/family.hpp"
#include "qes/rational.hpp"

namespace qes {

/// Variables of a family constant, in the order (s, α, ν, N).
enum class Var { s = 0, alpha = 1, nu = 2, N = 3 };

/// Sparse polynomial over ℚ in the family parameters.
class MPoly {
 public:
  using Exponents = std::array<int, 4>;

  MPoly() = default;
  template <std::integral I>
  MPoly(I c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MPoly variable(Var v);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
  [[nodiscard]] int degree_in(Var v) const;
  [[nodiscard]] Rational evaluate(const Parameters& p) const;
  [[nodiscard]] std::string str() const;

  void add_term(const Exponents& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return MPoly() - a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

 private:
  std::map<Exponents, Rational> terms_;
};

}  // namespace qes
