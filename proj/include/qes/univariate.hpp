#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qes/matrix.hpp"
#include "qes/rational.hpp"

namespace qes {

/// Dense univariate polynomial over ℚ, coefficients stored low to high.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; −1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int k) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] double operator()(double x) const;

  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] UPoly monic() const;
  /// Polynomial division: returns (quotient, remainder).
  [[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  [[nodiscard]] std::string str(const std::string& var = "t") const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor.
UPoly gcd(UPoly a, UPoly b);
/// p / gcd(p, p'): same roots, each simple.
UPoly squarefree_part(const UPoly& p);

/// Rational interval [lower, upper] containing exactly one real root.
/// Either lower == upper (an exact rational root) or the polynomial takes
/// opposite nonzero signs at the endpoints.
struct RootInterval {
  Rational lower;
  Rational upper;
  [[nodiscard]] double midpoint() const { return ((lower + upper) * Rational(1, 2)).to_double(); }
  [[nodiscard]] Rational width() const { return upper - lower; }
};

/// Sturm-sequence root counter for a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);
  /// Number of distinct real roots in (a, b].
  [[nodiscard]] int count(const Rational& a, const Rational& b) const;
  [[nodiscard]] const UPoly& polynomial() const { return chain_.front(); }

 private:
  [[nodiscard]] int variations(const Rational& x) const;
  std::vector<UPoly> chain_;
};

/// Isolates every distinct real root of p and refines each interval until
/// its width is below relative_tolerance·max(1, |root|).
std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rational& relative_tolerance);

/// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// det(t·I − A) by the Faddeev–LeVerrier recurrence.
UPoly characteristic_polynomial(const Matrix<Rational>& a);

}  // namespace qes
