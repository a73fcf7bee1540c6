#include "qes/quad_scalar.hpp"

#include <stdexcept>
#include <vector>

#include <mpfr.h>

namespace qes {

namespace {

// RAII holder for an MPFR variable.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t precision) { mpfr_init2(v_, precision); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

double evaluate_at_precision(const std::array<Rational, 4>& c, mpfr_prec_t precision) {
  MpfrValue sum(precision), term(precision), root(precision);
  mpfr_set_q(sum.get(), c[0].value().get_mpq_t(), MPFR_RNDN);
  constexpr std::array<unsigned long, 3> radicands{2, 3, 6};
  for (std::size_t i = 1; i < 4; ++i) {
    if (c[i].is_zero()) continue;
    mpfr_sqrt_ui(root.get(), radicands[i - 1], MPFR_RNDN);
    mpfr_mul_q(term.get(), root.get(), c[i].value().get_mpq_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

}  // namespace

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  const auto& [a1, b1, c1, d1] = c_;
  const auto& [a2, b2, c2, d2] = o.c_;
  // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2.
  Rational a = a1 * a2 + 2 * (b1 * b2) + 3 * (c1 * c2) + 6 * (d1 * d2);
  Rational b = a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2);
  Rational c = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2);
  Rational d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
  c_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
  return *this;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QuadScalar: inverse of zero");
  // Tower ℚ(√3)(√2): x = u + v√2 with u = a + c√3, v = b + d√3.
  const auto& [a, b, c, d] = c_;
  // w = u² − 2v² = p + q√3
  const Rational p = a * a + 3 * (c * c) - 2 * (b * b + 3 * (d * d));
  const Rational q = 2 * (a * c) - 4 * (b * d);
  const Rational norm = p * p - 3 * (q * q);  // nonzero for x ≠ 0
  // 1/w = (p − q√3)/norm
  const Rational wp = p / norm;
  const Rational wq = -q / norm;
  // 1/x = (u − v√2)·(1/w); (u − v√2) = a − b√2 + c√3 − d√6 and 1/w = wp + wq√3.
  return QuadScalar(a, -b, c, -d) * QuadScalar(wp, 0, wq, 0);
}

double QuadScalar::to_double() const {
  if (is_zero()) return 0.0;
  if (is_rational()) return c_[0].to_double();
  double previous = evaluate_at_precision(c_, 128);
  for (mpfr_prec_t precision = 256; precision <= (1 << 16); precision *= 2) {
    const double current = evaluate_at_precision(c_, precision);
    if (current == previous) return current;
    previous = current;
  }
  return previous;
}

std::string QuadScalar::str() const {
  static constexpr std::array<const char*, 4> names{"", "sqrt2", "sqrt3", "sqrt6"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& coeff = c_[i];
    if (coeff.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = coeff.str();
    } else if (coeff == Rational(1)) {
      term = names[i];
    } else if (coeff == Rational(-1)) {
      term = std::string("-") + names[i];
    } else {
      term = coeff.str() + "*" + names[i];
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

QuadScalar QuadScalar::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("QuadScalar::parse: empty input");
  std::vector<std::string_view> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] == '+' || text[i] == '-') {
      terms.push_back(text.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(text.substr(start));

  QuadScalar result;
  for (std::string_view term : terms) {
    std::size_t index = 0;
    std::string_view coeff_text = term;
    const auto pos = term.find("sqrt");
    if (pos != std::string_view::npos) {
      const std::string_view radicand = term.substr(pos + 4);
      if (radicand == "2") index = 1;
      else if (radicand == "3") index = 2;
      else if (radicand == "6") index = 3;
      else throw std::invalid_argument("QuadScalar::parse: unknown radical in '" + std::string(term) + "'");
      coeff_text = term.substr(0, pos);
      if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.remove_suffix(1);
      if (coeff_text.empty() || coeff_text == "+") coeff_text = "1";
      else if (coeff_text == "-") coeff_text = "-1";
    }
    result.c_[index] += Rational::parse(coeff_text);
  }
  return result;
}

}  // namespace qes
