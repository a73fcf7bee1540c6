#include "qes/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qes {

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.front() == '-')
    throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
  return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rational result(1);
  Rational b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= b;
    b *= b;
  }
  return result;
}

}  // namespace qes
