#include "qes/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qes {

namespace {

constexpr std::array<const char*, 4> kNames{"s", "alpha", "nu", "N"};

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0, 0, 0}, c);
}

MPoly MPoly::variable(Var v) {
  MPoly p;
  Exponents e{0, 0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  p.terms_.emplace(e, Rational(1));
  return p;
}

int MPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

Rational MPoly::evaluate(const Parameters& p) const {
  const std::array<const Rational*, 4> values{&p.s, &p.alpha, &p.nu, &p.N};
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < 4; ++i)
      if (e[i] != 0) term *= pow(*values[i], e[i]);
    acc += term;
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = e == Exponents{0, 0, 0, 0};
    Rational magnitude = c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    magnitude = c.abs();
    first = false;
    bool need_star = false;
    if (constant || !magnitude.is_one()) {
      os << magnitude;
      need_star = true;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << kNames[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e{};
      for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

}  // namespace qes
