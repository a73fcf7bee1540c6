#include "qes/family.hpp"

#include <sstream>

namespace qes {

namespace {

RationalPoly x_pow(int e, Rational c = 1) { return RationalPoly::monomial(e, std::move(c)); }
RationalOp term(int order, RationalPoly p) { return RationalOp::term(order, std::move(p)); }

bool nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

}  // namespace

FamilySpec FamilySpec::make(int id, int N, Rational s, Rational alpha, Rational nu) {
  FamilySpec spec{id, std::move(s), std::move(alpha), std::move(nu), N};
  validate(spec);
  return spec;
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  os << "family " << id << " N=" << N;
  switch (id) {
    case 1: os << " s=" << s; break;
    case 2:
    case 3: os << " s=" << s << " alpha=" << alpha; break;
    case 5: os << " nu=" << nu; break;
    case 6: os << " alpha=" << alpha; break;
    default: break;
  }
  return os.str();
}

void validate(const FamilySpec& spec) {
  if (spec.id < 1 || spec.id > 6) throw std::invalid_argument("family id must be in 1..6");
  if (spec.N < 0) throw std::invalid_argument("N must be non-negative");
  switch (spec.id) {
    case 1:
      if (nonpositive_integer(spec.s)) throw ParameterError("family 1 requires s not in {0,-1,-2,...}");
      break;
    case 2:
      if (nonpositive_integer(spec.s)) throw ParameterError("family 2 requires s not in {0,-1,-2,...}");
      if (spec.alpha.is_zero()) throw ParameterError("family 2 requires alpha != 0");
      break;
    case 3:
      if (nonpositive_integer(spec.s)) throw ParameterError("family 3 requires s not in {0,-1,-2,...}");
      for (int n = 0; n < spec.N; ++n)
        if ((spec.alpha + Rational(n)).is_zero()) throw ParameterError("family 3 requires alpha+n != 0 for n < N");
      break;
    case 6:
      if (spec.alpha.is_zero()) throw ParameterError("family 6 requires alpha != 0");
      break;
    default:
      break;
  }
}

std::string BasisElement::label() const {
  std::string out = "f" + std::to_string(n);
  if (polarity == Polarity::plus) out += "+";
  if (polarity == Polarity::minus) out += "-";
  return out;
}

std::vector<BasisElement> basis(const FamilySpec& spec) {
  std::vector<BasisElement> out;
  if (spec.single_chain()) {
    for (int n = 0; n <= spec.N; ++n) out.push_back({n, Polarity::single});
    return out;
  }
  for (int n = 0; n <= spec.N; ++n) out.push_back({n, Polarity::plus});
  for (int n = 0; n <= spec.N; ++n) out.push_back({n, Polarity::minus});
  return out;
}

std::size_t basis_index(const FamilySpec& spec, const BasisElement& e) {
  if (e.n < 0 || e.n > spec.N) throw std::out_of_range("basis element index outside 0..N");
  const auto n = static_cast<std::size_t>(e.n);
  return e.polarity == Polarity::minus ? static_cast<std::size_t>(spec.N) + 1 + n : n;
}

FundamentalPair fundamental_pair_rules(const FamilySpec& spec) {
  validate(spec);
  const Rational& s = spec.s;
  const Rational& a = spec.alpha;
  const Rational& nu = spec.nu;
  RationalOp ode;
  std::optional<RationalPair> minus;
  switch (spec.id) {
    case 1:  // x F'' + s F' − F = 0;  0F1(;s+1;x) = s·F'
      ode = term(2, x_pow(1)) + term(1, s) + RationalOp(Rational(-1));
      minus = RationalPair{{}, RationalPoly(s)};
      break;
    case 2:  // x F'' + (s − x) F' − α F = 0;  1F1(α+1;s+1;x) = (s/α)·F'
    case 3:
      ode = term(2, x_pow(1)) + term(1, RationalPoly(s) - x_pow(1)) + RationalOp(-a);
      if (spec.id == 2) minus = RationalPair{{}, RationalPoly(s / a)};
      break;
    case 4:  // F'' − x F = 0;  f_0^- = F'
      ode = term(2, Rational(1)) - RationalOp(x_pow(1));
      minus = RationalPair{{}, RationalPoly(Rational(1))};
      break;
    case 5:  // x² F'' + x F' − (x² + ν²) F = 0;  K_{ν+1} = (ν/x)·K_ν − K_ν'
      ode = term(2, x_pow(2)) + term(1, x_pow(1)) - RationalOp(x_pow(2) + RationalPoly(nu * nu));
      minus = RationalPair{x_pow(-1, nu), RationalPoly(Rational(-1))};
      break;
    case 6:  // F'' − 2x F' − 4α F = 0;  x·1F1(α+1;3/2;x²) = F'/(4α)
      ode = term(2, Rational(1)) - term(1, x_pow(1, 2)) - RationalOp(Rational(4) * a);
      minus = RationalPair{{}, RationalPoly((Rational(4) * a).inverse())};
      break;
    default:
      throw std::invalid_argument("family id must be in 1..6");
  }
  return {ode, rule_from_ode(ode), minus};
}

RationalPair contiguity_step(const RationalPair& f_n, const Rational& alpha_plus_n,
                             const SecondOrderRule<Rational>& rule) {
  if (alpha_plus_n.is_zero()) throw ParameterError("contiguity step with alpha+n = 0");
  return f_n + x_pow(1, alpha_plus_n.inverse()) * f_n.derivative(rule);
}

RationalPair to_pair(const FamilySpec& spec, const BasisElement& e) {
  const auto rules = fundamental_pair_rules(spec);
  if (e.n < 0 || e.n > spec.N) throw std::out_of_range("basis element index outside 0..N");
  if (spec.single_chain()) {
    RationalPair f{RationalPoly(Rational(1)), {}};
    for (int n = 0; n < e.n; ++n) f = contiguity_step(f, spec.alpha + Rational(n), rules.rule);
    return f;
  }
  const RationalPair base = e.polarity == Polarity::minus ? *rules.minus_generator : RationalPair{RationalPoly(Rational(1)), {}};
  return x_pow(e.n) * base;
}

std::vector<RationalPair> basis_pairs(const FamilySpec& spec) {
  const auto rules = fundamental_pair_rules(spec);
  std::vector<RationalPair> out;
  if (spec.single_chain()) {
    RationalPair f{RationalPoly(Rational(1)), {}};
    out.push_back(f);
    for (int n = 0; n < spec.N; ++n) {
      f = contiguity_step(f, spec.alpha + Rational(n), rules.rule);
      out.push_back(f);
    }
    return out;
  }
  const RationalPair plus{RationalPoly(Rational(1)), {}};
  for (int n = 0; n <= spec.N; ++n) out.push_back(x_pow(n) * plus);
  for (int n = 0; n <= spec.N; ++n) out.push_back(x_pow(n) * *rules.minus_generator);
  return out;
}

FamilyOperators family_operators(int id, const Parameters& p) {
  const Rational& s = p.s;
  const Rational& a = p.alpha;
  const Rational& nu = p.nu;
  const Rational& N = p.N;
  const RationalPoly x = x_pow(1);
  const RationalPoly x2 = x_pow(2);
  switch (id) {
    case 1:
      return {term(2, x2) + term(1, x * (s - Rational(2) * N)) - RationalOp(x),
              term(2, x) + term(1, s + Rational(1))};
    case 2:
      return {term(2, x2) + term(1, (RationalPoly(s - Rational(2) * N) - x) * x) + RationalOp(x * (N - a)),
              term(2, x) + term(1, RationalPoly(Rational(1) + s) - x)};
    case 3:
      return {term(2, x2) + term(1, (RationalPoly(s - N) - x) * x) - RationalOp(x * a),
              term(2, x) + term(1, RationalPoly(s) - x)};
    case 4:
      return {term(2, Rational(1)) - RationalOp(x),
              term(2, x) - term(1, Rational(1) + Rational(2) * N) - RationalOp(x2)};
    case 5:
      return {term(2, x2) + term(1, x * (Rational(1) - Rational(2) * N)) - RationalOp(x2),
              term(2, x) + term(1, Rational(2)) - RationalOp(x_pow(-1, nu * nu + nu) + x)};
    case 6:
      return {term(2, x) - term(1, x_pow(2, 2) + RationalPoly(Rational(1) + Rational(2) * N)) +
                  RationalOp(x * (Rational(2) * (N - Rational(2) * a))),
              term(2, Rational(1)) - term(1, x * Rational(2))};
    default:
      throw std::invalid_argument("family id must be in 1..6");
  }
}

FamilyOperators family_operators(const FamilySpec& spec) {
  validate(spec);
  return family_operators(spec.id, spec.parameters());
}

RationalPair apply_op(const RationalOp& op, const FamilySpec& spec, const BasisElement& e) {
  return apply_op(op, to_pair(spec, e), fundamental_pair_rules(spec).rule);
}

}  // namespace qes
