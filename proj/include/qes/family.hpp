#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qes/diff_op.hpp"
#include "qes/pair_element.hpp"
#include "qes/rational.hpp"

namespace qes {

using RationalPoly = LaurentPoly<Rational>;
using RationalOp = DiffOp<Rational>;
using RationalPair = PairElement<Rational>;

/// Parameter values of a family. N is rational here because the operators
/// depend polynomially on it, which the identity checks exploit.
struct Parameters {
  Rational s{0};
  Rational alpha{0};
  Rational nu{0};
  Rational N{0};
};

/// Raised when a parameter combination hits a pole of the basis construction.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One of the six basis families R_N^k.
///   1: x^n·0F1(;s;x),        x^n·0F1(;s+1;x)
///   2: x^n·1F1(α;s;x),       x^n·1F1(α+1;s+1;x)
///   3: 1F1(α+n;s;x)          (single chain, dimension N+1)
///   4: x^n·Ai(x),            x^n·Ai'(x)
///   5: x^n·K_ν(x),           x^n·K_{ν+1}(x)
///   6: x^n·1F1(α;1/2;x²),    x^{n+1}·1F1(α+1;3/2;x²)
struct FamilySpec {
  int id = 1;
  Rational s{0};
  Rational alpha{0};
  Rational nu{0};
  int N = 0;

  /// Validated construction; throws std::invalid_argument or ParameterError.
  static FamilySpec make(int id, int N, Rational s = 0, Rational alpha = 0, Rational nu = 0);

  [[nodiscard]] bool single_chain() const { return id == 3; }
  [[nodiscard]] std::size_t dimension() const {
    return single_chain() ? static_cast<std::size_t>(N) + 1 : 2 * (static_cast<std::size_t>(N) + 1);
  }
  [[nodiscard]] Parameters parameters() const { return {s, alpha, nu, Rational(N)}; }
  [[nodiscard]] std::string str() const;
};

/// Throws if the spec is malformed or sits on a pole.
void validate(const FamilySpec& spec);

enum class Polarity { plus, minus, single };

struct BasisElement {
  int n = 0;
  Polarity polarity = Polarity::plus;

  [[nodiscard]] std::string label() const;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Fixed basis order: (f_0^+..f_N^+, f_0^-..f_N^-), or (f_0..f_N) for family 3.
std::vector<BasisElement> basis(const FamilySpec& spec);
std::size_t basis_index(const FamilySpec& spec, const BasisElement& e);

struct FundamentalPair {
  RationalOp ode;                                   ///< annihilates F = f_0^+
  SecondOrderRule<Rational> rule;                   ///< F'' in terms of F, F'
  std::optional<RationalPair> minus_generator;      ///< f_0^- as a pair; empty for family 3
};

FundamentalPair fundamental_pair_rules(const FamilySpec& spec);

/// f_{n+1} = f_n + x/(α+n)·f_n' for 1F1(α+n;s;x).
RationalPair contiguity_step(const RationalPair& f_n, const Rational& alpha_plus_n,
                             const SecondOrderRule<Rational>& rule);

RationalPair to_pair(const FamilySpec& spec, const BasisElement& e);
std::vector<RationalPair> basis_pairs(const FamilySpec& spec);

struct FamilyOperators {
  RationalOp plus;
  RationalOp minus;
};

/// J_k^± of family `id` at the given parameters.
FamilyOperators family_operators(int id, const Parameters& p);
FamilyOperators family_operators(const FamilySpec& spec);

/// Symbolic image of a basis element under an operator.
RationalPair apply_op(const RationalOp& op, const FamilySpec& spec, const BasisElement& e);

}  // namespace qes
