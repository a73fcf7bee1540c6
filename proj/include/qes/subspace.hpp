#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qes/family.hpp"
#include "qes/matrix.hpp"

namespace qes {

/// Result of expressing a pair element in the family basis.
struct Decomposition {
  std::optional<std::vector<Rational>> coefficients;
  /// Zero when the element lies in the span; otherwise what is left after
  /// matching a maximal independent set of coefficient equations.
  RationalPair residual;

  [[nodiscard]] bool in_span() const { return coefficients.has_value(); }
};

class NotPreserved : public std::runtime_error {
 public:
  NotPreserved() : std::runtime_error("operator does not preserve subspace") {}
};

/// The ordered basis of a family subspace with its coefficient matrix cached.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(FamilySpec spec);

  [[nodiscard]] const FamilySpec& spec() const { return spec_; }
  [[nodiscard]] const SecondOrderRule<Rational>& rule() const { return rule_; }
  [[nodiscard]] const std::vector<BasisElement>& elements() const { return elements_; }
  [[nodiscard]] const std::vector<RationalPair>& pairs() const { return pairs_; }
  [[nodiscard]] std::size_t dimension() const { return pairs_.size(); }

  [[nodiscard]] RationalPair apply(const RationalOp& op, std::size_t index) const;
  [[nodiscard]] Decomposition decompose(const RationalPair& p) const;
  [[nodiscard]] RationalPair combine(const std::vector<Rational>& coefficients) const;
  /// Column j holds the expansion of op(basis_j). Throws NotPreserved.
  [[nodiscard]] Matrix<Rational> matrix_rep(const RationalOp& op) const;

 private:
  FamilySpec spec_;
  SecondOrderRule<Rational> rule_;
  std::vector<BasisElement> elements_;
  std::vector<RationalPair> pairs_;
};

Decomposition decompose(const RationalPair& p, const FamilySpec& spec);
Matrix<Rational> matrix_rep(const RationalOp& op, const FamilySpec& spec);

/// One term c·target of a closed-form action; target.n may fall outside 0..N,
/// in which case the coefficient must vanish.
struct ActionTerm {
  BasisElement target;
  Rational coefficient;
};

enum class Generator { plus, minus };

std::string to_string(Generator g);

/// Closed-form image of a basis element under J_k^±.
std::vector<ActionTerm> closed_form_action(const FamilySpec& spec, Generator g, const BasisElement& e);

/// Matrix assembled from the closed-form actions (out-of-range terms dropped).
Matrix<Rational> closed_form_matrix(const FamilySpec& spec, Generator g);

struct InvarianceMismatch {
  Generator generator;
  BasisElement source;
  std::string detail;
};

struct InvarianceReport {
  FamilySpec spec;
  std::size_t applications = 0;
  std::vector<InvarianceMismatch> mismatches;

  [[nodiscard]] bool passed() const { return mismatches.empty(); }
};

/// Applies both generators to every basis element, decomposes the image and
/// compares it with the closed-form action, including the cutoff terms.
InvarianceReport verify_invariance(const FamilySpec& spec);

/// Family 2 at (s−1, α−1/2+N/2, (N−1)/2) has the operators of family 3 at
/// (s, α, N). Requires N odd.
bool family2_reduces_to_family3(const Rational& s, const Rational& alpha, int N);

}  // namespace qes
