#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qes/family.hpp"
#include "qes/gauge.hpp"
#include "qes/matrix.hpp"
#include "qes/quad_scalar.hpp"
#include "qes/univariate.hpp"

namespace qes {

using QuadPoly = LaurentPoly<QuadScalar>;
using QuadOp = DiffOp<QuadScalar>;
using QuadPair = PairElement<QuadScalar>;

enum class SolutionType { I, II };

std::string to_string(SolutionType t);
/// Accepts "I"/"1" and "II"/"2".
SolutionType parse_solution_type(const std::string& text);

/// Constants of the two-photon Rabi reduction for one N and solution type,
/// in units ω = 1. The pump term enters only through λ = 3ω₀²/4.
struct RabiConfig {
  int N = 0;
  SolutionType type = SolutionType::I;
  Rational s;
  Rational alpha;
  QuadScalar g;       ///< coupling, 1/(2√6)
  QuadScalar energy;  ///< (N+1)/√3 − 1/2
  QuadScalar cos2t;
  QuadScalar sin2t;
  GaugeFactor<QuadScalar> gauge;
  QuadScalar scale;   ///< x = scale·z²
  Rational linear;    ///< coefficient of J⁻ in the reduced operator
  Rational offset;    ///< constant of the reduced operator without λ

  static RabiConfig make(int N, SolutionType type);

  [[nodiscard]] FamilySpec family() const { return FamilySpec::make(3, N, s, alpha); }
  [[nodiscard]] std::size_t dimension() const { return static_cast<std::size_t>(N) + 1; }
};

/// The operators â, ĉ and the fourth-order operator
///   L(λ) = (â+ĉ)(â−ĉ) + 2E·ĉ − E² + λ/3.
struct RabiOperator {
  QuadOp a_hat;
  QuadOp c_hat;
  QuadOp fixed;  ///< L without the λ/3 term

  [[nodiscard]] QuadOp at(const Rational& lambda) const;
};

RabiOperator build_L(const QuadScalar& g, const QuadScalar& energy, const QuadScalar& cos2t, const QuadScalar& sin2t);
RabiOperator build_L(const RabiConfig& config);

/// (1/3)·[2(J⁻)² + [J⁺,J⁻] − 7J⁺ + linear·J⁻ + offset] of family 3, in x.
RationalOp reduced_operator(const RabiConfig& config);

struct GaugeCheck {
  QuadOp lhs;       ///< φ⁻¹∘L(λ)∘φ at λ = 0
  QuadOp rhs;       ///< reduced operator under x = scale·z², at λ = 0
  QuadOp residual;  ///< a nonzero residual at λ = 0 or λ = 1, if any
  [[nodiscard]] bool holds() const { return residual.is_zero(); }
};

/// Compares both sides at λ = 0 and λ = 1; both are affine in λ.
GaugeCheck verify_gauge_identity(const RabiConfig& config);
/// Same check with an arbitrary gauge factor, for negative controls.
GaugeCheck verify_gauge_identity(const RabiConfig& config, const GaugeFactor<QuadScalar>& gauge);

/// M₀ = 2(j⁻)² + [j⁺,j⁻] − 7j⁺ + linear·j⁻ + offset·I on R_N^3.
Matrix<Rational> reduced_matrix(const RabiConfig& config);

struct FrequencyRoot {
  RootInterval lambda;              ///< isolating interval for λ
  double lambda_value = 0;
  double ratio = 0;                 ///< 2ω/ω₀ = √(3/λ)
  double omega0 = 0;                ///< ω₀ = 2√(λ/3)
  std::vector<UPoly> null_vector;   ///< adj(M₀+λI) column, polynomial in λ
  std::vector<double> coefficients; ///< null vector at the root, last nonzero entry scaled to 1
  double null_residual = 0;         ///< |(M₀+λI)v| / |v| at the interval midpoint
};

struct SpectralResult {
  RabiConfig config;
  Matrix<Rational> m0;
  UPoly determinant;                ///< det(M₀ + λI) as a polynomial in λ
  bool adjugate_certificate = false;  ///< (M₀+λI)·adj = det·I as polynomials
  std::vector<FrequencyRoot> roots; ///< λ > 0 only, increasing ratio
  QuadScalar growth_rate;           ///< ψ₂ grows like exp(rate·|z|²)
  bool bargmann_normalizable = false;
};

SpectralResult solve_frequencies(const RabiConfig& config);

/// One term c_n·f_n of ψ₂/φ and its contribution to ψ₁/φ, both as pairs
/// over G(z) = 1F1(α; s; scale·z²).
struct EigenfunctionTerm {
  int n = 0;
  Rational alpha_n;
  double coefficient = 0;
  QuadPair psi2;  ///< f_n(scale·z²)
  QuadPair psi1;  ///< φ⁻¹(E + â − ĉ)φ applied to f_n; multiply by 2/ω₀
};

struct Eigenfunction {
  FrequencyRoot root;
  SecondOrderRule<QuadScalar> rule;  ///< G'' in terms of G, G'
  std::vector<EigenfunctionTerm> terms;
  std::map<int, double> psi2_value, psi2_slope;  ///< Σ c_n f_n
  std::map<int, double> psi1_value, psi1_slope;  ///< (2/ω₀) Σ c_n ψ₁-terms
};

Eigenfunction assemble_eigenfunction(const SpectralResult& result, std::size_t root_index);

/// Reference values of 2ω/ω₀ and E/ω for dimensions 3, 5, 6, 7 and 8.
struct ListedRow {
  int dimension = 0;
  std::vector<double> type_i;
  std::vector<double> type_ii;
  double energy = 0;
};
const std::vector<ListedRow>& listed_table();

/// Closed-form root claimed for N = 2 and its coefficient vector.
struct ClosedFormClaim {
  SolutionType type;
  std::string expression;
  double ratio = 0;                  ///< 2ω/ω₀
  std::vector<double> coefficients;  ///< (c_0, c_1, c_2)
};
const std::vector<ClosedFormClaim>& closed_form_claims();

struct ClaimReport {
  ClosedFormClaim claim;
  double nearest_root = 0;           ///< NaN when the root set is empty
  bool in_root_set = false;          ///< within 5·10⁻⁵
  double coefficient_residual = 0;   ///< |(M₀+λI)c| / |c| at the claimed λ
};
ClaimReport check_claim(const ClosedFormClaim& claim);

/// Eigenvalues of H = (ω₀/2)σz + b⁺b + 2g(b² + b⁺²)σx (ω = 1) restricted to
/// photon-number parity `parity` (0 even, 1 odd), with `cutoff` photon states.
std::vector<double> fock_spectrum(double omega0, double g, int cutoff, int parity);

struct FockCheck {
  double discrepancy_even = 0;
  double discrepancy_odd = 0;
  [[nodiscard]] double discrepancy() const { return std::min(discrepancy_even, discrepancy_odd); }
};

/// Distance from (N+1)/√3 − 1/2 to the nearest eigenvalue at ω₀ = 2/ratio.
FockCheck fock_truncation_check(int N, double ratio, int cutoff, double g);
FockCheck fock_truncation_check(int N, double ratio, int cutoff);

double coupling_value();
double energy_value(int N);

}  // namespace qes
