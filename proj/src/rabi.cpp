#include "qes/rabi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qes/subspace.hpp"

namespace qes {

namespace {

QuadOp to_quad(const RationalOp& op) {
  return op.map_coefficients<QuadScalar>([](const Rational& r) { return QuadScalar(r); });
}

QuadPoly to_quad(const RationalPoly& p) {
  return p.map_coefficients<QuadScalar>([](const Rational& r) { return QuadScalar(r); });
}

// f(x) = R·F + S·F' in x becomes R(cz²)·G + S(cz²)/(2cz)·G' with G(z) = F(cz²).
QuadPair to_z_pair(const RationalPair& p, const QuadScalar& scale) {
  return {to_quad(p.value).substitute_square(scale),
          to_quad(p.slope).substitute_square(scale) * QuadPoly::monomial(-1, (QuadScalar(2) * scale).inverse())};
}

double norm(const std::vector<double>& v) {
  double acc = 0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

std::string to_string(SolutionType t) { return t == SolutionType::I ? "I" : "II"; }

SolutionType parse_solution_type(const std::string& text) {
  if (text == "I" || text == "1" || text == "i") return SolutionType::I;
  if (text == "II" || text == "2" || text == "ii") return SolutionType::II;
  throw std::invalid_argument("solution type must be I or II");
}

RabiConfig RabiConfig::make(int N, SolutionType type) {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  RabiConfig c;
  c.N = N;
  c.type = type;
  const Rational n(N);
  const QuadScalar eta(0, Rational(1, 8), 0, 0);
  const QuadScalar xi(0, Rational(3, 8), 0, 0);
  c.g = QuadScalar(0, 0, 0, Rational(1, 12));
  c.energy = QuadScalar(Rational(-1, 2), 0, (n + Rational(1)) / Rational(3), 0);
  c.cos2t = QuadScalar(0, 0, Rational(5, 9), 0);
  if (type == SolutionType::I) {
    c.s = Rational(1, 2);
    c.alpha = Rational(-1, 4) - n / Rational(2);
    c.sin2t = QuadScalar(0, 0, 0, Rational(1, 9));
    c.gauge = {eta, false};
    c.scale = -xi;
    c.linear = Rational(4);
    c.offset = -n * n - n / Rational(4) + Rational(1, 8);
  } else {
    c.s = Rational(3, 2);
    c.alpha = Rational(5, 4) - n / Rational(2);
    c.sin2t = QuadScalar(0, 0, 0, Rational(-1, 9));
    c.gauge = {-eta, true};
    c.scale = xi;
    c.linear = Rational(-8);
    c.offset = -n * n + Rational(13) * n / Rational(4) + Rational(49, 8);
  }
  return c;
}

QuadOp RabiOperator::at(const Rational& lambda) const { return fixed + QuadOp(QuadScalar(lambda / Rational(3))); }

RabiOperator build_L(const QuadScalar& g, const QuadScalar& energy, const QuadScalar& cos2t, const QuadScalar& sin2t) {
  const QuadOp d2 = QuadOp::term(2, QuadScalar(1));
  const QuadOp z2 = QuadOp(QuadPoly::monomial(2));
  const QuadOp zd = QuadOp::term(1, QuadPoly::monomial(1));
  const QuadOp a_hat = (d2 + z2) * (QuadScalar(2) * g);
  const QuadOp c_hat = (d2 * (-sin2t) + zd * (QuadScalar(2) * cos2t) + z2 * sin2t + QuadOp(cos2t - QuadScalar(1))) *
                       QuadScalar(Rational(1, 2));
  const QuadOp fixed = (a_hat + c_hat) * (a_hat - c_hat) + c_hat * (QuadScalar(2) * energy) - QuadOp(energy * energy);
  return {a_hat, c_hat, fixed};
}

RabiOperator build_L(const RabiConfig& config) { return build_L(config.g, config.energy, config.cos2t, config.sin2t); }

RationalOp reduced_operator(const RabiConfig& config) {
  const auto ops = family_operators(config.family());
  const RationalOp& jp = ops.plus;
  const RationalOp& jm = ops.minus;
  const RationalOp inner =
      jm * jm * Rational(2) + commutator(jp, jm) - jp * Rational(7) + jm * config.linear + RationalOp(config.offset);
  return inner * Rational(1, 3);
}

GaugeCheck verify_gauge_identity(const RabiConfig& config) { return verify_gauge_identity(config, config.gauge); }

GaugeCheck verify_gauge_identity(const RabiConfig& config, const GaugeFactor<QuadScalar>& gauge) {
  const RabiOperator L = build_L(config);
  const QuadOp reduced = substitute_square(to_quad(reduced_operator(config)), config.scale);
  GaugeCheck check;
  for (int lambda = 0; lambda <= 1; ++lambda) {
    const QuadScalar shift(Rational(lambda, 3));
    const QuadOp lhs = conjugate_by_gauge(L.at(Rational(lambda)), gauge);
    const QuadOp rhs = reduced + QuadOp(shift);
    const QuadOp residual = lhs - rhs;
    if (lambda == 0) {
      check.lhs = lhs;
      check.rhs = rhs;
    }
    if (!residual.is_zero()) check.residual = residual;
  }
  return check;
}

Matrix<Rational> reduced_matrix(const RabiConfig& config) {
  const SubspaceBasis subspace(config.family());
  const auto ops = family_operators(config.family());
  const Matrix<Rational> jp = subspace.matrix_rep(ops.plus);
  const Matrix<Rational> jm = subspace.matrix_rep(ops.minus);
  const std::size_t n = subspace.dimension();
  return Rational(2) * (jm * jm) + commutator(jp, jm) - Rational(7) * jp + config.linear * jm +
         config.offset * Matrix<Rational>::identity(n);
}

SpectralResult solve_frequencies(const RabiConfig& config) {
  SpectralResult result;
  result.config = config;
  result.m0 = reduced_matrix(config);
  const std::size_t n = result.m0.rows();

  // det(M₀ + λI) = (−1)^n · det(−λI − M₀).
  const UPoly p = characteristic_polynomial(result.m0);
  std::vector<Rational> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) q[k] = ((n + k) % 2 == 0 ? Rational(1) : Rational(-1)) * p.coeff(static_cast<int>(k));
  result.determinant = UPoly(q);

  // adj(M₀ + λI) by interpolation through nonsingular integer points.
  std::vector<Rational> nodes;
  std::vector<Matrix<Rational>> adjugates;
  for (long t = 0; nodes.size() < n; ++t) {
    const Rational lambda(t);
    const Rational det = result.determinant(lambda);
    if (det.is_zero()) continue;
    const Matrix<Rational> a = result.m0 + lambda * Matrix<Rational>::identity(n);
    Matrix<Rational> adj(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n);
      e[j] = det;
      adj.set_column(j, *a.solve(e));
    }
    nodes.push_back(lambda);
    adjugates.push_back(std::move(adj));
  }
  std::vector<std::vector<UPoly>> adjugate(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> values;
      for (const auto& a : adjugates) values.push_back(a(i, j));
      adjugate[i][j] = interpolate(nodes, values);
    }
  result.adjugate_certificate = true;
  for (std::size_t i = 0; i < n && result.adjugate_certificate; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      UPoly entry;
      for (std::size_t k = 0; k < n; ++k) {
        UPoly factor = UPoly::constant(result.m0(i, k));
        if (i == k) factor = factor + UPoly::x();
        entry = entry + factor * adjugate[k][j];
      }
      const UPoly expected = i == j ? result.determinant : UPoly();
      if (entry != expected) {
        result.adjugate_certificate = false;
        break;
      }
    }

  const Rational tolerance(1, 1000000000000000000LL);
  for (RootInterval interval : isolate_real_roots(result.determinant, tolerance)) {
    if (interval.upper.sign() <= 0) continue;
    if (interval.lower.sign() <= 0) {
      const UPoly core = squarefree_part(result.determinant);
      const int at_zero = core(Rational(0)).sign();
      if (at_zero == 0 || at_zero == core(interval.upper).sign()) continue;
      interval.lower = Rational(0);
    }
    FrequencyRoot root;
    root.lambda = interval;
    const Rational mid = (interval.lower + interval.upper) * Rational(1, 2);
    root.lambda_value = mid.to_double();
    root.ratio = std::sqrt(3.0 / root.lambda_value);
    root.omega0 = 2.0 * std::sqrt(root.lambda_value / 3.0);

    // Column of the adjugate with the largest norm at the root.
    double best = -1;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> values;
      for (std::size_t i = 0; i < n; ++i) values.push_back(adjugate[i][j](mid).to_double());
      const double size = norm(values);
      if (size > best) {
        best = size;
        root.null_vector.clear();
        for (std::size_t i = 0; i < n; ++i) root.null_vector.push_back(adjugate[i][j]);
      }
    }
    std::vector<Rational> exact;
    for (const auto& entry : root.null_vector) exact.push_back(entry(mid));
    std::size_t pivot = n;
    while (pivot > 0 && exact[pivot - 1].is_zero()) --pivot;
    const Rational scale = pivot > 0 ? exact[pivot - 1].inverse() : Rational(1);
    for (const auto& v : exact) root.coefficients.push_back((v * scale).to_double());
    const auto image = (result.m0 + mid * Matrix<Rational>::identity(n)) * exact;
    std::vector<double> image_values;
    std::vector<double> exact_values;
    for (std::size_t i = 0; i < n; ++i) {
      image_values.push_back(image[i].to_double());
      exact_values.push_back(exact[i].to_double());
    }
    root.null_residual = norm(image_values) / norm(exact_values);

    const bool duplicate = !result.roots.empty() &&
                           std::abs(result.roots.back().ratio - root.ratio) <= 1e-9 * root.ratio;
    if (!duplicate) result.roots.push_back(std::move(root));
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const FrequencyRoot& a, const FrequencyRoot& b) { return a.ratio < b.ratio; });

  // exp(η z²)·1F1(·; ·; c z²) grows like exp((|c| + η·sgn c)|z|²) along the
  // direction where c z² is positive and like exp(−η·sgn c·|z|²) elsewhere.
  const bool positive_scale = config.scale.to_double() > 0;
  const QuadScalar eta_signed = positive_scale ? config.gauge.eta : -config.gauge.eta;
  const QuadScalar abs_scale = positive_scale ? config.scale : -config.scale;
  const QuadScalar along = abs_scale + eta_signed;
  const QuadScalar across = -eta_signed;
  result.growth_rate = along.to_double() >= across.to_double() ? along : across;
  result.bargmann_normalizable = result.growth_rate.to_double() < 0.5;
  return result;
}

Eigenfunction assemble_eigenfunction(const SpectralResult& result, std::size_t root_index) {
  const RabiConfig& config = result.config;
  Eigenfunction out;
  out.root = result.roots.at(root_index);
  const FamilySpec spec = config.family();
  const QuadOp ode_z = substitute_square(to_quad(fundamental_pair_rules(spec).ode), config.scale);
  out.rule = rule_from_ode(ode_z);

  const RabiOperator L = build_L(config);
  const QuadOp k = conjugate_by_gauge(QuadOp(config.energy) + L.a_hat - L.c_hat, config.gauge);
  const double psi1_scale = 2.0 / out.root.omega0;
  const auto pairs = basis_pairs(spec);
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    EigenfunctionTerm term;
    term.n = static_cast<int>(n);
    term.alpha_n = config.alpha + Rational(static_cast<long>(n));
    term.coefficient = out.root.coefficients[n];
    term.psi2 = to_z_pair(pairs[n], config.scale);
    term.psi1 = apply_op(k, term.psi2, out.rule);
    for (const auto& [e, c] : term.psi2.value.terms()) out.psi2_value[e] += term.coefficient * c.to_double();
    for (const auto& [e, c] : term.psi2.slope.terms()) out.psi2_slope[e] += term.coefficient * c.to_double();
    for (const auto& [e, c] : term.psi1.value.terms()) out.psi1_value[e] += psi1_scale * term.coefficient * c.to_double();
    for (const auto& [e, c] : term.psi1.slope.terms()) out.psi1_slope[e] += psi1_scale * term.coefficient * c.to_double();
    out.terms.push_back(std::move(term));
  }
  return out;
}

const std::vector<ListedRow>& listed_table() {
  static const std::vector<ListedRow> rows{
      {3, {0.44315}, {0.79838}, 1.23205},
      {5, {1.68889}, {0.79838}, 2.38675},
      {6, {3.03496}, {2.23006, 2.75234}, 2.96410},
      {7, {2.72766, 3.60267}, {3.43545}, 3.54145},
      {8, {2.10305, 3.74421, 3.90266}, {2.66128, 4.08801}, 4.11880},
  };
  return rows;
}

const std::vector<ClosedFormClaim>& closed_form_claims() {
  static const std::vector<ClosedFormClaim> claims{
      {SolutionType::I,
       "omega0/(2 omega) = sqrt(11/12 + sqrt(42)/3)",
       1.0 / std::sqrt(11.0 / 12.0 + std::sqrt(42.0) / 3.0),
       {57.0 / 20.0 + 7.0 * std::sqrt(42.0) / 15.0, 5.0 / 3.0 + std::sqrt(42.0) / 30.0, 1.0}},
      {SolutionType::II,
       "omega0/(2 omega) = sqrt(sqrt(10)/3 - 5/12)",
       1.0 / std::sqrt(std::sqrt(10.0) / 3.0 - 5.0 / 12.0),
       {5.0 / 4.0 + std::sqrt(10.0) / 7.0, 31.0 / 21.0 + std::sqrt(10.0) / 42.0, 1.0}},
  };
  return claims;
}

ClaimReport check_claim(const ClosedFormClaim& claim) {
  ClaimReport report{claim, std::numeric_limits<double>::quiet_NaN(), false, 0};
  const RabiConfig config = RabiConfig::make(2, claim.type);
  const SpectralResult result = solve_frequencies(config);
  for (const auto& root : result.roots)
    if (std::isnan(report.nearest_root) || std::abs(root.ratio - claim.ratio) < std::abs(report.nearest_root - claim.ratio))
      report.nearest_root = root.ratio;
  report.in_root_set = !std::isnan(report.nearest_root) && std::abs(report.nearest_root - claim.ratio) <= 5e-5;

  const double lambda = 3.0 / (claim.ratio * claim.ratio);
  std::vector<double> image(3, 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      image[i] += (result.m0(i, j).to_double() + (i == j ? lambda : 0.0)) * claim.coefficients[j];
  report.coefficient_residual = norm(image) / norm(claim.coefficients);
  return report;
}

double coupling_value() { return 1.0 / (2.0 * std::sqrt(6.0)); }

double energy_value(int N) { return (N + 1) / std::sqrt(3.0) - 0.5; }

FockCheck fock_truncation_check(int N, double ratio, int cutoff) {
  return fock_truncation_check(N, ratio, cutoff, coupling_value());
}

FockCheck fock_truncation_check(int N, double ratio, int cutoff, double g) {
  if (cutoff < 100) throw std::invalid_argument("fock_truncation_check: cutoff must be at least 100");
  const double omega0 = 2.0 / ratio;
  const double target = energy_value(N);
  FockCheck check;
  for (int parity = 0; parity <= 1; ++parity) {
    double best = std::numeric_limits<double>::infinity();
    for (double e : fock_spectrum(omega0, g, cutoff, parity)) best = std::min(best, std::abs(e - target));
    (parity == 0 ? check.discrepancy_even : check.discrepancy_odd) = best;
  }
  return check;
}

}  // namespace qes
