#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "qes/rabi.hpp"

using namespace qes;

namespace {

UPoly poly(std::vector<Rational> c) {
  std::reverse(c.begin(), c.end());
  return UPoly(std::move(c));
}

Rational q(long n, long d = 1) { return {n, d}; }

// det(M0 + lambda) for N = 0..7, highest power first; identical for both types.
const std::vector<UPoly>& frozen_determinants() {
  static const std::vector<UPoly> dets{
      poly({1, q(-3, 4)}),
      poly({1, q(1, 2), q(81, 16)}),
      poly({1, q(23, 4), q(-101, 16), q(-6075, 64)}),
      poly({1, 17, q(-525, 8), q(-20799, 16), q(893025, 256)}),
      poly({1, q(145, 4), q(-1267, 8), q(-327495, 32), q(3539925, 256), q(-217005075, 1024)}),
      poly({1, q(131, 2), q(-2049, 16), q(-819851, 16), q(-36739409, 256), q(933421923, 512), q(78772842225, 4096)}),
      poly({1, q(427, 4), q(7357, 16), q(-12014577, 64), q(-541764333, 256), q(44726577489, 1024),
            q(1730361683439, 4096), q(-39937831008075, 16384)}),
      poly({1, 162, q(9975, 4), q(-4403897, 8), q(-1849849917, 128), q(44066729367, 128), q(7894151026839, 1024),
            q(-95774509266975, 2048), q(26958035930450625, 65536)}),
  };
  return dets;
}

const std::vector<std::vector<double>>& frozen_ratios() {
  static const std::vector<std::vector<double>> ratios{
      {2.0},
      {},
      {0.919048136607},
      {0.640085051286, 1.072590063900},
      {0.437962828920},
      {0.347165605985, 0.611193164425},
      {0.287387677187, 0.460513616924, 0.828408460314},
      {0.245843859514, 0.344260947602},
  };
  return ratios;
}

double hyp1f1(double a, double b, double x) {
  double term = 1, sum = 1;
  for (int k = 0; k < 400; ++k) {
    term *= (a + k) * x / ((b + k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double eval(const std::map<int, double>& p, double z) {
  double sum = 0;
  for (const auto& [e, c] : p) sum += c * std::pow(z, e);
  return sum;
}

double apply(const QuadOp& op, const std::function<double(double)>& f, double z) {
  const double h = 1e-3;
  const double f0 = f(z), fp = f(z + h), fm = f(z - h), fp2 = f(z + 2 * h), fm2 = f(z - 2 * h);
  const double d1 = (-fp2 + 8 * fp - 8 * fm + fm2) / (12 * h);
  const double d2 = (-fp2 + 16 * fp - 30 * f0 + 16 * fm - fm2) / (12 * h * h);
  REQUIRE(op.order() <= 2);
  return op.coeff(0).evaluate(z) * f0 + op.coeff(1).evaluate(z) * d1 + op.coeff(2).evaluate(z) * d2;
}

}  // namespace

TEST_SUITE("rabi") {

TEST_CASE("configuration constants") {
  for (auto type : {SolutionType::I, SolutionType::II}) {
    const auto c = RabiConfig::make(2, type);
    CHECK(c.cos2t * c.cos2t + c.sin2t * c.sin2t == QuadScalar(1));
    const QuadScalar tan2t = c.sin2t / c.cos2t;
    const QuadScalar tan4t = QuadScalar(2) * tan2t / (QuadScalar(1) - tan2t * tan2t);
    const QuadScalar expected(0, Rational(10, 23), 0, 0);
    CHECK(tan4t == (type == SolutionType::I ? expected : -expected));
    CHECK(c.g * c.g == QuadScalar(Rational(1, 24)));
    CHECK(c.g.to_double() == doctest::Approx(coupling_value()).epsilon(1e-15));
    CHECK(c.dimension() == 3);
  }
  const auto one = RabiConfig::make(2, SolutionType::I);
  CHECK(one.s == Rational(1, 2));
  CHECK(one.alpha == Rational(-5, 4));
  CHECK(one.offset == Rational(-4) - Rational(1, 2) + Rational(1, 8));
  const auto two = RabiConfig::make(2, SolutionType::II);
  CHECK(two.s == Rational(3, 2));
  CHECK(two.alpha == Rational(1, 4));
  CHECK(two.offset == Rational(-4) + Rational(13, 2) + Rational(49, 8));
  CHECK(parse_solution_type("ii") == SolutionType::II);
  CHECK(parse_solution_type("1") == SolutionType::I);
  CHECK_THROWS(parse_solution_type("III"));
  CHECK_THROWS(RabiConfig::make(-1, SolutionType::I));
}

TEST_CASE("energies match the listed row") {
  for (const auto& row : listed_table()) {
    const auto c = RabiConfig::make(row.dimension - 1, SolutionType::I);
    CHECK(c.energy.to_double() == doctest::Approx(energy_value(row.dimension - 1)).epsilon(1e-14));
    CHECK(std::abs(energy_value(row.dimension - 1) - row.energy) < 1e-5);
  }
}

TEST_CASE("fourth-order operator") {
  const auto c = RabiConfig::make(2, SolutionType::I);
  const auto L = build_L(c);
  CHECK(L.fixed.order() == 4);
  CHECK(L.a_hat.coeff(2) == QuadPoly(QuadScalar(0, 0, 0, Rational(1, 6))));
  const auto free = build_L(QuadScalar(0), QuadScalar(1), QuadScalar(1), QuadScalar(0));
  CHECK(free.c_hat == QuadOp::term(1, QuadPoly::monomial(1)));
  CHECK(free.a_hat.is_zero());
  // Without coupling L = -(c - E)^2, a square of a first-order operator.
  const QuadOp shifted = free.c_hat - QuadOp(QuadScalar(1));
  CHECK(free.fixed == -(shifted * shifted));
}

TEST_CASE("gauge identities hold exactly") {
  for (auto type : {SolutionType::I, SolutionType::II})
    for (int N = 0; N <= 7; ++N) {
      const auto c = RabiConfig::make(N, type);
      INFO(to_string(type) << " N=" << N);
      CHECK(verify_gauge_identity(c).holds());
    }
}

TEST_CASE("gauge identity negative controls") {
  const auto c = RabiConfig::make(3, SolutionType::I);
  auto doubled = c.gauge;
  doubled.eta = doubled.eta * QuadScalar(2);
  CHECK(!verify_gauge_identity(c, doubled).holds());
  auto with_z = c.gauge;
  with_z.with_z = true;
  CHECK(!verify_gauge_identity(c, with_z).holds());
  auto wrong = c;
  wrong.linear = Rational(-8);
  CHECK(!verify_gauge_identity(wrong).holds());
  auto swapped = RabiConfig::make(3, SolutionType::II);
  swapped.sin2t = -swapped.sin2t;
  CHECK(!verify_gauge_identity(swapped).holds());
}

TEST_CASE("characteristic polynomial routes agree") {
  for (int N = 0; N <= 7; ++N) {
    const auto m = reduced_matrix(RabiConfig::make(N, SolutionType::I));
    const auto fl = characteristic_polynomial(m);
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= N + 1; ++t) {
      Matrix<Rational> shifted = Matrix<Rational>::identity(m.rows()) * Rational(t) - m;
      xs.emplace_back(t);
      ys.push_back(shifted.determinant());
    }
    CHECK(fl == interpolate(xs, ys));
  }
}

TEST_CASE("frozen determinants and roots") {
  for (auto type : {SolutionType::I, SolutionType::II})
    for (int N = 0; N <= 7; ++N) {
      const auto result = solve_frequencies(RabiConfig::make(N, type));
      INFO(to_string(type) << " N=" << N);
      CHECK(result.determinant == frozen_determinants()[static_cast<std::size_t>(N)]);
      CHECK(result.adjugate_certificate);
      const auto& expected = frozen_ratios()[static_cast<std::size_t>(N)];
      REQUIRE(result.roots.size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& root = result.roots[i];
        CHECK(root.ratio == doctest::Approx(expected[i]).epsilon(1e-11));
        CHECK(root.lambda_value > 0);
        CHECK(root.omega0 == doctest::Approx(2.0 / root.ratio));
        CHECK(result.determinant(root.lambda.lower).sign() * result.determinant(root.lambda.upper).sign() <= 0);
        CHECK(root.null_residual < 1e-10);
        CHECK(root.coefficients.size() == static_cast<std::size_t>(N) + 1);
      }
    }
}

TEST_CASE("root isolation") {
  // (t^2 - 2)(3t - 1)(t + 5)^2
  const UPoly p = poly({1, 0, -2}) * poly({3, -1}) * poly({1, 5}) * poly({1, 5});
  const auto roots = isolate_real_roots(p, Rational(1, 1000000000000LL));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].midpoint() == doctest::Approx(-5));
  CHECK(roots[1].midpoint() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(roots[2].lower <= Rational(1, 3));
  CHECK(roots[2].upper >= Rational(1, 3));
  CHECK(roots[2].width() <= Rational(1, 1000000000000LL));
  CHECK(roots[3].midpoint() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  const SturmSequence sturm(squarefree_part(p));
  CHECK(sturm.count(Rational(-10), Rational(10)) == 4);
  CHECK(sturm.count(Rational(0), Rational(1)) == 1);
  CHECK(gcd(p, p.derivative()) == poly({1, 5}));
}

TEST_CASE("growth of the solutions") {
  for (auto type : {SolutionType::I, SolutionType::II}) {
    const auto result = solve_frequencies(RabiConfig::make(2, type));
    CHECK(result.growth_rate == QuadScalar(0, Rational(1, 4), 0, 0));
    CHECK(result.bargmann_normalizable);
  }
}

TEST_CASE("closed-form claims are evaluated") {
  const auto& claims = closed_form_claims();
  REQUIRE(claims.size() == 2);
  CHECK(claims[0].ratio == doctest::Approx(1 / std::sqrt(11.0 / 12 + std::sqrt(42.0) / 3)));
  for (const auto& claim : claims) {
    const auto report = check_claim(claim);
    CHECK(std::isfinite(report.nearest_root));
    CHECK(report.nearest_root == doctest::Approx(0.919048136607));
    CHECK(std::isfinite(report.coefficient_residual));
  }
}

TEST_CASE("uncoupled Fock spectrum") {
  const double omega0 = 0.8;
  for (int parity = 0; parity <= 1; ++parity) {
    auto values = fock_spectrum(omega0, 0.0, 12, parity);
    std::vector<double> expected;
    for (int n = parity; n < 12; n += 2) {
      expected.push_back(n + omega0 / 2);
      expected.push_back(n - omega0 / 2);
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(values.size() == expected.size());
    for (std::size_t i = 0; i < values.size(); ++i) CHECK(values[i] == doctest::Approx(expected[i]));
  }
  // With omega0 = 2E the level 0 + omega0/2 sits exactly on E.
  const double target = energy_value(0);
  const auto check = fock_truncation_check(0, 1.0 / target, 100, 0.0);
  CHECK(check.discrepancy() < 1e-12);
  CHECK_THROWS(fock_truncation_check(2, 0.9, 50));
}

TEST_CASE("Fock diagonalization confirms the computed roots") {
  for (int N = 0; N <= 7; ++N) {
    const auto result = solve_frequencies(RabiConfig::make(N, SolutionType::I));
    for (const auto& root : result.roots) {
      const double d100 = fock_truncation_check(N, root.ratio, 100).discrepancy();
      const double d200 = fock_truncation_check(N, root.ratio, 200).discrepancy();
      const double d400 = fock_truncation_check(N, root.ratio, 400).discrepancy();
      INFO("N=" << N << " ratio " << root.ratio);
      CHECK(d400 < 1e-9);
      CHECK(d400 <= d100 + 1e-12);
      CHECK(d200 <= d100 + 1e-12);
    }
  }
  // Off a root the target energy is not in the spectrum.
  CHECK(fock_truncation_check(2, 0.8, 300).discrepancy() > 1e-3);
}

TEST_CASE("eigenfunctions solve the two-component system") {
  for (auto type : {SolutionType::I, SolutionType::II})
    for (int N : {2, 3, 6}) {
      const auto result = solve_frequencies(RabiConfig::make(N, type));
      const auto& c = result.config;
      const auto L = build_L(c);
      const double scale = c.scale.to_double(), eta = c.gauge.eta.to_double(), E = c.energy.to_double();
      const double a = c.alpha.to_double(), s = c.s.to_double();
      for (std::size_t r = 0; r < result.roots.size(); ++r) {
        const auto ef = assemble_eigenfunction(result, r);
        REQUIRE(ef.terms.size() == static_cast<std::size_t>(N) + 1);
        auto phi = [&](double z) { return (c.gauge.with_z ? z : 1.0) * std::exp(eta * z * z); };
        auto G = [&](double z) { return hyp1f1(a, s, scale * z * z); };
        auto Gp = [&](double z) { return 2 * scale * z * (a / s) * hyp1f1(a + 1, s + 1, scale * z * z); };
        auto psi2 = [&](double z) { return phi(z) * (eval(ef.psi2_value, z) * G(z) + eval(ef.psi2_slope, z) * Gp(z)); };
        auto psi1 = [&](double z) { return phi(z) * (eval(ef.psi1_value, z) * G(z) + eval(ef.psi1_slope, z) * Gp(z)); };
        const double half_omega0 = ef.root.omega0 / 2;
        for (double z : {0.35, 0.8, 1.3}) {
          const double size = std::abs(psi1(z)) + std::abs(psi2(z)) + 1e-3;
          const double upper = half_omega0 * psi2(z) + apply(L.c_hat + L.a_hat, psi1, z) - E * psi1(z);
          const double lower = half_omega0 * psi1(z) + apply(L.c_hat - L.a_hat, psi2, z) - E * psi2(z);
          INFO(to_string(type) << " N=" << N << " root " << r << " z=" << z);
          CHECK(std::abs(upper) / size < 1e-6);
          CHECK(std::abs(lower) / size < 1e-6);
        }
      }
    }
}

}  // TEST_SUITE
