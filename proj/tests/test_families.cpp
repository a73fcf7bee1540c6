#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "doctest.h"
#include "qes/family.hpp"
#include "qes/preserving.hpp"
#include "qes/sampling.hpp"
#include "qes/subspace.hpp"

using namespace qes;

namespace {

RationalPoly mono(int e, Rational c = 1) { return RationalPoly::monomial(e, c); }
RationalOp term(int k, RationalPoly p) { return RationalOp::term(k, std::move(p)); }

FamilySpec random_spec(int id, int N, SampleSource& src) {
  const Rational s = src.non_integer();
  const Rational alpha = src.non_integer();
  const Rational nu = src.non_integer();
  return FamilySpec::make(id, N, s, alpha, nu);
}

// Test-only series for the hypergeometric functions.
double hyp0f1(double b, double x) {
  double term = 1, sum = 1;
  for (int k = 0; k < 200; ++k) {
    term *= x / ((b + k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
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

double derivative(const std::function<double(double)>& f, double x) {
  const double h = 1e-5;
  return (f(x + h) - f(x - h)) / (2 * h);
}

double evaluate(const RationalPair& p, double x, const std::function<double(double)>& f) {
  return p.value.evaluate(x) * f(x) + p.slope.evaluate(x) * derivative(f, x);
}

/// Coordinates (component, exponent) of a pair element.
std::map<std::pair<int, int>, Rational> coordinates(const RationalPair& p) {
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [e, c] : p.value.terms()) out[{0, e}] = c;
  for (const auto& [e, c] : p.slope.terms()) out[{1, e}] = c;
  return out;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FamilySpec::make(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::make(0, 1), std::invalid_argument);
  CHECK_THROWS(FamilySpec::make(1, -1, Rational(1, 2)));
  CHECK_THROWS_AS(FamilySpec::make(1, 2, Rational(-2)), ParameterError);
  CHECK_THROWS_AS(FamilySpec::make(2, 2, Rational(1, 2), Rational(0)), ParameterError);
  CHECK_THROWS_AS(FamilySpec::make(3, 3, Rational(1, 2), Rational(-2)), ParameterError);
  CHECK_NOTHROW(FamilySpec::make(3, 2, Rational(1, 2), Rational(-2)));
  CHECK_THROWS_AS(FamilySpec::make(6, 2, 0, Rational(0)), ParameterError);
  CHECK_NOTHROW(FamilySpec::make(4, 3));
}

TEST_CASE("dimensions") {
  for (int id = 1; id <= 6; ++id)
    for (int N = 0; N <= 4; ++N) {
      const auto spec = FamilySpec::make(id, N, Rational(7, 3), Rational(-5, 4), Rational(2, 7));
      CHECK(spec.dimension() == (id == 3 ? N + 1 : 2 * (N + 1)));
      CHECK(basis(spec).size() == spec.dimension());
      for (const auto& e : basis(spec)) CHECK(basis(spec)[basis_index(spec, e)] == e);
    }
}

TEST_CASE("fundamental ODEs") {
  const Rational s(7, 3), a(-5, 4), nu(2, 7);
  CHECK(fundamental_pair_rules(FamilySpec::make(1, 0, s)).ode == term(2, mono(1)) + term(1, s) - RationalOp(Rational(1)));
  CHECK(fundamental_pair_rules(FamilySpec::make(5, 0, 0, 0, nu)).ode ==
        term(2, mono(2)) + term(1, mono(1)) - RationalOp(mono(2) + RationalPoly(nu * nu)));
  CHECK(fundamental_pair_rules(FamilySpec::make(6, 0, 0, a)).ode ==
        term(2, Rational(1)) - term(1, mono(1, 2)) - RationalOp(Rational(4) * a));
  CHECK(fundamental_pair_rules(FamilySpec::make(4, 0)).ode == term(2, Rational(1)) - RationalOp(mono(1)));
  CHECK(!fundamental_pair_rules(FamilySpec::make(3, 0, s, a)).minus_generator.has_value());
}

TEST_CASE("apply_op examples") {
  const auto f1 = FamilySpec::make(1, 2, Rational(7, 3));
  const auto ops1 = family_operators(f1);
  const auto image = apply_op(ops1.minus, f1, {0, Polarity::plus});
  CHECK(image == to_pair(f1, {0, Polarity::plus}) + Rational(3, 7) * to_pair(f1, {0, Polarity::minus}));

  const auto f4 = FamilySpec::make(4, 2);
  CHECK(apply_op(family_operators(f4).plus, f4, {0, Polarity::plus}).is_zero());

  const RationalOp x_d = term(1, mono(1));
  for (int n = 0; n <= 2; ++n)
    CHECK(apply_op(x_d, f1, {n, Polarity::plus}) == RationalPair{mono(n, n), mono(n + 1)});
}

TEST_CASE("decompose examples") {
  const auto f1 = FamilySpec::make(1, 2, Rational(7, 3));
  const SubspaceBasis b1(f1);
  const auto unit = b1.decompose(to_pair(f1, {2, Polarity::plus}));
  REQUIRE(unit.in_span());
  for (std::size_t i = 0; i < b1.dimension(); ++i) CHECK((*unit.coefficients)[i] == Rational(i == 2 ? 1 : 0));

  const RationalPair f_prime{RationalPoly(), RationalPoly(Rational(1))};
  const auto in_span = b1.decompose(f_prime);
  REQUIRE(in_span.in_span());
  CHECK((*in_span.coefficients)[basis_index(f1, {0, Polarity::minus})] == Rational(3, 7));
  CHECK(!b1.decompose({RationalPoly(), mono(-1)}).in_span());
  CHECK(!b1.decompose({mono(3), RationalPoly()}).in_span());
  CHECK(!b1.decompose({mono(3), RationalPoly()}).residual.is_zero());

  const Rational s(7, 3), a(-5, 4);
  const auto f3 = FamilySpec::make(3, 2, s, a);
  const auto d = decompose(apply_op(family_operators(f3).plus, f3, {1, Polarity::single}), f3);
  REQUIRE(d.in_span());
  const Rational C1(0), B1(-1);
  CHECK((*d.coefficients)[1] == s + (a + 1) * C1);
  CHECK((*d.coefficients)[2] == (a + 1) * B1);
  CHECK((*d.coefficients)[0] == a + 1 - s);
}

TEST_CASE("matrix_rep examples") {
  const auto f3 = FamilySpec::make(3, 2, Rational(1, 2), Rational(-5, 4));
  const auto m = matrix_rep(family_operators(f3).minus, f3);
  Matrix<Rational> expected(3, 3);
  expected(0, 0) = Rational(-5, 4);
  expected(1, 1) = Rational(-1, 4);
  expected(2, 2) = Rational(3, 4);
  CHECK(m == expected);
  CHECK(matrix_rep(RationalOp::identity(), f3) == Matrix<Rational>::identity(3));
  CHECK_THROWS_AS(matrix_rep(RationalOp(mono(1)), FamilySpec::make(1, 2, Rational(7, 3))), NotPreserved);
}

TEST_CASE("invariance with exact closed-form actions") {
  SampleSource src(31);
  for (int id = 1; id <= 6; ++id)
    for (int N = 0; N <= 3; ++N)
      for (int sample = 0; sample < 3; ++sample) {
        const auto spec = random_spec(id, N, src);
        const auto report = verify_invariance(spec);
        INFO(spec.str());
        CHECK(report.passed());
        CHECK(report.applications == 2 * spec.dimension());
      }
  const auto f3 = FamilySpec::make(3, 0, Rational(1, 3), Rational(5, 7));
  CHECK(matrix_rep(family_operators(f3).minus, f3)(0, 0) == Rational(5, 7));
}

TEST_CASE("closed-form matrices equal the symbolic representation") {
  SampleSource src(32);
  for (int id = 1; id <= 6; ++id)
    for (int N = 0; N <= 3; ++N) {
      const auto spec = random_spec(id, N, src);
      const auto ops = family_operators(spec);
      CHECK(closed_form_matrix(spec, Generator::plus) == matrix_rep(ops.plus, spec));
      CHECK(closed_form_matrix(spec, Generator::minus) == matrix_rep(ops.minus, spec));
    }
}

TEST_CASE("matrix representation is a homomorphism") {
  SampleSource src(33);
  for (int id = 1; id <= 6; ++id)
    for (int N = 0; N <= 4; ++N) {
      const auto spec = random_spec(id, N, src);
      const SubspaceBasis b(spec);
      const auto ops = family_operators(spec);
      const auto p = b.matrix_rep(ops.plus), m = b.matrix_rep(ops.minus);
      INFO(spec.str());
      CHECK(b.matrix_rep(ops.plus * ops.minus) == p * m);
      CHECK(b.matrix_rep(ops.minus * ops.plus) == m * p);
      CHECK(b.matrix_rep(ops.plus * ops.plus) == p * p);
      CHECK(b.matrix_rep(commutator(ops.plus, ops.minus)) == commutator(p, m));
      const Rational c = src.any();
      CHECK(b.matrix_rep(ops.plus + c * ops.minus) == p + c * m);
    }
}

TEST_CASE("basis elements are linearly independent") {
  SampleSource src(34);
  for (int id = 1; id <= 6; ++id)
    for (int N = 0; N <= 5; ++N) {
      const auto spec = random_spec(id, N, src);
      const auto pairs = basis_pairs(spec);
      std::map<std::pair<int, int>, std::size_t> columns;
      for (const auto& p : pairs)
        for (const auto& [key, value] : coordinates(p)) columns.emplace(key, 0);
      std::size_t col = 0;
      for (auto& [key, index] : columns) index = col++;
      Matrix<Rational> m(pairs.size(), columns.size());
      for (std::size_t r = 0; r < pairs.size(); ++r)
        for (const auto& [key, value] : coordinates(pairs[r])) m(r, columns[key]) = value;
      CHECK(m.rank() == spec.dimension());
    }
}

TEST_CASE("family 2 reduces to family 3 for odd N") {
  SampleSource src(35);
  for (int N : {1, 3, 5})
    for (int i = 0; i < 4; ++i) CHECK(family2_reduces_to_family3(src.non_integer(), src.non_integer(), N));
  CHECK_THROWS(family2_reduces_to_family3(Rational(1, 2), Rational(1, 3), 2));
}

TEST_CASE("preserving operators of family 1") {
  const Rational s(7, 3);
  for (int N = 0; N <= 4; ++N) {
    const auto spec = FamilySpec::make(1, N, s);
    const RationalOp first = term(2, mono(1)) + term(1, s + 1);
    const RationalOp second = term(2, mono(2)) + term(1, mono(1, s - Rational(2 * N))) - RationalOp(mono(1));
    for (int bound = 2; bound <= 4; ++bound) {
      const auto ops = solve_preserving(spec, 2, bound);
      INFO("N=" << N << " degree bound " << bound);
      REQUIRE(ops.size() == 2);
      CHECK(ops[0] == second);
      CHECK(ops[1] == first);
    }
  }
  CHECK_THROWS(solve_preserving(FamilySpec::make(1, 0, s), 2, 1));
}

TEST_CASE("preserved operators found for every family contain the generators") {
  SampleSource src(36);
  for (int id = 1; id <= 6; ++id) {
    const auto spec = random_spec(id, 2, src);
    const auto ops = solve_preserving(spec, 2, 2);
    const auto gens = family_operators(spec);
    // Each generator minus its constant term lies in the returned span.
    for (const RationalOp& g : {gens.plus, gens.minus}) {
      if (!g.has_polynomial_coefficients()) continue;
      RationalOp target = g;
      target.set(0, g.coeff(0) - RationalPoly(g.coeff(0).coeff(0)));
      RationalOp remainder = target;
      for (const auto& op : ops) {
        // Leading monomial elimination in the echelon basis.
        for (int k = op.order(); k >= 0; --k) {
          if (op.coeff(k).is_zero()) continue;
          const int e = op.coeff(k).degree();
          const Rational factor = remainder.coeff(k).coeff(e) / op.coeff(k).coeff(e);
          remainder -= factor * op;
          break;
        }
      }
      INFO(spec.str() << " generator " << g.str());
      CHECK(remainder.is_zero());
    }
  }
}

TEST_CASE("pair representations match series values") {
  const double x0 = 0.7;
  SUBCASE("family 1") {
    const double s = 7.0 / 3;
    const auto spec = FamilySpec::make(1, 1, Rational(7, 3));
    auto F = [&](double x) { return hyp0f1(s, x); };
    CHECK(evaluate(to_pair(spec, {0, Polarity::minus}), x0, F) == doctest::Approx(hyp0f1(s + 1, x0)).epsilon(1e-8));
    CHECK(evaluate(to_pair(spec, {1, Polarity::minus}), x0, F) == doctest::Approx(x0 * hyp0f1(s + 1, x0)).epsilon(1e-8));
    CHECK(evaluate(to_pair(spec, {1, Polarity::plus}), x0, F) == doctest::Approx(x0 * hyp0f1(s, x0)).epsilon(1e-8));
  }
  SUBCASE("family 2") {
    const double s = 7.0 / 3, a = -5.0 / 4;
    const auto spec = FamilySpec::make(2, 1, Rational(7, 3), Rational(-5, 4));
    auto F = [&](double x) { return hyp1f1(a, s, x); };
    CHECK(evaluate(to_pair(spec, {0, Polarity::minus}), x0, F) == doctest::Approx(hyp1f1(a + 1, s + 1, x0)).epsilon(1e-8));
  }
  SUBCASE("family 3 contiguity chain") {
    const double s = 1.0 / 2, a = -9.0 / 4;
    const auto spec = FamilySpec::make(3, 4, Rational(1, 2), Rational(-9, 4));
    auto F = [&](double x) { return hyp1f1(a, s, x); };
    for (int n = 0; n <= 4; ++n)
      CHECK(evaluate(to_pair(spec, {n, Polarity::single}), x0, F) == doctest::Approx(hyp1f1(a + n, s, x0)).epsilon(1e-8));
  }
  SUBCASE("family 5") {
    const double nu = 2.0 / 7;
    const auto spec = FamilySpec::make(5, 1, 0, 0, Rational(2, 7));
    auto F = [&](double x) { return std::cyl_bessel_k(nu, x); };
    CHECK(evaluate(to_pair(spec, {0, Polarity::minus}), x0, F) == doctest::Approx(std::cyl_bessel_k(nu + 1, x0)).epsilon(1e-8));
  }
  SUBCASE("family 6") {
    const double a = -5.0 / 4;
    const auto spec = FamilySpec::make(6, 1, 0, Rational(-5, 4));
    auto F = [&](double x) { return hyp1f1(a, 0.5, x * x); };
    CHECK(evaluate(to_pair(spec, {0, Polarity::minus}), x0, F) == doctest::Approx(x0 * hyp1f1(a + 1, 1.5, x0 * x0)).epsilon(1e-8));
  }
}

TEST_CASE("second-order rules match series") {
  const double x0 = 0.9, h = 1e-4;
  const double s = 7.0 / 3, a = -5.0 / 4;
  const std::vector<std::pair<FamilySpec, std::function<double(double)>>> cases{
      {FamilySpec::make(1, 0, Rational(7, 3)), [&](double x) { return hyp0f1(s, x); }},
      {FamilySpec::make(2, 0, Rational(7, 3), Rational(-5, 4)), [&](double x) { return hyp1f1(a, s, x); }},
      {FamilySpec::make(5, 0, 0, 0, Rational(2, 7)), [&](double x) { return std::cyl_bessel_k(2.0 / 7, x); }},
      {FamilySpec::make(6, 0, 0, Rational(-5, 4)), [&](double x) { return hyp1f1(a, 0.5, x * x); }},
  };
  for (const auto& [spec, F] : cases) {
    const auto rule = fundamental_pair_rules(spec).rule;
    const double second = (F(x0 + h) - 2 * F(x0) + F(x0 - h)) / (h * h);
    const double predicted = rule.value_coeff.evaluate(x0) * F(x0) + rule.slope_coeff.evaluate(x0) * derivative(F, x0);
    INFO(spec.str());
    CHECK(predicted == doctest::Approx(second).epsilon(1e-5));
  }
}

}  // TEST_SUITE
