#include "doctest.h"
#include "generators.hpp"
#include "qes/diff_op.hpp"
#include "qes/gauge.hpp"
#include "qes/laurent_poly.hpp"
#include "qes/quad_scalar.hpp"
#include "qes/rational.hpp"

using namespace qes;
using qes::testing::random_op;
using qes::testing::random_poly;

using Poly = LaurentPoly<Rational>;
using Op = DiffOp<Rational>;
using QPoly = LaurentPoly<QuadScalar>;
using QOp = DiffOp<QuadScalar>;

namespace {

Op D() { return Op::derivative(); }
Op X() { return Op::multiply_by_x(); }
Poly mono(int e, Rational c = 1) { return Poly::monomial(e, c); }

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("laurent arithmetic") {
  const Poly p = mono(2, 3) + mono(-1, Rational(1, 2));
  const Poly q = mono(1) - Poly(4);
  CHECK((p * q).degree() == p.degree() + q.degree());
  CHECK((p * q).low_degree() == -1);
  CHECK(p.derivative() == mono(1, 6) + mono(-2, Rational(-1, 2)));
  CHECK((p - p).is_zero());
  CHECK(p.substitute_square(Rational(2)) == mono(4, 12) + mono(-2, Rational(1, 4)));
  CHECK(!p.is_polynomial());
  CHECK(q.is_polynomial());
}

TEST_CASE("canonical Weyl relation") {
  CHECK(D() * X() == X() * D() + Op::identity());
  CHECK(Op::identity() * (X() * D()) == X() * D());
  CHECK(commutator(D(), Op(mono(2))) == Op(mono(1, 2)));
  const Op a = X() * D() * D() + Op(mono(-1));
  CHECK(commutator(a, a).is_zero());
  CHECK((D() * D() * D()).order() == 3);
}

TEST_CASE("gauge conjugation examples") {
  const QuadScalar eta(0, Rational(1, 8), 0, 0);
  const GaugeFactor<QuadScalar> phi{eta, false};
  const QOp d = QOp::derivative();
  CHECK(conjugate_by_gauge(d, phi) == d + QOp(QPoly::monomial(1, QuadScalar(2) * eta)));
  const QOp expected = d * d + QOp::term(1, QPoly::monomial(1, QuadScalar(4) * eta)) +
                       QOp(QPoly(QuadScalar(2) * eta) + QPoly::monomial(2, QuadScalar(4) * eta * eta));
  CHECK(conjugate_by_gauge(d * d, phi) == expected);
  CHECK(conjugate_by_z(X() * D()) == X() * D() + Op::identity());
}

TEST_CASE("substitute_square examples") {
  const Rational c(3, 7);
  CHECK(substitute_square(X(), c) == Op(mono(2, c)));
  CHECK(substitute_square(D(), c) == Op::term(1, mono(-1, Rational(7, 6))));
  CHECK_THROWS(substitute_square(D(), Rational(0)));
}

TEST_CASE("composition is associative") {
  SampleSource src(7);
  for (int i = 0; i < 40; ++i) {
    const Op a = random_op(src, 3, -1, 4), b = random_op(src, 3, -1, 4), c = random_op(src, 3, -1, 4);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("commutator is antisymmetric and satisfies Jacobi") {
  SampleSource src(8);
  for (int i = 0; i < 30; ++i) {
    const Op a = random_op(src, 2, 0, 3), b = random_op(src, 2, -1, 3), c = random_op(src, 3, 0, 2);
    CHECK(commutator(a, b) == -commutator(b, a));
    const Op jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("apply agrees with composition") {
  SampleSource src(9);
  for (int i = 0; i < 40; ++i) {
    const Op a = random_op(src, 3, -2, 3), b = random_op(src, 3, -1, 4);
    const Poly f = random_poly(src, -3, 6);
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
  }
}

TEST_CASE("gauge round trip") {
  SampleSource src(10);
  for (int i = 0; i < 30; ++i) {
    const Op a = random_op(src, 4, -1, 3);
    const Rational eta = src.any(9, 8);
    const GaugeFactor<Rational> phi{eta, false};
    CHECK(conjugate_by_gauge(conjugate_by_gauge(a, phi), phi.inverse_exponent()) == a);
    CHECK(conjugate_by_gauge(a, GaugeFactor<Rational>{eta, true}) == conjugate_by_gauge(conjugate_by_z(a), phi));
  }
}

TEST_CASE("conjugation by z agrees with applying to z*f") {
  SampleSource src(12);
  for (int i = 0; i < 30; ++i) {
    const Op a = random_op(src, 3, -1, 3);
    const Poly f = random_poly(src, 0, 5);
    // z^{-1}·A(z·f) = (conjugated A)(f)
    CHECK(a.apply(mono(1) * f).divided_by_monomial(mono(1)) == conjugate_by_z(a).apply(f));
  }
}

TEST_CASE("substitute_square commutes with application") {
  SampleSource src(13);
  for (int i = 0; i < 30; ++i) {
    const Op a = random_op(src, 3, -1, 3);
    const Poly f = random_poly(src, -2, 5);
    const Rational c = src.non_integer(9, 5);
    CHECK(a.apply(f).substitute_square(c) == substitute_square(a, c).apply(f.substitute_square(c)));
  }
}

}  // TEST_SUITE
