#include "qes/subspace.hpp"

#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace qes {

namespace {

// Coordinates of a pair element: (component, exponent) → coefficient.
using Key = std::pair<int, int>;

void collect_keys(const RationalPair& p, std::set<Key>& keys) {
  for (const auto& [e, c] : p.value.terms()) keys.insert({0, e});
  for (const auto& [e, c] : p.slope.terms()) keys.insert({1, e});
}

Rational coordinate(const RationalPair& p, const Key& key) {
  return key.first == 0 ? p.value.coeff(key.second) : p.slope.coeff(key.second);
}

std::string format_vector(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

SubspaceBasis::SubspaceBasis(FamilySpec spec)
    : spec_(std::move(spec)),
      rule_(fundamental_pair_rules(spec_).rule),
      elements_(basis(spec_)),
      pairs_(basis_pairs(spec_)) {}

RationalPair SubspaceBasis::apply(const RationalOp& op, std::size_t index) const {
  return apply_op(op, pairs_.at(index), rule_);
}

RationalPair SubspaceBasis::combine(const std::vector<Rational>& coefficients) const {
  RationalPair out;
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (!coefficients[i].is_zero()) out += coefficients[i] * pairs_[i];
  return out;
}

Decomposition SubspaceBasis::decompose(const RationalPair& p) const {
  std::set<Key> key_set;
  collect_keys(p, key_set);
  for (const auto& b : pairs_) collect_keys(b, key_set);
  const std::vector<Key> keys(key_set.begin(), key_set.end());

  const std::size_t dim = pairs_.size();
  Matrix<Rational> system(keys.size(), dim);
  std::vector<Rational> rhs(keys.size());
  for (std::size_t r = 0; r < keys.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) system(r, c) = coordinate(pairs_[c], keys[r]);
    rhs[r] = coordinate(p, keys[r]);
  }
  if (auto solution = system.solve(rhs)) return {std::move(solution), RationalPair{}};

  // Not in span: fit on a maximal independent set of rows to expose a residual.
  Matrix<Rational> transposed = system.transpose();
  const auto rows = transposed.rref();
  Matrix<Rational> square(rows.size(), dim);
  std::vector<Rational> square_rhs(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) square(i, c) = system(rows[i], c);
    square_rhs[i] = rhs[rows[i]];
  }
  const auto fit = square.solve(square_rhs);
  return {std::nullopt, p - combine(*fit)};
}

Matrix<Rational> SubspaceBasis::matrix_rep(const RationalOp& op) const {
  const std::size_t dim = pairs_.size();
  Matrix<Rational> rep(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto d = decompose(apply(op, j));
    if (!d.in_span()) throw NotPreserved();
    rep.set_column(j, *d.coefficients);
  }
  return rep;
}

Decomposition decompose(const RationalPair& p, const FamilySpec& spec) { return SubspaceBasis(spec).decompose(p); }

Matrix<Rational> matrix_rep(const RationalOp& op, const FamilySpec& spec) { return SubspaceBasis(spec).matrix_rep(op); }

std::string to_string(Generator g) { return g == Generator::plus ? "J+" : "J-"; }

std::vector<ActionTerm> closed_form_action(const FamilySpec& spec, Generator g, const BasisElement& e) {
  const Rational n(e.n);
  const Rational N(spec.N);
  const Rational& s = spec.s;
  const Rational& a = spec.alpha;
  const Rational& nu = spec.nu;
  const Rational A = n - Rational(2) * N;
  const Rational B = n - N;
  const Rational one(1);
  const Rational two(2);
  const bool plus_gen = g == Generator::plus;
  const bool plus_el = e.polarity == Polarity::plus;
  const auto P = [](int m) { return BasisElement{m, Polarity::plus}; };
  const auto M = [](int m) { return BasisElement{m, Polarity::minus}; };
  const auto S = [](int m) { return BasisElement{m, Polarity::single}; };
  const int k = e.n;

  switch (spec.id) {
    case 1:
      if (plus_gen && plus_el) return {{P(k), n * (A - one + s)}, {M(k + 1), two * B / s}};
      if (plus_gen) return {{M(k), (n - s) * (A - one)}, {P(k), s * (two * B - one)}};
      if (plus_el) return {{P(k), one}, {P(k - 1), n * (n + s)}, {M(k), (one + two * n) / s}};
      return {{M(k), one}, {M(k - 1), n * (n - s)}, {P(k - 1), two * n * s}};
    case 2:
      if (plus_gen && plus_el) return {{P(k), n * (A - one + s)}, {P(k + 1), -B}, {M(k + 1), two * a * B / s}};
      if (plus_gen) return {{M(k), (s - n) * (one - A)}, {M(k + 1), B}, {P(k), s * (two * B - one)}};
      if (plus_el) return {{P(k), a - n}, {P(k - 1), n * (n + s)}, {M(k), a * (one + two * n) / s}};
      return {{M(k), a + n + one}, {M(k - 1), n * (n - s)}, {P(k - 1), two * n * s}};
    case 3: {
      const Rational C = N - two * n;
      if (!plus_gen) return {{S(k), n + a}};
      return {{S(k), s * n + (a + n) * C}, {S(k + 1), (a + n) * B}, {S(k - 1), n * (a + n - s)}};
    }
    case 4:
      if (plus_gen && plus_el) return {{P(k - 2), n * (n - one)}, {M(k - 1), two * n}};
      if (plus_gen) return {{P(k), one + two * n}, {M(k - 2), n * (n - one)}};
      if (plus_el) return {{P(k - 1), (A - two) * n}, {M(k), two * B - one}};
      return {{P(k + 1), two * B}, {M(k - 1), (A - two) * n}};
    case 5:
      if (plus_gen && plus_el) return {{P(k), (nu + n) * (nu + A)}, {M(k + 1), -two * B}};
      if (plus_gen) return {{M(k), (n - one - nu) * (A - one - nu)}, {P(k + 1), -two * B}};
      if (plus_el) return {{P(k - 1), n * (one + n + two * nu)}, {M(k), -(one + two * n)}};
      return {{P(k), -(one + two * n)}, {M(k - 1), n * (n - two * nu - one)}};
    case 6:
      if (plus_gen && plus_el)
        return {{P(k + 1), -two * B}, {P(k - 1), n * (A - two)}, {M(k), Rational(4) * a * (two * B - one)}};
      if (plus_gen) return {{M(k - 1), n * (A - two)}, {P(k), two * B - one}, {M(k + 1), two * B}};
      if (plus_el)
        return {{P(k), two * (two * a - n)}, {P(k - 2), n * n - n}, {M(k - 1), Rational(8) * a * n}};
      return {{P(k - 1), two * n}, {M(k), two * (two * a + one + n)}, {M(k - 2), n * n - n}};
    default:
      throw std::invalid_argument("family id must be in 1..6");
  }
}

Matrix<Rational> closed_form_matrix(const FamilySpec& spec, Generator g) {
  const auto elements = basis(spec);
  Matrix<Rational> m(elements.size(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j)
    for (const auto& term : closed_form_action(spec, g, elements[j])) {
      if (term.target.n < 0 || term.target.n > spec.N) continue;
      m(basis_index(spec, term.target), j) += term.coefficient;
    }
  return m;
}

InvarianceReport verify_invariance(const FamilySpec& spec) {
  InvarianceReport report{spec, 0, {}};
  const SubspaceBasis subspace(spec);
  const auto ops = family_operators(spec);
  for (Generator g : {Generator::plus, Generator::minus}) {
    const RationalOp& op = g == Generator::plus ? ops.plus : ops.minus;
    for (std::size_t j = 0; j < subspace.dimension(); ++j) {
      const BasisElement& e = subspace.elements()[j];
      ++report.applications;
      const auto d = subspace.decompose(subspace.apply(op, j));
      if (!d.in_span()) {
        report.mismatches.push_back({g, e, "image not in span; residual value=" + d.residual.value.str() +
                                               " slope=" + d.residual.slope.str()});
        continue;
      }
      std::vector<Rational> expected(subspace.dimension());
      for (const auto& term : closed_form_action(spec, g, e)) {
        if (term.target.n < 0 || term.target.n > spec.N) {
          if (!term.coefficient.is_zero())
            report.mismatches.push_back({g, e, "cutoff term " + term.target.label() + " has nonzero coefficient " +
                                                   term.coefficient.str()});
          continue;
        }
        expected[basis_index(spec, term.target)] += term.coefficient;
      }
      if (expected != *d.coefficients)
        report.mismatches.push_back(
            {g, e, "decomposed " + format_vector(*d.coefficients) + " vs closed form " + format_vector(expected)});
    }
  }
  return report;
}

bool family2_reduces_to_family3(const Rational& s, const Rational& alpha, int N) {
  if (N < 1 || N % 2 == 0) throw std::invalid_argument("family2_reduces_to_family3: N must be odd");
  const Rational n(N);
  const auto two = family_operators(2, {s - Rational(1), alpha - Rational(1, 2) + n / Rational(2), 0, (n - Rational(1)) / Rational(2)});
  const auto three = family_operators(3, {s, alpha, 0, n});
  return two.plus == three.plus && two.minus == three.minus;
}

}  // namespace qes
