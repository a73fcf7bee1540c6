#include "qes/preserving.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "qes/matrix.hpp"
#include "qes/subspace.hpp"

namespace qes {

std::vector<RationalOp> solve_preserving(const FamilySpec& spec, int max_order, int degree_bound) {
  if (max_order < 0) throw std::invalid_argument("solve_preserving: max_order must be non-negative");
  if (degree_bound < 2) throw std::invalid_argument("solve_preserving: degree bound must be at least 2");
  const SubspaceBasis subspace(spec);
  const std::size_t dim = subspace.dimension();

  // Operator unknowns a_{k,j}, highest (k, j) first; then the matrix d_{ij}.
  std::vector<std::pair<int, int>> monomials;
  for (int k = max_order; k >= 0; --k)
    for (int j = degree_bound; j >= 0; --j) monomials.emplace_back(k, j);
  const std::size_t n_ops = monomials.size();
  const std::size_t n_unknowns = n_ops + dim * dim;

  // Images of every basis element under every monomial operator.
  std::vector<std::vector<RationalPair>> images(n_ops);
  for (std::size_t u = 0; u < n_ops; ++u) {
    const auto op = RationalOp::term(monomials[u].first, RationalPoly::monomial(monomials[u].second));
    for (std::size_t i = 0; i < dim; ++i) images[u].push_back(subspace.apply(op, i));
  }

  // Equation rows: for each source i and coordinate (component, exponent),
  //   Σ_u a_u·image_u(i) − Σ_j d_{j,i}·basis_j = 0.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    std::map<std::pair<int, int>, std::vector<Rational>> equations;
    const auto row_for = [&](int component, int exponent) -> std::vector<Rational>& {
      auto [it, inserted] = equations.try_emplace({component, exponent});
      if (inserted) it->second.assign(n_unknowns, Rational(0));
      return it->second;
    };
    for (std::size_t u = 0; u < n_ops; ++u) {
      for (const auto& [e, c] : images[u][i].value.terms()) row_for(0, e)[u] += c;
      for (const auto& [e, c] : images[u][i].slope.terms()) row_for(1, e)[u] += c;
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t col = n_ops + j * dim + i;
      for (const auto& [e, c] : subspace.pairs()[j].value.terms()) row_for(0, e)[col] -= c;
      for (const auto& [e, c] : subspace.pairs()[j].slope.terms()) row_for(1, e)[col] -= c;
    }
    for (auto& [key, row] : equations) rows.push_back(std::move(row));
  }

  Matrix<Rational> system(rows.size(), n_unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n_unknowns; ++c) system(r, c) = rows[r][c];

  // Project the solutions onto the operator part, dropping the constant term.
  const std::size_t constant_slot = n_ops - 1;
  const auto solutions = system.nullspace();
  Matrix<Rational> projected(solutions.size(), n_ops - 1);
  for (std::size_t r = 0; r < solutions.size(); ++r)
    for (std::size_t u = 0; u < constant_slot; ++u) projected(r, u) = solutions[r][u];
  const auto pivots = projected.rref();

  std::vector<RationalOp> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    RationalOp op;
    for (std::size_t u = 0; u < constant_slot; ++u)
      if (!projected(r, u).is_zero())
        op += RationalOp::term(monomials[u].first, RationalPoly::monomial(monomials[u].second, projected(r, u)));
    out.push_back(std::move(op));
  }
  return out;
}

}  // namespace qes
