#pragma once

#include <vector>

#include "qes/family.hpp"

namespace qes {

/// Every operator Σ_{k≤max_order} a_k(x)·(d/dx)^k with deg a_k ≤ degree_bound
/// that maps the family subspace into itself, as a basis of that space modulo
/// the constants. The basis is in reduced echelon form with coordinates
/// ordered from the highest derivative and degree down, so each returned
/// operator is normalized on its leading monomial.
std::vector<RationalOp> solve_preserving(const FamilySpec& spec, int max_order = 2, int degree_bound = 2);

}  // namespace qes
