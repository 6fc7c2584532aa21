#pragma once

#include <utility>
#include <vector>

#include "ceresa/arith/polynomial.hpp"

namespace ceresa {

struct PolynomialFactor {
  IntPolynomial factor;  // primitive, irreducible over Q, positive leading coefficient
  unsigned multiplicity;
};

/// Irreducible factorization over Q of a nonconstant f, content dropped.
/// Sorted by degree, then by coefficients from the constant term up.
std::vector<PolynomialFactor> factor(const IntPolynomial& f);

/// Squarefree decomposition over Q (Yun): pairs (primitive g_i, i) with f ~ ∏ g_i^i.
std::vector<PolynomialFactor> squarefree_decomposition(const IntPolynomial& f);

/// Irreducible factors of a primitive squarefree f by Zassenhaus
/// (Cantor–Zassenhaus modulo a small prime, Hensel lifting, recombination).
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f);

}  // namespace ceresa
