#pragma once

#include <array>
#include <cstdint>

#include "ceresa/arith/polynomial.hpp"
#include "ceresa/arith/prime_field.hpp"
#include "ceresa/picard/picard.hpp"

namespace ceresa {

struct LPolyRecord {
  std::uint64_t p;
  IntPolynomial L_C;  // degree 6
  IntPolynomial L_E;  // degree 2, for y² = x³ + 16(a² − 4b)
  IntPolynomial L_P;  // degree 4, L_C / L_E
};

/// Genus-3 L-polynomial from #C(F_p), #C(F_{p²}), #C(F_{p³}) by Newton's identities and the
/// functional equation.
IntPolynomial lpoly_from_counts(std::uint64_t p, const std::array<std::uint64_t, 3>& counts);

/// Throws BadReduction on bad reduction and FactorizationFailure if L_E ∤ L_C.
LPolyRecord lpoly(const PrimeFieldElement& a, const PrimeFieldElement& b);
LPolyRecord lpoly(const PicardCurve& c, std::uint64_t p);

}  // namespace ceresa
