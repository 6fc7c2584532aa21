#pragma once

#include <cstdint>

#include "ceresa/arith/polynomial.hpp"
#include "ceresa/picard/picard.hpp"

namespace ceresa {

struct FrobeniusDetResult {
  std::uint64_t q = 0;
  std::uint64_t ell = 0;
  /// det(M − 1)·det(Λ³M − 1) for M the companion matrix of Frobenius on H¹.
  Rational det_value;
  /// det(M/q − 1)·det(Λ³M/q² − 1), the Tate-twisted normalization.
  Rational twisted_det_value;
  /// Both values are ℓ-adic units.
  bool unit_mod_ell = false;
};

/// T⁶·L_C(1/T), the characteristic polynomial of Frobenius.
RatPolynomial frobenius_charpoly(const IntPolynomial& L_C);

/// Numerator and denominator of r both prime to ell.
bool is_ell_adic_unit(const Rational& r, std::uint64_t ell);

FrobeniusDetResult frobenius_det(const IntPolynomial& L_C, std::uint64_t q, std::uint64_t ell);
/// Throws BadReduction; ell must be a prime > 3 different from q.
FrobeniusDetResult frobenius_det(const PicardCurve& c, std::uint64_t q, std::uint64_t ell);

}  // namespace ceresa
