#pragma once

#include <cstdint>
#include <vector>

#include "ceresa/elliptic/curve.hpp"
#include "ceresa/picard/picard.hpp"

namespace ceresa {

using Genus1PointFp = Genus1Point<PrimeFieldElement>;

struct LiftSumResult {
  std::uint64_t v = 0;
  /// Σ_r π(r) ⊞ 2·Σ_q q on y³ = x² + ax + b over F_v, origin at infinity.
  Genus1PointFp sigma;
  /// Order of the image of sigma on y² = x³ + 16(a² − 4b).
  std::uint64_t sigma_order = 1;
  std::uint64_t lift_set_size = 0;
  /// π(r) = (0, y) for the affine ramification points r = (0, y), y³ = b.
  std::vector<Genus1PointFp> ramified_contributions;
  /// Σ_q q over the lift set alone.
  Genus1PointFp lift_set_sum;
};

/// The class 2D = π*(σ) for D = Σ_{c ∈ C(F_v)} (c − ∞), via the quotient π(x, y) = (x², y).
LiftSumResult lift_sum(const PrimeFieldElement& a, const PrimeFieldElement& b);
/// Reduces the integral model of c; throws BadReduction.
LiftSumResult lift_sum(const PicardCurve& c, std::uint64_t v);

}  // namespace ceresa
