#pragma once

#include <cstdint>
#include <utility>

#include "ceresa/arith/prime_field.hpp"
#include "ceresa/picard/picard.hpp"

namespace ceresa {

struct CountRecord {
  PrimeFieldElement a;
  PrimeFieldElement b;
  std::uint64_t p;
  unsigned i;
  std::uint64_t curve_count;
};

/// #C(F_{p^i}) = 1 + Σ_x N₃(x⁴ + ax² + b) for y³ = x⁴ + ax² + b over F_p, i ∈ {1, 2, 3}.
/// Parallel over x. Throws BadReduction when Δ ≡ 0 mod p.
CountRecord count_curve(const PrimeFieldElement& a, const PrimeFieldElement& b, unsigned i);

/// Single-threaded reference for count_curve.
CountRecord count_curve_serial(const PrimeFieldElement& a, const PrimeFieldElement& b, unsigned i);

/// (a, b) of the integral model of c reduced mod p. Throws BadReduction unless has_good_reduction.
std::pair<PrimeFieldElement, PrimeFieldElement> reduce_model(const PicardCurve& c, std::uint64_t p);

}  // namespace ceresa
