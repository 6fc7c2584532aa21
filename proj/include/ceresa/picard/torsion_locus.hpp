#pragma once

#include <cstdint>
#include <vector>

#include "ceresa/arith/polynomial.hpp"

namespace ceresa {

/// Parameters t ≠ ±1 for which Q_t = (∛(t² − 1), t) has exact order N on y² = x³ + 1.
struct TorsionLocusEntry {
  unsigned order = 0;
  /// Minimal polynomials over Q (primitive, positive leading coefficient).
  std::vector<IntPolynomial> t_minimal_polynomials;
  /// Factors t − 1, t + 1 removed because the curve degenerates there.
  std::vector<IntPolynomial> stripped_factors;
};

/// P_N(t): vanishes exactly at the t with N·Q_t = O (squarefree part, degenerate factors kept).
IntPolynomial torsion_locus_polynomial(unsigned n);

/// One entry per N = 2..n_max, in order of N; parallel over N.
std::vector<TorsionLocusEntry> enumerate_torsion_locus(unsigned n_max);

/// Single-threaded reference for enumerate_torsion_locus.
std::vector<TorsionLocusEntry> enumerate_torsion_locus_serial(unsigned n_max);

/// Certifies that the roots of the irreducible g give points of exact order n by reduction:
/// returns `count` primes p > 3, p ∤ n, at which g has a simple root t₀ with (∛(t₀² − 1), t₀)
/// of exact order n on y² = x³ + 1 over F_p. Returns fewer primes if the search bound is hit.
std::vector<std::uint64_t> certify_exact_order(const IntPolynomial& g, unsigned n, unsigned count = 2,
                                               std::uint64_t search_bound = 100000);

}  // namespace ceresa
