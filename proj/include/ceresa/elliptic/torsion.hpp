#pragma once

#include <string>
#include <vector>

#include "ceresa/arith/polynomial.hpp"
#include "ceresa/elliptic/curve.hpp"

namespace ceresa {

enum class TorsionStructure { Trivial, Z2, Z3, Z6 };

std::string to_string(TorsionStructure s);

/// Rational torsion subgroup of y² = x³ + d: cyclic of order 1, 2, 3 or 6.
struct TorsionGroupQ {
  TorsionStructure structure = TorsionStructure::Trivial;
  /// Empty for the trivial group, one generator otherwise.
  std::vector<PointQ> generators;

  unsigned order() const;
  /// O, G, 2G, … in that order.
  std::vector<PointQ> elements(const CurveQ& e) const;
  bool contains(const CurveQ& e, const PointQ& p) const;
};

TorsionGroupQ torsion_j0_Q(const Rational& d);

/// ψ_n for odd n, ψ_n·y for even n, as a polynomial in x (y² replaced by x³ + d).
/// Denominators from a non-integral d are cleared by a positive integer factor.
IntPolynomial division_poly(const CurveQ& e, unsigned n);

/// Numerator and denominator of x(nP) as polynomials in x(P), over Q.
std::pair<RatPolynomial, RatPolynomial> multiplication_x_map(const CurveQ& e, unsigned n);

/// All rational P with nP = Q, sorted by (x, y); Q = O gives the rational n-torsion.
std::vector<PointQ> divide_point(const CurveQ& e, unsigned n, const PointQ& q);

}  // namespace ceresa
