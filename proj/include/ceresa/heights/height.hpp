#pragma once

#include "ceresa/arith/integer.hpp"
#include "ceresa/elliptic/curve.hpp"

namespace ceresa {

struct HeightValue {
  double value = 0;
  double error_bound = 0;
};

/// log max(|m|, n) for x = m/n in lowest terms.
double naive_height(const Rational& x);

/// Natural log of |q| for q ≠ 0, accurate for arbitrarily large numerators and denominators.
long double log_abs(const Rational& q);

/// Néron–Tate height on y² = x³ + d, normalized so that ĥ(P) − ½h(x(P)) is bounded.
/// Exactly 0 for O and for rational torsion points.
HeightValue canonical_height(const CurveQ& e, const PointQ& p);

}  // namespace ceresa
