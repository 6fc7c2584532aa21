#pragma once

#include "ceresa/elliptic/curve.hpp"

namespace ceresa {

// The genus-1 quotient y³ = x² + ax + b of a bielliptic Picard curve, with
// origin at its point at infinity. It is carried to y² = x³ + 16(a² − 4b) by
// (x, y) ↦ (4y, 8x + 4a), and the group law is transported through that map.

template <class F>
WeierstrassCurve<F> genus1_weierstrass_curve(const F& a, const F& b) {
  return WeierstrassCurve<F>(F(a * a - b * field_constant(a, 4)) * field_constant(a, 16));
}

template <class F>
bool genus1_contains(const F& a, const F& b, const Genus1Point<F>& p) {
  if (p.is_infinity()) return true;
  return p.y() * p.y() * p.y() == p.x() * p.x() + a * p.x() + b;
}

template <class F>
CurvePoint<F> genus1_to_weierstrass(const F& a, const F& b, const Genus1Point<F>& p) {
  (void)b;
  if (p.is_infinity()) return CurvePoint<F>::infinity();
  return {F(p.y() * field_constant(a, 4)), F(p.x() * field_constant(a, 8) + a * field_constant(a, 4))};
}

template <class F>
Genus1Point<F> weierstrass_to_genus1(const F& a, const F& b, const CurvePoint<F>& p) {
  (void)b;
  if (p.is_infinity()) return Genus1Point<F>::infinity();
  return {F((p.y() - a * field_constant(a, 4)) / field_constant(a, 8)), F(p.x() / field_constant(a, 4))};
}

template <class F>
Genus1Point<F> genus1_add(const F& a, const F& b, const Genus1Point<F>& p, const Genus1Point<F>& q) {
  const auto e = genus1_weierstrass_curve(a, b);
  return weierstrass_to_genus1(a, b, e.add(genus1_to_weierstrass(a, b, p), genus1_to_weierstrass(a, b, q)));
}

template <class F>
Genus1Point<F> genus1_mul(const F& a, const F& b, const Integer& n, const Genus1Point<F>& p) {
  const auto e = genus1_weierstrass_curve(a, b);
  return weierstrass_to_genus1(a, b, e.mul(n, genus1_to_weierstrass(a, b, p)));
}

}  // namespace ceresa
