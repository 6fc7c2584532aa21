#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "ceresa/arith/integer.hpp"
#include "ceresa/arith/prime_field.hpp"

namespace ceresa {

/// The integer k in the field of `like`.
inline Rational field_constant(const Rational& /*like*/, long k) { return Rational(k); }
inline PrimeFieldElement field_constant(const PrimeFieldElement& like, long k) {
  return PrimeFieldElement(k, like.modulus());
}

struct WeierstrassTag {};
struct Genus1Tag {};

/// Point of a plane model: the point at infinity or an affine (x, y).
template <class F, class Tag>
class PlanePoint {
 public:
  PlanePoint() = default;
  PlanePoint(F x, F y) : xy_(std::make_pair(std::move(x), std::move(y))) {}
  static PlanePoint infinity() { return PlanePoint(); }

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const F& x() const { return checked().first; }
  const F& y() const { return checked().second; }

  bool operator==(const PlanePoint& o) const { return xy_ == o.xy_; }
  bool operator!=(const PlanePoint& o) const { return !(*this == o); }

 private:
  const std::pair<F, F>& checked() const {
    if (!xy_) throw std::logic_error("coordinates of the point at infinity");
    return *xy_;
  }

  std::optional<std::pair<F, F>> xy_;
};

template <class F>
using CurvePoint = PlanePoint<F, WeierstrassTag>;
template <class F>
using Genus1Point = PlanePoint<F, Genus1Tag>;

/// y² = x³ + d with d ≠ 0, over Q or F_p.
template <class F>
class WeierstrassCurve {
 public:
  explicit WeierstrassCurve(F d) : d_(std::move(d)) {
    if (d_ == 0) throw std::invalid_argument("singular curve y^2 = x^3");
  }

  const F& d() const noexcept { return d_; }

  bool contains(const CurvePoint<F>& p) const {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == p.x() * p.x() * p.x() + d_;
  }

  CurvePoint<F> negate(const CurvePoint<F>& p) const {
    if (p.is_infinity()) return p;
    return {p.x(), F(-p.y())};
  }

  CurvePoint<F> add(const CurvePoint<F>& p, const CurvePoint<F>& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    F lambda = p.x();
    if (p.x() == q.x()) {
      if (p.y() != q.y() || p.y() == 0) return CurvePoint<F>::infinity();
      const F xx = p.x() * p.x();
      lambda = (xx + xx + xx) / (p.y() + p.y());
    } else {
      lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    F x3 = lambda * lambda - p.x() - q.x();
    F y3 = lambda * (p.x() - x3) - p.y();
    return {std::move(x3), std::move(y3)};
  }

  CurvePoint<F> mul(const Integer& n, const CurvePoint<F>& p) const {
    if (n < 0) return negate(mul(Integer(-n), p));
    CurvePoint<F> result;
    CurvePoint<F> base = p;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = add(result, result);
      if (mpz_tstbit(n.get_mpz_t(), i) != 0) result = add(result, base);
    }
    return result;
  }

  bool operator==(const WeierstrassCurve& o) const { return d_ == o.d_; }

 private:
  F d_;
};

using CurveQ = WeierstrassCurve<Rational>;
using CurveFp = WeierstrassCurve<PrimeFieldElement>;
using PointQ = CurvePoint<Rational>;
using PointFp = CurvePoint<PrimeFieldElement>;

template <class F>
CurvePoint<F> add(const WeierstrassCurve<F>& e, const CurvePoint<F>& p, const CurvePoint<F>& q) {
  return e.add(p, q);
}

template <class F>
CurvePoint<F> mul(const WeierstrassCurve<F>& e, const Integer& n, const CurvePoint<F>& p) {
  return e.mul(n, p);
}

/// Reduction of a rational point modulo p; the denominators must be prime to p.
PointFp reduce(const PointQ& p, std::uint64_t prime);
CurveFp reduce(const CurveQ& e, std::uint64_t prime);

template <class F, class Tag>
std::ostream& operator<<(std::ostream& os, const PlanePoint<F, Tag>& p) {
  if (p.is_infinity()) return os << "O";
  return os << "(" << p.x() << ", " << p.y() << ")";
}

}  // namespace ceresa
