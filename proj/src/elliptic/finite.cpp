#include "ceresa/elliptic/finite.hpp"

#include <stdexcept>

namespace ceresa {

PointFp reduce(const PointQ& p, std::uint64_t prime) {
  if (p.is_infinity()) return PointFp::infinity();
  return {PrimeFieldElement::from_rational(p.x(), prime), PrimeFieldElement::from_rational(p.y(), prime)};
}

CurveFp reduce(const CurveQ& e, std::uint64_t prime) {
  return CurveFp(PrimeFieldElement::from_rational(e.d(), prime));
}

namespace {

std::uint64_t affine_count(std::uint64_t x, std::uint64_t d, std::uint64_t p) {
  const std::uint64_t rhs = (x * x % p * x + d) % p;
  if (rhs == 0) return 1;
  return powmod(rhs, (p - 1) / 2, p) == 1 ? 2 : 0;
}

}  // namespace

std::uint64_t group_order_fp_serial(const CurveFp& e) {
  const std::uint64_t p = e.d().modulus();
  const std::uint64_t d = e.d().value();
  std::uint64_t total = 1;
  for (std::uint64_t x = 0; x < p; ++x) total += affine_count(x, d, p);
  return total;
}

std::uint64_t group_order_fp(const CurveFp& e) {
  const std::uint64_t p = e.d().modulus();
  const std::uint64_t d = e.d().value();
  const auto n = static_cast<std::int64_t>(p);
  std::uint64_t total = 1;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t x = 0; x < n; ++x) total += affine_count(static_cast<std::uint64_t>(x), d, p);
  return total;
}

std::uint64_t order_fp(const CurveFp& e, const PointFp& p, std::uint64_t multiple) {
  if (!e.contains(p)) throw std::invalid_argument("order_fp: point not on curve");
  if (!e.mul(Integer(static_cast<unsigned long>(multiple)), p).is_infinity()) {
    throw std::invalid_argument("order_fp: multiple does not kill the point");
  }
  std::uint64_t order = multiple;
  for (const auto& [q, exponent] : factor_integer(Integer(static_cast<unsigned long>(multiple)))) {
    const std::uint64_t prime = q.get_ui();
    for (unsigned i = 0; i < exponent; ++i) {
      const std::uint64_t candidate = order / prime;
      if (!e.mul(Integer(static_cast<unsigned long>(candidate)), p).is_infinity()) break;
      order = candidate;
    }
  }
  return order;
}

std::uint64_t order_fp(const CurveFp& e, const PointFp& p) { return order_fp(e, p, group_order_fp(e)); }

}  // namespace ceresa
