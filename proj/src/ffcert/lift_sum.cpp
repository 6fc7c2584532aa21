#include "ceresa/ffcert/lift_sum.hpp"

#include "ceresa/elliptic/finite.hpp"
#include "ceresa/elliptic/genus1.hpp"
#include "ceresa/errors.hpp"
#include "ceresa/ffcert/counting.hpp"

namespace ceresa {

LiftSumResult lift_sum(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  const std::uint64_t v = a.modulus();
  const PrimeFieldElement zero(0, v);
  const PrimeFieldElement four(4, v);
  if (b.is_zero() || (a * a - four * b).is_zero()) throw BadReduction("bad reduction at v = " + std::to_string(v));

  LiftSumResult r;
  r.v = v;
  // Non-branch points (u, y) of the quotient with u = x², x ∈ F_v^*. Each has two preimages (±x, y),
  // paired by τ, which is where the factor 2 comes from.
  for (std::uint64_t u0 = 1; u0 < v; ++u0) {
    const PrimeFieldElement u(static_cast<std::int64_t>(u0), v);
    if (legendre(u) != 1) continue;
    for (const PrimeFieldElement& y : cube_roots(u * u + a * u + b)) {
      r.lift_set_sum = genus1_add(a, b, r.lift_set_sum, Genus1PointFp(u, y));
      ++r.lift_set_size;
    }
  }
  Genus1PointFp ramified;
  for (const PrimeFieldElement& y : cube_roots(b)) {
    r.ramified_contributions.emplace_back(zero, y);
    ramified = genus1_add(a, b, ramified, Genus1PointFp(zero, y));
  }
  r.sigma = genus1_add(a, b, ramified, genus1_mul(a, b, Integer(2), r.lift_set_sum));
  if (!genus1_contains(a, b, r.sigma)) throw std::logic_error("lift_sum: sigma is off the curve");
  const auto e = genus1_weierstrass_curve(a, b);
  r.sigma_order = r.sigma.is_infinity() ? 1 : order_fp(e, genus1_to_weierstrass(a, b, r.sigma));
  return r;
}

LiftSumResult lift_sum(const PicardCurve& c, std::uint64_t v) {
  const auto [a, b] = reduce_model(c, v);
  return lift_sum(a, b);
}

}  // namespace ceresa
