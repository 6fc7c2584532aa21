#include "ceresa/ffcert/lpoly.hpp"

#include "ceresa/elliptic/finite.hpp"
#include "ceresa/elliptic/genus1.hpp"
#include "ceresa/errors.hpp"
#include "ceresa/ffcert/counting.hpp"

namespace ceresa {

IntPolynomial lpoly_from_counts(std::uint64_t p, const std::array<std::uint64_t, 3>& counts) {
  const Integer P(static_cast<unsigned long>(p));
  // S_i = Σ α^i over the six Frobenius eigenvalues; L = Π(1 − αT) = 1 + c₁T + c₂T² + c₃T³ + …
  Integer s[4];
  Integer q = 1;
  for (int i = 1; i <= 3; ++i) {
    q *= P;
    s[i] = q + 1 - Integer(static_cast<unsigned long>(counts[i - 1]));
  }
  const Integer c1 = -s[1];
  const Integer t2 = s[2] + s[1] * c1;
  const Integer t3 = s[3] + s[2] * c1;
  if (t2 % 2 != 0) throw std::logic_error("lpoly_from_counts: non-integral c2");
  const Integer c2 = -t2 / 2;
  const Integer t3full = t3 + s[1] * c2;
  if (t3full % 3 != 0) throw std::logic_error("lpoly_from_counts: non-integral c3");
  const Integer c3 = -t3full / 3;
  return IntPolynomial({Integer(1), c1, c2, c3, Integer(P * c2), Integer(P * P * c1), Integer(P * P * P)});
}

LPolyRecord lpoly(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  const std::uint64_t p = a.modulus();
  std::array<std::uint64_t, 3> counts{};
  for (unsigned i = 1; i <= 3; ++i) counts[i - 1] = count_curve(a, b, i).curve_count;
  LPolyRecord r{p, lpoly_from_counts(p, counts), {}, {}};
  const std::uint64_t n = group_order_fp(genus1_weierstrass_curve(a, b));
  const Integer P(static_cast<unsigned long>(p));
  const Integer ap = P + 1 - Integer(static_cast<unsigned long>(n));
  r.L_E = IntPolynomial({Integer(1), Integer(-ap), P});
  try {
    r.L_P = divide_exact(r.L_C, r.L_E);
  } catch (const std::domain_error&) {
    throw FactorizationFailure("L_E does not divide L_C at p = " + std::to_string(p));
  }
  return r;
}

LPolyRecord lpoly(const PicardCurve& c, std::uint64_t p) {
  const auto [a, b] = reduce_model(c, p);
  return lpoly(a, b);
}

}  // namespace ceresa
