#include "ceresa/picard/torsion_locus.hpp"

#include <stdexcept>

#include "ceresa/arith/factor.hpp"
#include "ceresa/arith/poly_mod.hpp"
#include "ceresa/elliptic/finite.hpp"
#include "ceresa/elliptic/torsion.hpp"

namespace ceresa {

IntPolynomial torsion_locus_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("torsion_locus_polynomial: n must be positive");
  const IntPolynomial psi = division_poly(CurveQ(Rational(1)), n);
  if (psi.degree() == 0) return IntPolynomial::constant(1);
  // On y² = x³ + 1 the division polynomial is x^e·G(x³); substituting x³ = t² − 1 eliminates x.
  std::size_t low = 0;
  while (psi.coeff(low) == 0) ++low;
  const std::size_t e = low % 3;
  std::vector<Integer> g;
  for (std::size_t i = 0; i < psi.coefficients().size(); ++i) {
    if (psi.coeff(i) == 0) continue;
    if (i % 3 != e) throw std::logic_error("division polynomial lacks the x -> zeta*x symmetry");
  }
  for (std::size_t i = e; i < psi.coefficients().size(); i += 3) g.push_back(psi.coeff(i));
  const IntPolynomial u = IntPolynomial({-1, 0, 1});
  IntPolynomial p = IntPolynomial(std::move(g)).compose(u);
  if (e > 0) p *= u;
  return squarefree_part(p);
}

namespace {

bool divides_over_q(const IntPolynomial& g, const IntPolynomial& f) {
  return divmod(to_rational(f), to_rational(g)).second.is_zero();
}

TorsionLocusEntry locus_entry(unsigned n, const std::vector<IntPolynomial>& p) {
  TorsionLocusEntry entry;
  entry.order = n;
  IntPolynomial rest = p[n];
  for (unsigned m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    const RatPolynomial common = gcd(to_rational(rest), to_rational(p[m]));
    if (common.degree() > 0) rest = to_primitive_integer(divmod(to_rational(rest), common).first);
  }
  if (rest.degree() < 1) return entry;
  const IntPolynomial t_minus_1({-1, 1});
  const IntPolynomial t_plus_1({1, 1});
  for (const auto& [factor_poly, mult] : factor(rest)) {
    (void)mult;
    for (unsigned m = 2; m < n; ++m) {
      if (n % m == 0 && divides_over_q(factor_poly, p[m])) {
        throw std::logic_error("torsion locus factor of lower order survived the gcd sieve");
      }
    }
    if (factor_poly == t_minus_1 || factor_poly == t_plus_1) {
      entry.stripped_factors.push_back(factor_poly);
    } else {
      entry.t_minimal_polynomials.push_back(factor_poly);
    }
  }
  return entry;
}

}  // namespace

std::vector<TorsionLocusEntry> enumerate_torsion_locus_serial(unsigned n_max) {
  if (n_max < 2) throw std::invalid_argument("enumerate_torsion_locus: N_max must be at least 2");
  std::vector<IntPolynomial> p(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) p[n] = torsion_locus_polynomial(n);
  std::vector<TorsionLocusEntry> out;
  for (unsigned n = 2; n <= n_max; ++n) out.push_back(locus_entry(n, p));
  return out;
}

std::vector<TorsionLocusEntry> enumerate_torsion_locus(unsigned n_max) {
  if (n_max < 2) throw std::invalid_argument("enumerate_torsion_locus: N_max must be at least 2");
  std::vector<IntPolynomial> p(n_max + 1);
  const auto count = static_cast<long>(n_max);
#pragma omp parallel for schedule(dynamic)
  for (long n = 1; n <= count; ++n) p[n] = torsion_locus_polynomial(static_cast<unsigned>(n));
  std::vector<TorsionLocusEntry> out(n_max - 1);
#pragma omp parallel for schedule(dynamic)
  for (long n = 2; n <= count; ++n) out[n - 2] = locus_entry(static_cast<unsigned>(n), p);
  return out;
}

std::vector<std::uint64_t> certify_exact_order(const IntPolynomial& g, unsigned n, unsigned count,
                                               std::uint64_t search_bound) {
  std::vector<std::uint64_t> primes;
  if (g.degree() < 1) return primes;
  for (std::uint64_t p = 5; p <= search_bound && primes.size() < count; p += 2) {
    if (!is_prime(p) || n % p == 0) continue;
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p) != 0) continue;
    const ZpPoly gp = ZpPoly::reduce(g, p);
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    const CurveFp e(PrimeFieldElement(1, p));
    bool any = false;
    bool all_exact = true;
    for (std::uint64_t t0 : roots(gp)) {
      const PrimeFieldElement t(static_cast<std::int64_t>(t0), p);
      const PrimeFieldElement u = t * t - PrimeFieldElement(1, p);
      if (u.is_zero()) {
        all_exact = false;
        break;
      }
      const auto xs = cube_roots(u);
      if (xs.empty()) continue;
      any = true;
      if (order_fp(e, PointFp(xs.front(), t)) != n) {
        all_exact = false;
        break;
      }
    }
    if (any && all_exact) primes.push_back(p);
  }
  return primes;
}

}  // namespace ceresa
