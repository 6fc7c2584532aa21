#include "ceresa/ffcert/frobenius.hpp"

#include <stdexcept>

#include "ceresa/arith/matrix.hpp"
#include "ceresa/ffcert/lpoly.hpp"

namespace ceresa {

RatPolynomial frobenius_charpoly(const IntPolynomial& L_C) {
  if (L_C.degree() != 6) throw std::invalid_argument("frobenius_charpoly: L_C must have degree 6");
  std::vector<Rational> c(7);
  for (int i = 0; i <= 6; ++i) c[6 - i] = Rational(L_C.coeff(i));
  return RatPolynomial(std::move(c));
}

bool is_ell_adic_unit(const Rational& r, std::uint64_t ell) {
  if (r == 0) return false;
  return mpz_divisible_ui_p(r.get_num().get_mpz_t(), ell) == 0 &&
         mpz_divisible_ui_p(r.get_den().get_mpz_t(), ell) == 0;
}

FrobeniusDetResult frobenius_det(const IntPolynomial& L_C, std::uint64_t q, std::uint64_t ell) {
  const RationalMatrix m = RationalMatrix::companion(frobenius_charpoly(L_C));
  const RationalMatrix m3 = exterior_power(m, 3);
  const Rational Q(static_cast<unsigned long>(q));
  const RationalMatrix i6 = RationalMatrix::identity(6);
  const RationalMatrix i20 = RationalMatrix::identity(20);
  FrobeniusDetResult r;
  r.q = q;
  r.ell = ell;
  r.det_value = determinant(m - i6) * determinant(m3 - i20);
  r.twisted_det_value = determinant(m * Rational(1 / Q) - i6) * determinant(m3 * Rational(1 / (Q * Q)) - i20);
  r.unit_mod_ell = is_ell_adic_unit(r.det_value, ell) && is_ell_adic_unit(r.twisted_det_value, ell);
  return r;
}

FrobeniusDetResult frobenius_det(const PicardCurve& c, std::uint64_t q, std::uint64_t ell) {
  if (ell <= 3 || ell == q || !is_prime(ell)) {
    throw std::invalid_argument("frobenius_det: ell must be a prime > 3 different from q");
  }
  return frobenius_det(lpoly(c, q).L_C, q, ell);
}

}  // namespace ceresa
