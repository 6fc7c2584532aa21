#include "ceresa/arith/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ceresa/arith/poly_mod.hpp"

namespace ceresa {

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {RatPolynomial(), f};
  std::vector<Rational> r = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  std::vector<Rational> q(r.size() - dg, Rational(0));
  for (std::size_t k = r.size(); k-- > dg;) {
    const Rational coef = r[k] / gc.back();
    q[k - dg] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= coef * gc[j];
  }
  r.resize(dg);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw std::domain_error("divide_exact: degree too small");
  std::vector<Integer> r = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  std::vector<Integer> q(r.size() - dg, Integer(0));
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k] == 0) continue;
    if (mpz_divisible_p(r[k].get_mpz_t(), gc.back().get_mpz_t()) == 0) {
      throw std::domain_error("divide_exact: non-integral quotient");
    }
    Integer coef;
    mpz_divexact(coef.get_mpz_t(), r[k].get_mpz_t(), gc.back().get_mpz_t());
    q[k - dg] = coef;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= coef * gc[j];
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (r[i] != 0) throw std::domain_error("divide_exact: nonzero remainder");
  }
  return IntPolynomial(std::move(q));
}

RatPolynomial gcd(const RatPolynomial& f, const RatPolynomial& g) {
  RatPolynomial a = f;
  RatPolynomial b = g;
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    // Keep coefficient growth in check.
    if (!r.is_zero()) r = to_rational(to_primitive_integer(r));
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.leading());
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const Integer& c : f.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (!f.is_zero() && f.leading() < 0) g = -g;
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  const Integer c = content(f);
  std::vector<Integer> v = f.coefficients();
  for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(v));
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> v;
  v.reserve(f.coefficients().size());
  for (const Integer& c : f.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial to_primitive_integer(const RatPolynomial& f) {
  Integer l = 1;
  for (const Rational& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> v;
  v.reserve(f.coefficients().size());
  for (const Rational& c : f.coefficients()) v.emplace_back(c.get_num() * (l / c.get_den()));
  return primitive_part(IntPolynomial(std::move(v)));
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.degree() <= 0) return primitive_part(f);
  const RatPolynomial rf = to_rational(f);
  const RatPolynomial g = gcd(rf, rf.derivative());
  return to_primitive_integer(divmod(rf, g).first);
}

namespace {

IntPolynomial strip_zero_roots(const IntPolynomial& f, bool& had_zero) {
  const auto& c = f.coefficients();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  had_zero = k > 0;
  return IntPolynomial(std::vector<Integer>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

}  // namespace

std::vector<Rational> rational_roots_by_divisors(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  bool had_zero = false;
  const IntPolynomial g = strip_zero_roots(f, had_zero);
  std::vector<Rational> out;
  if (had_zero) out.emplace_back(0);
  if (g.degree() >= 1) {
    const std::vector<Integer> nums = divisors(g.coeff(0));
    const std::vector<Integer> dens = divisors(g.leading());
    for (const Integer& q : dens) {
      for (const Integer& p : nums) {
        if (gcd(p, q) != 1) continue;
        for (int sign : {1, -1}) {
          const Rational r = make_rational(Integer(sign * p), q);
          if (g.evaluate(r) == 0) out.push_back(r);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> rational_roots_by_lifting(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  bool had_zero = false;
  const IntPolynomial stripped = strip_zero_roots(f, had_zero);
  std::vector<Rational> out;
  if (had_zero) out.emplace_back(0);
  const IntPolynomial sf = squarefree_part(stripped);
  if (sf.degree() >= 1) {
    const Integer lc = sf.leading();
    const int n = sf.degree();
    // g(y) = lc^(n-1) f(y/lc) is monic with integer coefficients; roots y = lc·r.
    std::vector<Integer> gc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) gc[i] = sf.coeff(i) * pow(lc, static_cast<unsigned long>(n - 1 - std::min(i, n - 1)));
    gc[n] = 1;
    const IntPolynomial g(gc);
    // Cauchy bound on |y|.
    Integer bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, Integer(abs(gc[i])));
    bound += 1;

    std::uint64_t p = 5;
    ZpPoly gp(p);
    for (;; p += 2) {
      if (!is_prime(p)) continue;
      gp = ZpPoly::reduce(g, p);
      if (gcd(gp, gp.derivative()).degree() == 0) break;
    }
    const Integer P(static_cast<unsigned long>(p));
    const IntPolynomial dg = g.derivative();
    for (std::uint64_t r0 : roots(gp)) {
      Integer r(static_cast<unsigned long>(r0));
      Integer modulus = P;
      while (modulus <= 2 * bound) {
        modulus *= modulus;
        Integer num = g.evaluate(r);
        Integer den = dg.evaluate(r);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
        r = r - num * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
      }
      if (r > modulus / 2) r -= modulus;
      if (g.evaluate(r) == 0) out.push_back(make_rational(r, lc));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> rational_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  bool had_zero = false;
  const IntPolynomial g = strip_zero_roots(f, had_zero);
  constexpr std::size_t kSmallBits = 64;
  if (mpz_sizeinbase(g.coeff(0).get_mpz_t(), 2) <= kSmallBits &&
      mpz_sizeinbase(g.leading().get_mpz_t(), 2) <= kSmallBits) {
    return rational_roots_by_divisors(f);
  }
  return rational_roots_by_lifting(f);
}

namespace {

template <class T>
std::string format(const Polynomial<T>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const T c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    const T mag = negative ? T(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (!unit) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& f, const std::string& var) { return format(f, var); }
std::string to_string(const RatPolynomial& f, const std::string& var) { return format(f, var); }

}  // namespace ceresa
