#include "ceresa/arith/factor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ceresa/arith/poly_mod.hpp"

namespace ceresa {

namespace {

bool factor_less(const IntPolynomial& l, const IntPolynomial& r) {
  if (l.degree() != r.degree()) return l.degree() < r.degree();
  return std::lexicographical_compare(l.coefficients().begin(), l.coefficients().end(), r.coefficients().begin(),
                                      r.coefficients().end());
}

IntPolynomial positive_lead(IntPolynomial f) {
  f = primitive_part(f);
  return f;
}

// Coefficientwise reduction into (−m/2, m/2].
IntPolynomial symmetric_mod(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> v = f.coefficients();
  const Integer half = m / 2;
  for (Integer& c : v) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial mod_poly(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> v = f.coefficients();
  for (Integer& c : v) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(v));
}

// Bezout s·g + t·h = 1 over F_p.
std::pair<ZpPoly, ZpPoly> bezout(const ZpPoly& g, const ZpPoly& h) {
  const std::uint64_t p = g.modulus();
  ZpPoly r0 = g, r1 = h;
  ZpPoly s0 = ZpPoly::monomial(1, 0, p), s1(p);
  ZpPoly t0(p), t1 = ZpPoly::monomial(1, 0, p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZpPoly s2 = s0 - q * s1;
    ZpPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw std::logic_error("bezout: factors not coprime mod p");
  const std::uint64_t inv = powmod(r0.leading(), p - 2, p);
  return {s0.scaled(inv), t0.scaled(inv)};
}

// Lifts f ≡ g·h (mod p) with h monic to f ≡ G·H (mod p^k), H monic.
std::pair<IntPolynomial, IntPolynomial> hensel_lift(const IntPolynomial& f, const ZpPoly& g0, const ZpPoly& h0,
                                                    unsigned k) {
  const std::uint64_t p = g0.modulus();
  const Integer P(static_cast<unsigned long>(p));
  const auto [s, t] = bezout(g0, h0);
  IntPolynomial g = g0.lift();
  IntPolynomial h = h0.lift();
  Integer pj = P;
  for (unsigned j = 1; j < k; ++j) {
    // e = (f − g·h)/p^j mod p
    IntPolynomial diff = f - g * h;
    std::vector<Integer> ec = diff.coefficients();
    for (Integer& c : ec) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    const ZpPoly e = ZpPoly::reduce(IntPolynomial(std::move(ec)), p);
    auto [quot, b] = divmod(e * s, h0);
    const ZpPoly a = e * t + quot * g0;
    g = g + a.lift() * pj;
    h = h + b.lift() * pj;
    pj *= P;
    g = mod_poly(g, pj);
    h = mod_poly(h, pj);
  }
  return {g, h};
}

// Monic factors of f modulo p^k lifted from the monic factors modulo p.
std::vector<IntPolynomial> multifactor_lift(const IntPolynomial& f, const std::vector<ZpPoly>& factors, unsigned k,
                                            const Integer& pk) {
  const std::uint64_t p = factors.front().modulus();
  if (factors.size() == 1) {
    Integer inv;
    const Integer lc = f.leading();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    return {mod_poly(f * inv, pk)};
  }
  const std::size_t half = factors.size() / 2;
  ZpPoly g0 = ZpPoly::monomial(1, 0, p);
  ZpPoly h0 = ZpPoly::monomial(1, 0, p);
  for (std::size_t i = 0; i < half; ++i) g0 = g0 * factors[i];
  for (std::size_t i = half; i < factors.size(); ++i) h0 = h0 * factors[i];
  g0 = g0.scaled(mpz_fdiv_ui(f.leading().get_mpz_t(), p));
  auto [g, h] = hensel_lift(f, g0, h0, k);
  std::vector<IntPolynomial> left = multifactor_lift(g, {factors.begin(), factors.begin() + half}, k, pk);
  std::vector<IntPolynomial> right = multifactor_lift(h, {factors.begin() + half, factors.end()}, k, pk);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::optional<IntPolynomial> try_divide(const IntPolynomial& f, const IntPolynomial& g) {
  try {
    return divide_exact(f, g);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& input) {
  IntPolynomial f = positive_lead(input);
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("factor_squarefree needs a nonconstant polynomial");
  if (n == 1) return {f};

  // Prime with the fewest modular factors among a handful of candidates.
  std::vector<ZpPoly> best;
  std::uint64_t best_p = 0;
  int tried = 0;
  for (std::uint64_t p = 5; tried < 12; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0) continue;
    const ZpPoly fp = ZpPoly::reduce(f, p);
    if (gcd(fp, fp.derivative()).degree() != 0) continue;
    ++tried;
    std::vector<ZpPoly> fs = ceresa::factor_squarefree(fp);
    if (best_p == 0 || fs.size() < best.size()) {
      best = std::move(fs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Factor coefficient bound: |lc|·2^n·‖f‖, with ‖f‖ ≤ (n+1)·max|a_i|.
  Integer max_coeff = 0;
  for (const Integer& c : f.coefficients()) max_coeff = std::max(max_coeff, Integer(abs(c)));
  const Integer bound = abs(f.leading()) * pow(Integer(2), static_cast<unsigned long>(n)) * (n + 1) * max_coeff;
  const Integer P(static_cast<unsigned long>(best_p));
  unsigned k = 1;
  Integer pk = P;
  while (pk <= 2 * bound) {
    pk *= P;
    ++k;
  }

  std::vector<IntPolynomial> lifted = multifactor_lift(f, best, k, pk);
  std::vector<IntPolynomial> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      IntPolynomial cand = IntPolynomial::constant(f.leading());
      for (std::size_t i : idx) cand = mod_poly(cand * lifted[i], pk);
      cand = primitive_part(symmetric_mod(cand, pk));
      if (auto q = try_divide(f, cand)) {
        found.push_back(cand);
        f = positive_lead(*q);
        for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        progress = true;
        break;
      }
    } while (next_subset(idx, lifted.size()));
    if (!progress) ++s;
  }
  if (f.degree() > 0) found.push_back(f);
  std::sort(found.begin(), found.end(), factor_less);
  return found;
}

std::vector<PolynomialFactor> squarefree_decomposition(const IntPolynomial& input) {
  if (input.degree() < 1) throw std::invalid_argument("squarefree_decomposition needs a nonconstant polynomial");
  const RatPolynomial f = to_rational(input);
  const RatPolynomial df = f.derivative();
  const RatPolynomial b = gcd(f, df);
  RatPolynomial c = divmod(f, b).first;
  RatPolynomial d = divmod(df, b).first - c.derivative();
  std::vector<PolynomialFactor> out;
  for (unsigned i = 1; c.degree() > 0; ++i) {
    const RatPolynomial a = gcd(c, d);
    if (a.degree() > 0) out.push_back({to_primitive_integer(a), i});
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
  }
  return out;
}

std::vector<PolynomialFactor> factor(const IntPolynomial& f) {
  std::vector<PolynomialFactor> out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (IntPolynomial& h : factor_squarefree(g)) out.push_back({std::move(h), mult});
  }
  std::sort(out.begin(), out.end(),
            [](const PolynomialFactor& l, const PolynomialFactor& r) { return factor_less(l.factor, r.factor); });
  return out;
}

}  // namespace ceresa
