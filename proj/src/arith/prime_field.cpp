#include "ceresa/arith/prime_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ceresa {

namespace {

void validate_modulus(std::uint64_t p) {
  thread_local std::uint64_t last_ok = 0;
  if (p == last_ok) return;
  if (p <= 3 || p >= (1ULL << 32U) || !is_prime(p)) {
    throw std::invalid_argument("prime field modulus must be a prime in (3, 2^32), got " + std::to_string(p));
  }
  last_ok = p;
}

}  // namespace

std::uint64_t PrimeFieldElement::reduce(std::int64_t k, std::uint64_t p) noexcept {
  const std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint64_t p) : value_(0), p_(p) {
  validate_modulus(p);
  value_ = reduce(value, p);
}

PrimeFieldElement PrimeFieldElement::from_rational(const Rational& q, std::uint64_t p) {
  validate_modulus(p);
  const Integer& den = q.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) {
    throw std::domain_error("denominator of " + to_string(q) + " is divisible by " + std::to_string(p));
  }
  const auto num = static_cast<std::int64_t>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
  const auto d = static_cast<std::int64_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
  return PrimeFieldElement(num, p) / PrimeFieldElement(d, p);
}

void PrimeFieldElement::check_same_field(const PrimeFieldElement& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed prime field moduli");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check_same_field(o);
  std::uint64_t s = value_ + o.value_;
  if (s >= p_) s -= p_;
  return {p_, s, Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check_same_field(o);
  return {p_, value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_, Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check_same_field(o);
  return {p_, (value_ * o.value_) % p_, Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::operator/(const PrimeFieldElement& o) const { return *this * o.inverse(); }

PrimeFieldElement PrimeFieldElement::operator-() const { return {p_, value_ == 0 ? 0 : p_ - value_, Unchecked{}}; }

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t exponent) const {
  return {p_, powmod(value_, exponent, p_), Unchecked{}};
}

int legendre(const PrimeFieldElement& z) {
  if (z.is_zero()) return 0;
  return z.pow((z.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

std::optional<std::pair<PrimeFieldElement, PrimeFieldElement>> sqrt_mod(const PrimeFieldElement& z) {
  const std::uint64_t p = z.modulus();
  if (z.is_zero()) return std::make_pair(z, z);
  if (legendre(z) != 1) return std::nullopt;

  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  PrimeFieldElement nonresidue(2, p);
  while (legendre(nonresidue) != -1) nonresidue += PrimeFieldElement(1, p);

  PrimeFieldElement c = nonresidue.pow(q);
  PrimeFieldElement r = z.pow((q + 1) / 2);
  PrimeFieldElement t = z.pow(q);
  unsigned m = s;
  const PrimeFieldElement one(1, p);
  while (t != one) {
    unsigned i = 0;
    PrimeFieldElement t2 = t;
    while (t2 != one) {
      t2 = t2 * t2;
      ++i;
    }
    PrimeFieldElement b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  PrimeFieldElement other = -r;
  if (other.value() < r.value()) std::swap(r, other);
  return std::make_pair(r, other);
}

std::vector<PrimeFieldElement> cube_roots(const PrimeFieldElement& z) {
  const std::uint64_t p = z.modulus();
  if (z.is_zero()) return {z};
  if (p % 3 == 2) {
    // Cubing is a bijection; (2p - 1)/3 inverts it.
    return {z.pow((2 * p - 1) / 3)};
  }
  const PrimeFieldElement one(1, p);
  if (z.pow((p - 1) / 3) != one) return {};

  // Cubic Tonelli-Shanks: p - 1 = 3^s * t with 3 ∤ t.
  std::uint64_t t = p - 1;
  unsigned s = 0;
  while (t % 3 == 0) {
    t /= 3;
    ++s;
  }
  // u with 3u ≡ 1 (mod t); then x0 = z^u satisfies x0³ = z·e, e in the 3-Sylow subgroup.
  std::uint64_t u = 0;
  for (std::uint64_t k = 0; k < 3; ++k) {
    if ((k * t + 1) % 3 == 0) {
      u = (k * t + 1) / 3;
      break;
    }
  }
  PrimeFieldElement x = z.pow(u);
  PrimeFieldElement error = x * x * x / z;

  PrimeFieldElement g(2, p);
  while (g.pow((p - 1) / 3) == one) g += one;
  const PrimeFieldElement c = g.pow(t);  // generator of the 3-Sylow subgroup, order 3^s

  // Pohlig-Hellman: error = c^L with L read off base-3 digit by digit.
  std::uint64_t L = 0;
  std::uint64_t power3 = 1;
  std::uint64_t top = 1;
  for (unsigned i = 0; i + 1 < s; ++i) top *= 3;
  const PrimeFieldElement omega = c.pow(top);  // primitive cube root of unity
  for (unsigned i = 0; i < s; ++i) {
    // (error · c^{-L})^{3^{s-1-i}} is omega^{digit}
    PrimeFieldElement residual = error / c.pow(L);
    for (unsigned j = 0; j + 1 + i < s; ++j) residual = residual.pow(3);
    unsigned digit = 0;
    if (residual == omega) {
      digit = 1;
    } else if (residual == omega * omega) {
      digit = 2;
    } else if (residual != one) {
      throw std::logic_error("cube_roots: discrete log digit not found");
    }
    L += digit * power3;
    power3 *= 3;
  }
  if (L % 3 != 0) throw std::logic_error("cube_roots: residue is not a cube");
  x = x / c.pow(L / 3);

  std::vector<PrimeFieldElement> roots{x, x * omega, x * omega * omega};
  std::sort(roots.begin(), roots.end(),
            [](const PrimeFieldElement& l, const PrimeFieldElement& r) { return l.value() < r.value(); });
  return roots;
}

}  // namespace ceresa
