#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ceresa {

using Integer = mpz_class;
/// Always canonical: gcd(|num|, den) = 1, den ≥ 1, zero is 0/1.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den = 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "m", "-m" or "m/n" exactly. Decimal points and exponents are refused.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

/// Deterministic for n < 3.3e24, probabilistic (GMP, 40 rounds) above.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Primes p with lo ≤ p ≤ hi, ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Prime factorization of |n| (n ≠ 0) by trial division and Pollard–Brent.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

/// r with r^k = n exactly, if such an integer exists (k ≥ 1).
std::optional<Integer> exact_root(const Integer& n, unsigned k);
std::optional<Rational> exact_root(const Rational& q, unsigned k);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

/// v_p(n) for n ≠ 0; returns a large sentinel for n = 0.
long valuation(const Integer& n, const Integer& p);

inline constexpr long kInfiniteValuation = 1L << 40;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

}  // namespace ceresa
