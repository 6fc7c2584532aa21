#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ceresa/arith/integer.hpp"

namespace ceresa {

/// Element of F_p for a prime p > 3, p < 2^32.
///
/// The modulus travels with the value so that curve code can be written once
/// for Q and F_p. Mixing elements of different fields throws
/// std::invalid_argument.
class PrimeFieldElement {
 public:
  /// Validates that p is a prime in (3, 2^32).
  PrimeFieldElement(std::int64_t value, std::uint64_t p);

  /// Reduces a rational with denominator prime to p. Throws std::domain_error otherwise.
  static PrimeFieldElement from_rational(const Rational& q, std::uint64_t p);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator/(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement& operator+=(const PrimeFieldElement& o) { return *this = *this + o; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) { return *this = *this - o; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) { return *this = *this * o; }

  friend PrimeFieldElement operator*(std::int64_t k, const PrimeFieldElement& z) {
    return PrimeFieldElement(z.p_, reduce(k, z.p_), Unchecked{}) * z;
  }

  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t exponent) const;

  bool operator==(const PrimeFieldElement& o) const noexcept { return value_ == o.value_ && p_ == o.p_; }
  bool operator!=(const PrimeFieldElement& o) const noexcept { return !(*this == o); }
  bool operator==(std::int64_t k) const noexcept { return value_ == reduce(k, p_); }

  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& z) { return os << z.value_; }

 private:
  struct Unchecked {};
  PrimeFieldElement(std::uint64_t p, std::uint64_t value, Unchecked) : value_(value), p_(p) {}
  static std::uint64_t reduce(std::int64_t k, std::uint64_t p) noexcept;
  void check_same_field(const PrimeFieldElement& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

/// All y with y³ = z. One root when p ≡ 2 (mod 3) or z = 0; zero or three otherwise.
std::vector<PrimeFieldElement> cube_roots(const PrimeFieldElement& z);

/// {r, −r} with r² = z (r ≤ −r as residues), {0, 0} for z = 0, nullopt for non-residues.
std::optional<std::pair<PrimeFieldElement, PrimeFieldElement>> sqrt_mod(const PrimeFieldElement& z);

/// z^((p−1)/2) as −1, 0 or 1.
int legendre(const PrimeFieldElement& z);

}  // namespace ceresa
