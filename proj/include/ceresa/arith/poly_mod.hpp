#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ceresa/arith/integer.hpp"
#include "ceresa/arith/polynomial.hpp"

namespace ceresa {

/// Polynomial over F_p with word-sized coefficients, lowest degree first, trimmed.
/// p may be any prime below 2^32 here (2 and 3 included); callers that need
/// the p > 3 field invariant use PrimeFieldElement instead.
class ZpPoly {
 public:
  explicit ZpPoly(std::uint64_t p) : p_(p) {}
  ZpPoly(std::vector<std::uint64_t> coefficients, std::uint64_t p);
  static ZpPoly reduce(const IntPolynomial& f, std::uint64_t p);
  static ZpPoly monomial(std::uint64_t c, std::size_t k, std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  ZpPoly operator+(const ZpPoly& o) const;
  ZpPoly operator-(const ZpPoly& o) const;
  ZpPoly operator*(const ZpPoly& o) const;
  ZpPoly scaled(std::uint64_t k) const;
  ZpPoly monic() const;
  ZpPoly derivative() const;
  std::uint64_t evaluate(std::uint64_t x) const;

  bool operator==(const ZpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const ZpPoly& o) const { return !(*this == o); }

  /// Lifts coefficients to [0, p) integers.
  IntPolynomial lift() const;

 private:
  void trim();

  std::vector<std::uint64_t> c_;
  std::uint64_t p_;
};

std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& f, const ZpPoly& g);
ZpPoly operator%(const ZpPoly& f, const ZpPoly& g);
ZpPoly gcd(ZpPoly f, ZpPoly g);
/// base^e mod m.
ZpPoly powmod(const ZpPoly& base, const Integer& e, const ZpPoly& m);

/// Distinct roots in F_p, ascending.
std::vector<std::uint64_t> roots(const ZpPoly& f);

/// f squarefree: pairs (d, product of all monic irreducible factors of degree d).
std::vector<std::pair<int, ZpPoly>> distinct_degree_factorization(const ZpPoly& f);

/// Splits a product of distinct monic irreducibles of degree d (p odd).
std::vector<ZpPoly> equal_degree_factorization(const ZpPoly& f, int d, std::mt19937_64& rng);

/// Monic irreducible factors of a squarefree f, sorted by (degree, coefficients).
std::vector<ZpPoly> factor_squarefree(const ZpPoly& f);

bool is_irreducible(const ZpPoly& f);

}  // namespace ceresa
