#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ceresa/arith/integer.hpp"
#include "ceresa/arith/poly_mod.hpp"

namespace ceresa {

/// F_{p^k} for k ∈ {1, 2, 3}, realized as F_p[x]/(m). The modulus m is the monic irreducible of
/// degree k whose coefficient tuple (m_{k−1}, …, m_0) is lexicographically smallest.
class ExtensionField {
 public:
  /// Coefficients of 1, x, x²; unused slots are zero.
  using Element = std::array<std::uint64_t, 3>;

  ExtensionField(std::uint64_t p, unsigned degree);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return q_; }
  ZpPoly modulus() const;

  /// The element whose coefficients are the base-p digits of `index`, for 0 ≤ index < size().
  Element element(std::uint64_t index) const;
  Element constant(std::uint64_t c) const { return {c % p_, 0, 0}; }

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element pow(Element x, std::uint64_t e) const;
  Element inverse(const Element& x) const;
  static bool is_zero(const Element& x) { return x[0] == 0 && x[1] == 0 && x[2] == 0; }

  /// N_{F_{p^k}/F_p}(x).
  std::uint64_t norm(const Element& x) const;

  /// #{y ∈ F_{p^k} : y³ = z}.
  unsigned cube_root_count(const Element& z) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  Element m_{};  // m = x^k + m_{k−1}x^{k−1} + … + m_0
  std::vector<std::uint8_t> is_cube_;  // over F_p*, filled when 3 | p − 1
};

}  // namespace ceresa
