#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ceresa/ffcert/frobenius.hpp"
#include "ceresa/ffcert/lift_sum.hpp"
#include "ceresa/picard/picard.hpp"

namespace ceresa {

struct CertificateHints {
  std::optional<std::uint64_t> v;
  std::optional<std::uint64_t> ell;
  std::optional<std::uint64_t> q;

  bool empty() const { return !v && !ell && !q; }
  bool complete() const { return v && ell && q; }
};

/// Witness that κ∞(C) has infinite order: ℓ | ord(σ) at v, and ℓ ∤ det(Fr_q − 1) on V.
struct InfinitudeCertificate {
  Rational a;
  Rational b;
  std::uint64_t v = 0;
  std::uint64_t ell = 0;
  std::uint64_t q = 0;
  LiftSumResult lift;
  FrobeniusDetResult det;
  std::string evidence;
};

inline constexpr std::uint64_t kDefaultSearchBound = 200;

/// With complete hints, checks them and throws InvalidHint naming the failed check. Otherwise
/// searches v, then ell | sigma_order, then q, each ascending, with v, q ≤ v_max; partial hints
/// pin the corresponding coordinate. Throws NoCertificateFound when the search is exhausted.
InfinitudeCertificate certify_infinite(const PicardCurve& c, const CertificateHints& hints = {},
                                       std::uint64_t v_max = kDefaultSearchBound);

/// Canonical text form; one "key value" line per field in a fixed order.
std::string serialize(const InfinitudeCertificate& cert);

/// Inverse of serialize. Only the claimed fields are filled; throws std::invalid_argument.
InfinitudeCertificate parse_certificate(const std::string& text);

struct ValidationResult {
  bool ok = false;
  /// Name of the first failing check, empty when ok.
  std::string failed_check;
};

/// Recomputes every claimed field from (a, b, v, ell, q).
ValidationResult validate_certificate(const InfinitudeCertificate& cert);

}  // namespace ceresa
