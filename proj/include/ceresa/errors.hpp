#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ceresa {

/// Base class for every domain failure raised by the library.
class CeresaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Δ = 16b(a² − 4b) vanishes: the plane quartic is singular.
class DegenerateCurve : public CeresaError {
 public:
  DegenerateCurve() : CeresaError("degenerate: Delta=0") {}
  explicit DegenerateCurve(const std::string& what) : CeresaError(what) {}
};

/// The curve does not have good reduction at the requested prime.
class BadReduction : public CeresaError {
 public:
  using CeresaError::CeresaError;
};

/// L_E does not divide L_C. Only an implementation bug can cause this.
class FactorizationFailure : public CeresaError {
 public:
  using CeresaError::CeresaError;
};

/// Certificate search exhausted its bounds. Not a proof of torsion.
class NoCertificateFound : public CeresaError {
 public:
  using CeresaError::CeresaError;
};

/// A user-supplied (v, ell, q) hint failed one of the certificate checks.
class InvalidHint : public CeresaError {
 public:
  InvalidHint(std::string check, const std::string& detail)
      : CeresaError("invalid hint: " + detail), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace ceresa
