#pragma once

#include <optional>
#include <string>

#include "ceresa/arith/integer.hpp"
#include "ceresa/elliptic/curve.hpp"
#include "ceresa/elliptic/torsion.hpp"

namespace ceresa {

/// y³ = x⁴ + a·x² + b with Δ = 16b(a² − 4b) ≠ 0.
class PicardCurve {
 public:
  /// Throws DegenerateCurve when Δ = 0.
  PicardCurve(Rational a, Rational b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  bool operator==(const PicardCurve& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  Rational a_;
  Rational b_;
};

/// The curve with (a, b) = (2t, 1).
PicardCurve picard_from_t(const Rational& t);

Rational discriminant(const Rational& a, const Rational& b);

struct PicardInvariants {
  Rational delta;
  Rational j;
};

PicardInvariants invariants(const PicardCurve& c);
/// Validating form; throws DegenerateCurve on Δ = 0.
PicardInvariants invariants(const Rational& a, const Rational& b);

enum class IsomorphismMode { OverQ, OverClosure };

struct IsomorphismResult {
  bool isomorphic = false;
  /// λ with (a₂, b₂) = (λ⁶a₁, λ¹²b₁); only for OverQ, chosen positive.
  std::optional<Rational> lambda;
};

IsomorphismResult is_isomorphic(const PicardCurve& c1, const PicardCurve& c2, IsomorphismMode mode);

struct AssociatedCurves {
  CurveQ E;       // y² = x³ + 16(a² − 4b)
  CurveQ EDelta;  // y² = x³ + 4b(a² − 4b)²
  PointQ Q;       // (a² − 4b, a(a² − 4b)) on EDelta
};

AssociatedCurves associated_curves(const PicardCurve& c);

enum class CeresaStatus { Torsion, Infinite };

std::string to_string(CeresaStatus s);

struct CeresaVerdict {
  CeresaStatus status = CeresaStatus::Infinite;
  /// Exact order of Q on E^Δ; present iff status is Torsion.
  std::optional<unsigned> q_order;
  std::string evidence;
  TorsionStructure edelta_torsion = TorsionStructure::Trivial;
};

CeresaVerdict decide_ceresa(const PicardCurve& c);
CeresaVerdict decide_ceresa(const Rational& a, const Rational& b);
CeresaVerdict decide_ceresa_t(const Rational& t);

/// A Q-isomorphic model (λ⁶a, λ¹²b) together with λ.
struct ScaledModel {
  PicardCurve curve;
  Rational lambda;
};

/// Clears denominators with the smallest positive integer λ.
ScaledModel integral_model(const PicardCurve& c);

/// The unique integral model in the Q-isomorphism class with no prime p such that
/// p⁶ | a and p¹² | b. Used as the canonical key of the class.
ScaledModel canonical_model(const PicardCurve& c);

/// p > 3 and p ∤ Δ of the integral model.
bool has_good_reduction(const PicardCurve& c, std::uint64_t p);

}  // namespace ceresa
