#include "ceresa/picard/picard.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "ceresa/errors.hpp"

namespace ceresa {

Rational discriminant(const Rational& a, const Rational& b) { return Rational(16 * b * (a * a - 4 * b)); }

PicardCurve::PicardCurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant(a_, b_) == 0) throw DegenerateCurve();
}

PicardCurve picard_from_t(const Rational& t) { return PicardCurve(Rational(2 * t), Rational(1)); }

PicardInvariants invariants(const Rational& a, const Rational& b) {
  const Rational delta = discriminant(a, b);
  if (delta == 0) throw DegenerateCurve();
  return {delta, Rational((4 * b - a * a) / (4 * b))};
}

PicardInvariants invariants(const PicardCurve& c) { return invariants(c.a(), c.b()); }

IsomorphismResult is_isomorphic(const PicardCurve& c1, const PicardCurve& c2, IsomorphismMode mode) {
  IsomorphismResult r;
  if (invariants(c1).j != invariants(c2).j) return r;
  if (mode == IsomorphismMode::OverClosure) {
    r.isomorphic = true;
    return r;
  }
  // Equal j forces a₁ = 0 ⟺ a₂ = 0.
  std::optional<Rational> lambda;
  if (c1.a() != 0) {
    lambda = exact_root(Rational(c2.a() / c1.a()), 6);
  } else {
    lambda = exact_root(Rational(c2.b() / c1.b()), 12);
  }
  if (!lambda) return r;
  *lambda = abs(*lambda);
  if (pow(*lambda, 6) * c1.a() == c2.a() && pow(*lambda, 12) * c1.b() == c2.b()) {
    r.isomorphic = true;
    r.lambda = lambda;
  }
  return r;
}

AssociatedCurves associated_curves(const PicardCurve& c) {
  const Rational& a = c.a();
  const Rational& b = c.b();
  const Rational m = a * a - 4 * b;
  AssociatedCurves out{CurveQ(Rational(16 * m)), CurveQ(Rational(4 * b * m * m)), PointQ(m, Rational(a * m))};
  if (!out.EDelta.contains(out.Q)) throw std::logic_error("associated_curves: Q is not on E^Delta");
  return out;
}

std::string to_string(CeresaStatus s) { return s == CeresaStatus::Torsion ? "torsion" : "infinite"; }

CeresaVerdict decide_ceresa(const PicardCurve& c) {
  const AssociatedCurves ac = associated_curves(c);
  const TorsionGroupQ tg = torsion_j0_Q(ac.EDelta.d());
  const auto elements = tg.elements(ac.EDelta);
  CeresaVerdict v;
  v.edelta_torsion = tg.structure;
  std::ostringstream ev;
  ev << "Q = (" << to_string(ac.Q.x()) << ", " << to_string(ac.Q.y()) << ") on E^Delta: y^2 = x^3 + "
     << to_string(ac.EDelta.d()) << "; rational torsion " << to_string(tg.structure);
  for (std::size_t k = 1; k < elements.size(); ++k) {
    if (elements[k] == ac.Q) {
      const unsigned n = tg.order();
      const unsigned order = n / std::gcd(n, static_cast<unsigned>(k));
      v.status = CeresaStatus::Torsion;
      v.q_order = order;
      ev << "; Q = " << k << "*G has order " << order;
      v.evidence = ev.str();
      return v;
    }
  }
  v.status = CeresaStatus::Infinite;
  ev << "; Q is not a rational torsion point, so it has infinite order";
  v.evidence = ev.str();
  return v;
}

CeresaVerdict decide_ceresa(const Rational& a, const Rational& b) { return decide_ceresa(PicardCurve(a, b)); }

CeresaVerdict decide_ceresa_t(const Rational& t) { return decide_ceresa(picard_from_t(t)); }

namespace {

long ceil_div(long n, long d) { return (n + d - 1) / d; }

}  // namespace

ScaledModel integral_model(const PicardCurve& c) {
  const Integer& da = c.a().get_den();
  const Integer& db = c.b().get_den();
  Integer lambda = 1;
  if (da * db != 1) {
    for (const auto& [p, e] : factor_integer(Integer(da * db))) {
      (void)e;
      const long need = std::max(ceil_div(valuation(da, p), 6), ceil_div(valuation(db, p), 12));
      lambda *= pow(p, static_cast<unsigned long>(need));
    }
  }
  const Rational l(lambda);
  return {PicardCurve(Rational(c.a() * pow(l, 6)), Rational(c.b() * pow(l, 12))), l};
}

ScaledModel canonical_model(const PicardCurve& c) {
  ScaledModel m = integral_model(c);
  Integer a = m.curve.a().get_num();
  Integer b = m.curve.b().get_num();
  Integer g = abs(b);
  if (a != 0) mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Rational lambda = m.lambda;
  if (g > 1) {
    for (const auto& [p, e] : factor_integer(g)) {
      (void)e;
      const Integer p6 = pow(p, 6), p12 = pow(p, 12);
      while (mpz_divisible_p(a.get_mpz_t(), p6.get_mpz_t()) != 0 &&
             mpz_divisible_p(b.get_mpz_t(), p12.get_mpz_t()) != 0) {
        a /= p6;
        b /= p12;
        lambda /= p;
      }
    }
  }
  return {PicardCurve(Rational(a), Rational(b)), lambda};
}

bool has_good_reduction(const PicardCurve& c, std::uint64_t p) {
  if (p <= 3) return false;
  const PicardCurve m = integral_model(c).curve;
  const Rational delta = discriminant(m.a(), m.b());
  return mpz_divisible_ui_p(delta.get_num().get_mpz_t(), p) == 0;
}

}  // namespace ceresa
