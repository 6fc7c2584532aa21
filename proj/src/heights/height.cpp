#include "ceresa/heights/height.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ceresa/elliptic/torsion.hpp"

namespace ceresa {

namespace {

long double log_abs(const Integer& n) {
  signed long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(std::fabs(static_cast<long double>(mantissa))) +
         static_cast<long double>(exponent) * std::numbers::ln2_v<long double>;
}

long double to_long_double(const Integer& n) {
  signed long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::ldexp(static_cast<long double>(mantissa), static_cast<int>(exponent));
}

long double ratio(const Integer& num, const Integer& den) {
  signed long en = 0;
  signed long ed = 0;
  const double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
}

Integer icbrt_floor(const Integer& n) {
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

constexpr unsigned kMaxMultiple = 240;

constexpr int kSeriesTerms = 48;

}  // namespace

long double log_abs(const Rational& q) {
  if (q == 0) throw std::domain_error("log_abs: zero");
  return log_abs(q.get_num()) - log_abs(q.get_den());
}

double naive_height(const Rational& x) {
  const Integer m = abs(x.get_num());
  const Integer& n = x.get_den();
  return static_cast<double>(log_abs(m > n ? m : n));
}

HeightValue canonical_height(const CurveQ& e, const PointQ& p) {
  if (p.is_infinity()) return {};
  if (!e.contains(p)) throw std::invalid_argument("canonical_height: point is not on the curve");
  if (torsion_j0_Q(e.d()).contains(e, p)) return {};

  // Integral model y² = x³ + D, sixth-power free, with D = d·w⁶; the height does not see the rescaling.
  const Integer& m = e.d().get_den();
  Rational w(m);
  Integer D = e.d().get_num() * pow(m, 5);
  for (const auto& [prime, mult] : factor_integer(abs(D))) {
    for (unsigned i = 0; i + 6 <= mult; i += 6) {
      D /= pow(prime, 6);
      w /= prime;
    }
  }
  const CurveQ model{Rational(D)};
  const Rational w2 = w * w;
  const PointQ base(Rational(p.x() * w2), Rational(p.y() * w2 * w));

  // Smallest multiple with nonsingular reduction at every prime; divides 12 unless the model is
  // still non-minimal at 2 or 3.
  PointQ q;
  Integer ee;
  unsigned k = 0;
  for (unsigned j = 1; j <= kMaxMultiple; ++j) {
    q = model.add(q, base);
    if (!mpz_perfect_square_p(q.x().get_den().get_mpz_t())) throw std::logic_error("canonical_height: bad model");
    mpz_sqrt(ee.get_mpz_t(), q.x().get_den().get_mpz_t());
    const Integer two_b = 2 * q.y().get_num();
    const Integer three_a2 = 3 * q.x().get_num() * q.x().get_num();
    Integer g;
    mpz_gcd(g.get_mpz_t(), two_b.get_mpz_t(), three_a2.get_mpz_t());
    if (g == 1) {
      k = j;
      break;
    }
  }
  if (k == 0) throw std::logic_error("canonical_height: no multiple with everywhere good reduction");

  // Shift x' = x − r so every real point has x' ≥ s ≥ 1; then the duplication numerator stays positive.
  const Integer s = icbrt_floor(abs(D)) + 1;
  Integer c = icbrt_floor(abs(D));
  if (D > 0 && c * c * c != D) c += 1;
  const Integer real_root_floor = D > 0 ? Integer(-c) : c;
  const Integer r = real_root_floor - s;
  const Rational xs = q.x() - r;
  if (xs < Rational(s)) throw std::logic_error("canonical_height: shift failed");

  const long double rl = to_long_double(r);
  const long double Dl = to_long_double(D);
  const long double b2 = 12 * rl;
  const long double b4 = 6 * rl * rl;
  const long double b6 = 4 * (rl * rl * rl + Dl);
  const long double b8 = 3 * rl * rl * rl * rl + 12 * rl * Dl;

  const long double log_e = log_abs(ee);
  const long double half_log_x = log_abs(xs) / 2;
  long double t = ratio(xs.get_den(), xs.get_num());
  long double series = 0;
  long double magnitude = std::fabs(log_e) + std::fabs(half_log_x);
  long double max_log_z = 0;
  long double weight = 1;
  for (int n = 0; n < kSeriesTerms; ++n) {
    const long double t2 = t * t;
    const long double z = 1 - b4 * t2 - 2 * b6 * t2 * t - b8 * t2 * t2;
    const long double w = 4 * t + b2 * t2 + 2 * b4 * t2 * t + b6 * t2 * t2;
    if (!(z > 0)) throw std::logic_error("canonical_height: series left its domain");
    const long double lz = std::log(z);
    series += weight * lz;
    magnitude += weight * std::fabs(lz);
    max_log_z = std::max(max_log_z, std::fabs(lz));
    weight /= 4;
    t = w / z;
  }
  const long double value = log_e + half_log_x + series / 8;
  const long double tail = weight * max_log_z;
  const long double rounding = 64 * std::numeric_limits<long double>::epsilon() * magnitude;
  const long double kk = static_cast<long double>(k) * k;
  return {static_cast<double>(value / kk), static_cast<double>((tail + rounding) / kk + 1e-15)};
}

}  // namespace ceresa
