#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ceresa/elliptic/torsion.hpp"
#include "ceresa/heights/height.hpp"
#include "ceresa/heights/northcott.hpp"

namespace ceresa {
namespace {

// Independent oracle: h(x(2ᴺP)) / (2·4ᴺ), exact coordinates.
double limit_height(const CurveQ& e, const PointQ& p, int doublings) {
  PointQ q = p;
  for (int i = 0; i < doublings; ++i) q = e.add(q, q);
  return naive_height(q.x()) / (2 * std::pow(4.0, doublings));
}

std::vector<std::pair<CurveQ, PointQ>> small_points(unsigned count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dd(-60, 60);
  std::vector<std::pair<CurveQ, PointQ>> out;
  while (out.size() < count) {
    const long d = dd(rng);
    if (d == 0) continue;
    const CurveQ e{Rational(d)};
    for (long x = -4; x <= 30 && out.size() < count; ++x) {
      const Integer rhs = Integer(x) * x * x + d;
      if (rhs < 0) continue;
      const auto y = exact_root(rhs, 2);
      if (!y) continue;
      const PointQ p{Rational(x), Rational(*y)};
      if (torsion_j0_Q(e.d()).contains(e, p)) continue;
      out.emplace_back(e, p);
      break;
    }
  }
  return out;
}

TEST(Heights, Naive) {
  EXPECT_EQ(naive_height(Rational(0)), 0);
  EXPECT_NEAR(naive_height(make_rational(3, 2)), std::log(3.0), 1e-15);
  EXPECT_NEAR(naive_height(Rational(-7)), std::log(7.0), 1e-15);
  EXPECT_NEAR(naive_height(make_rational(-2, 9)), std::log(9.0), 1e-15);
  const Rational huge(pow(Integer(10), 400));
  EXPECT_NEAR(naive_height(huge), 400 * std::log(10.0), 1e-9);
}

TEST(Heights, TorsionIsExactlyZero) {
  const CurveQ e{Rational(1)};
  for (const PointQ& p : torsion_j0_Q(e.d()).elements(e)) {
    const HeightValue h = canonical_height(e, p);
    EXPECT_EQ(h.value, 0.0);
    EXPECT_EQ(h.error_bound, 0.0);
  }
  EXPECT_EQ(canonical_height(e, PointQ(Rational(2), Rational(3))).value, 0.0);
}

TEST(Heights, PrimitivePointOnD36) {
  const CurveQ e{Rational(36)};
  const PointQ p{Rational(-3), Rational(-3)};
  const HeightValue v = canonical_height(e, p);
  const HeightValue v2 = canonical_height(e, e.add(p, p));
  EXPECT_GT(v.value, 0.1);
  EXPECT_LE(v.error_bound, 1e-6);
  EXPECT_LT(std::fabs(v2.value - 4 * v.value), 4e-6);
  EXPECT_NEAR(v.value, limit_height(e, p, 7), 2e-3);
}

TEST(Heights, AgreesWithLimitOracle) {
  for (const auto& [e, p] : small_points(8, 5)) {
    EXPECT_NEAR(canonical_height(e, p).value, limit_height(e, p, 7), 2e-3) << e.d() << " " << p;
  }
}

TEST(Heights, QuadraticInMultiples) {
  for (const auto& [e, p] : small_points(20, 17)) {
    const double h = canonical_height(e, p).value;
    EXPECT_GT(h, 0);
    for (long n : {2, 3, 5}) {
      const double hn = canonical_height(e, e.mul(Integer(n), p)).value;
      EXPECT_NEAR(hn, n * n * h, n * n * 1e-6) << e.d() << " " << p << " n=" << n;
    }
  }
}

TEST(Heights, ModelIndependent) {
  const CurveQ e{Rational(-2)};
  const PointQ p{Rational(3), Rational(5)};
  const double h = canonical_height(e, p).value;
  for (long u : {2, 3, 5}) {
    const Rational uu(u);
    const CurveQ scaled{Rational(-2 * pow(uu, 6))};
    EXPECT_NEAR(canonical_height(scaled, PointQ(Rational(3 * uu * uu), Rational(5 * pow(uu, 3)))).value, h, 1e-9);
    const CurveQ shrunk{Rational(-2 / pow(uu, 6))};
    EXPECT_NEAR(canonical_height(shrunk, PointQ(Rational(3 / (uu * uu)), Rational(5 / pow(uu, 3)))).value, h, 1e-9);
  }
}

TEST(Heights, DifferenceFromNaiveIsBounded) {
  const CurveQ e{Rational(36)};
  const PointQ p{Rational(-3), Rational(-3)};
  const double h = canonical_height(e, p).value;
  double lo = 1e300;
  double hi = -1e300;
  for (long n = 1; n <= 50; ++n) {
    const PointQ q = e.mul(Integer(n), p);
    const double diff = n * n * h - naive_height(q.x()) / 2;
    lo = std::min(lo, diff);
    hi = std::max(hi, diff);
  }
  RecordProperty("band_low", std::to_string(lo));
  RecordProperty("band_high", std::to_string(hi));
  EXPECT_TRUE(std::isfinite(lo) && std::isfinite(hi));
  EXPECT_LT(hi - lo, 10.0);
}

std::vector<Rational> ts(const std::vector<NorthcottRow>& rows) {
  std::vector<Rational> out;
  for (const auto& r : rows) out.push_back(r.t);
  return out;
}

TEST(Northcott, Examples) {
  const auto one = northcott_scan(1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].t, 0);
  EXPECT_EQ(one[0].verdict.status, CeresaStatus::Torsion);
  EXPECT_EQ(ts(northcott_scan(20, 0.0)), (std::vector<Rational>{-3, 0, 3}));
  for (const auto& row : northcott_scan(5)) {
    EXPECT_EQ(row.verdict.status == CeresaStatus::Torsion, row.height.value == 0.0) << row.t;
    if (row.verdict.status == CeresaStatus::Infinite) {
      EXPECT_GT(row.height.value, 0.0) << row.t;
    }
  }
}

TEST(Northcott, MonotoneInBoundAndHeight) {
  for (unsigned B = 1; B < 8; ++B) {
    for (double x : {0.0, 1.0, 2.5, 5.0}) {
      const auto n = northcott_scan(B, x).size();
      EXPECT_LE(n, northcott_scan(B + 1, x).size());
      EXPECT_LE(n, northcott_scan(B, x + 1).size());
    }
  }
}

TEST(Northcott, SerialMatchesParallel) {
  const auto a = northcott_scan(9, 4.0);
  const auto b = northcott_scan_serial(9, 4.0);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].t, b[i].t);
    EXPECT_EQ(a[i].verdict.status, b[i].verdict.status);
    EXPECT_EQ(a[i].height.value, b[i].height.value);
  }
}

}  // namespace
}  // namespace ceresa
