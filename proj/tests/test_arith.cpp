#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ceresa/arith/factor.hpp"
#include "ceresa/arith/integer.hpp"
#include "ceresa/arith/matrix.hpp"
#include "ceresa/arith/poly_mod.hpp"
#include "ceresa/arith/polynomial.hpp"
#include "ceresa/arith/prime_field.hpp"

namespace ceresa {
namespace {

std::vector<std::uint64_t> values(const std::vector<PrimeFieldElement>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& z : v) out.push_back(z.value());
  return out;
}

IntPolynomial ip(std::vector<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

TEST(Rational, ParsesExactForms) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0/5").get_den(), 1);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1e3"), std::invalid_argument);
  EXPECT_THROW(parse_rational("3/0"), std::invalid_argument);
  EXPECT_EQ(to_string(make_rational(-3, 6)), "-1/2");
}

TEST(Integer, FactorAndRoots) {
  const auto f = factor_integer(Integer("29049104246323668435011663307177984"));
  Integer back = 1;
  for (const auto& [p, e] : f) {
    EXPECT_TRUE(is_prime(p));
    back *= pow(p, e);
  }
  EXPECT_EQ(back, Integer("29049104246323668435011663307177984"));
  EXPECT_EQ(divisors(Integer(12)), (std::vector<Integer>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(*exact_root(Integer(-27), 3), -3);
  EXPECT_FALSE(exact_root(Integer(-4), 2).has_value());
  EXPECT_EQ(*exact_root(Rational(64, 729), 6), Rational(2, 3));
  EXPECT_EQ(valuation(Integer(250), Integer(5)), 3);
}

TEST(PrimeField, RejectsBadModulus) {
  EXPECT_THROW(PrimeFieldElement(1, 3), std::invalid_argument);
  EXPECT_THROW(PrimeFieldElement(1, 9), std::invalid_argument);
  EXPECT_THROW(PrimeFieldElement(1, 7) + PrimeFieldElement(1, 11), std::invalid_argument);
  EXPECT_EQ(PrimeFieldElement(-1, 7).value(), 6U);
  EXPECT_EQ(PrimeFieldElement::from_rational(Rational(1, 2), 7).value(), 4U);
  EXPECT_THROW(PrimeFieldElement::from_rational(Rational(1, 7), 7), std::domain_error);
}

TEST(PrimeField, CubeRootExamples) {
  EXPECT_EQ(values(cube_roots(PrimeFieldElement(0, 7))), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(values(cube_roots(PrimeFieldElement(1, 7))), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(values(cube_roots(PrimeFieldElement(2, 5))), (std::vector<std::uint64_t>{3}));
  EXPECT_TRUE(cube_roots(PrimeFieldElement(2, 7)).empty());
}

TEST(PrimeField, CubeRootsMatchBruteForce) {
  for (std::uint64_t p : primes_between(5, 400)) {
    for (std::uint64_t z = 0; z < p; ++z) {
      std::vector<std::uint64_t> brute;
      for (std::uint64_t y = 0; y < p; ++y) {
        if (y * y % p * y % p == z) brute.push_back(y);
      }
      const auto got = values(cube_roots(PrimeFieldElement(static_cast<std::int64_t>(z), p)));
      ASSERT_EQ(got, brute) << "p=" << p << " z=" << z;
      if (p % 3 == 2 || z == 0) {
        EXPECT_EQ(got.size(), 1U);
      } else {
        EXPECT_TRUE(got.empty() || got.size() == 3);
      }
    }
  }
}

TEST(PrimeField, CubeRootsHighThreeAdicValuation) {
  // 3^6 | p − 1 for p = 2917 = 4·729 + 1.
  const std::uint64_t p = 2917;
  ASSERT_TRUE(is_prime(p));
  for (std::int64_t y = 1; y < 200; ++y) {
    const PrimeFieldElement r(y, p);
    const auto roots = cube_roots(r * r * r);
    ASSERT_EQ(roots.size(), 3U);
    for (const auto& c : roots) EXPECT_EQ(c * c * c, r * r * r);
  }
}

TEST(PrimeField, SqrtExamples) {
  auto r = sqrt_mod(PrimeFieldElement(2, 7));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first.value(), 3U);
  EXPECT_EQ(r->second.value(), 4U);
  EXPECT_FALSE(sqrt_mod(PrimeFieldElement(3, 7)));
  r = sqrt_mod(PrimeFieldElement(0, 11));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first.value(), 0U);
}

TEST(PrimeField, SqrtMatchesBruteForce) {
  for (std::uint64_t p : primes_between(5, 101)) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t y = 0; y < p; ++y) squares.insert(y * y % p);
    for (std::uint64_t z = 0; z < p; ++z) {
      const auto r = sqrt_mod(PrimeFieldElement(static_cast<std::int64_t>(z), p));
      ASSERT_EQ(r.has_value(), squares.count(z) == 1) << p << " " << z;
      if (r) {
        EXPECT_EQ((r->first * r->first).value(), z);
        EXPECT_EQ(r->second, -r->first);
      }
      EXPECT_EQ(legendre(PrimeFieldElement(static_cast<std::int64_t>(z), p)), z == 0 ? 0 : (r ? 1 : -1));
    }
  }
}

TEST(Polynomial, RationalRootExamples) {
  EXPECT_EQ(rational_roots(ip({-1, 0, 0, 1})), (std::vector<Rational>{1}));
  EXPECT_EQ(rational_roots(ip({-3, 2})), (std::vector<Rational>{Rational(3, 2)}));
  EXPECT_TRUE(rational_roots(ip({1, 0, 1})).empty());
  EXPECT_EQ(rational_roots(ip({0, 0, -4, 1})), (std::vector<Rational>{0, 4}));
}

TEST(Polynomial, RationalRootsAgreeWithCandidateEvaluation) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> coef(-12, 12);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<long> rootnum(-6, 6);
  std::uniform_int_distribution<long> rootden(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    // Half the cases get planted rational roots.
    IntPolynomial f = IntPolynomial::constant(1);
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) {
      if (trial % 2 == 0 && i < 2) {
        f *= ip({-rootnum(rng), rootden(rng)});
      } else {
        f *= ip({coef(rng), 1});
      }
    }
    if (trial % 3 == 0) f = f + ip({coef(rng)});
    if (f.is_zero() || f.degree() < 1) continue;

    std::set<Rational> expected;
    if (f.coeff(0) == 0) expected.insert(0);
    std::size_t shift = 0;
    while (f.coeff(shift) == 0) ++shift;
    const Integer c0 = f.coeff(shift);
    for (const Integer& p : divisors(c0)) {
      for (const Integer& q : divisors(f.leading())) {
        for (int s : {1, -1}) {
          const Rational r = make_rational(Integer(s * p), q);
          if (f.evaluate(r) == 0) expected.insert(r);
        }
      }
    }
    const std::vector<Rational> want(expected.begin(), expected.end());
    EXPECT_EQ(rational_roots(f), want) << to_string(f);
    EXPECT_EQ(rational_roots_by_divisors(f), want) << to_string(f);
    EXPECT_EQ(rational_roots_by_lifting(f), want) << to_string(f);
  }
}

TEST(Polynomial, LiftingHandlesHugeCoefficients) {
  // (p1·x − q1)(x² + 1) with 80-bit numbers, beyond the divisor-search route.
  const Integer a("1208925819614629174706189");
  const Integer b("1208925819614629174706177");
  const IntPolynomial f = IntPolynomial({Integer(-b), a}) * ip({1, 0, 1});
  EXPECT_EQ(rational_roots(f), (std::vector<Rational>{make_rational(b, a)}));
}

TEST(Polynomial, DivisionAndGcd) {
  const IntPolynomial f = ip({-1, 0, 0, 0, 1});
  const IntPolynomial g = ip({-1, 1});
  EXPECT_EQ(divide_exact(f, g), ip({1, 1, 1, 1}));
  EXPECT_THROW(divide_exact(f, ip({2, 1})), std::domain_error);
  EXPECT_EQ(gcd(to_rational(f), to_rational(ip({-1, 0, 1}))), to_rational(ip({-1, 0, 1})));
  EXPECT_EQ(squarefree_part(ip({1, 2, 1}) * ip({0, 2})), ip({0, 1, 1}));
  EXPECT_EQ(to_string(ip({0, 12, 0, 0, 3})), "3*x^4 + 12*x");
  EXPECT_EQ(to_string(ip({-3, 0, -1}), "t"), "-t^2 - 3");
}

TEST(Factor, KnownFactorizations) {
  auto fs = factor(ip({-1, 0, 0, 0, 1}));
  ASSERT_EQ(fs.size(), 3U);
  EXPECT_EQ(fs[0].factor, ip({-1, 1}));
  EXPECT_EQ(fs[1].factor, ip({1, 1}));
  EXPECT_EQ(fs[2].factor, ip({1, 0, 1}));
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  fs = factor(ip({1, 0, 0, 0, 1}));
  ASSERT_EQ(fs.size(), 1U);
  EXPECT_EQ(fs[0].multiplicity, 1U);
  // (2x+3)^3 (x^2 − 2)
  fs = factor(ip({3, 2}).pow(3) * ip({-2, 0, 1}));
  ASSERT_EQ(fs.size(), 2U);
  EXPECT_EQ(fs[0].factor, ip({3, 2}));
  EXPECT_EQ(fs[0].multiplicity, 3U);
  EXPECT_EQ(fs[1].factor, ip({-2, 0, 1}));
}

TEST(Factor, ProductOfRandomFactorsIsRecovered) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 15; ++trial) {
    IntPolynomial f = IntPolynomial::constant(1);
    for (int k = 0; k < 3; ++k) {
      std::vector<long> c(static_cast<std::size_t>(2 + trial % 4));
      for (auto& x : c) x = coef(rng);
      c.back() = 1 + static_cast<long>(trial % 2);
      f *= ip(c);
    }
    const auto fs = factor(f);
    IntPolynomial back = IntPolynomial::constant(1);
    for (const auto& [g, m] : fs) {
      back *= g.pow(m);
      if (g.degree() >= 2) {
        EXPECT_TRUE(rational_roots(g).empty());
      }
    }
    EXPECT_EQ(primitive_part(back), primitive_part(f));
  }
}

TEST(Factor, HighDegreeIrreducible) {
  // x^16 − x − 1 is irreducible (Selmer) but splits into several factors mod small p.
  std::vector<long> c(17, 0);
  c[16] = 1;
  c[1] = -1;
  c[0] = -1;
  const auto fs = factor(ip(c));
  ASSERT_EQ(fs.size(), 1U);
  EXPECT_EQ(fs[0].factor.degree(), 16);
}

TEST(PolyMod, RootsAndIrreducibility) {
  const ZpPoly f = ZpPoly::reduce(ip({-1, 0, 0, 1}), 7);
  EXPECT_EQ(roots(f), (std::vector<std::uint64_t>{1, 2, 4}));
  const ZpPoly g = ZpPoly::reduce(ip({-1, 0, 0, 1}), 103);
  EXPECT_EQ(roots(g).size(), 3U);
  EXPECT_TRUE(is_irreducible(ZpPoly::reduce(ip({1, 0, 1}), 7)));
  EXPECT_FALSE(is_irreducible(ZpPoly::reduce(ip({1, 0, 1}), 5)));
}

TEST(Matrix, CharPolyExamples) {
  RationalMatrix one(1, 1);
  one(0, 0) = 5;
  EXPECT_EQ(char_poly(one), to_rational(ip({-5, 1})));
  EXPECT_EQ(char_poly(RationalMatrix::identity(2)), to_rational(ip({1, -2, 1})));
  const RatPolynomial f = to_rational(ip({2, -3, 1}));
  EXPECT_EQ(char_poly(RationalMatrix::companion(f)), f);
}

TEST(Matrix, CharPolyOfRandomCompanion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-20, 20);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    c.back() = 1;
    const RatPolynomial f = to_rational(ip(c));
    const RationalMatrix m = RationalMatrix::companion(f);
    EXPECT_EQ(char_poly(m), f);
    const Rational sign = f.degree() % 2 == 0 ? 1 : -1;
    EXPECT_EQ(determinant(m), sign * f.coeff(0));
  }
}

TEST(Matrix, ExteriorPowerOfDiagonal) {
  RationalMatrix d(4, 4);
  for (int i = 0; i < 4; ++i) d(i, i) = i + 2;
  const RationalMatrix l2 = exterior_power(d, 2);
  ASSERT_EQ(l2.rows(), 6U);
  // Subsets {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
  const std::vector<long> want{6, 8, 10, 12, 15, 20};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(l2(i, i), want[i]);
  }
  EXPECT_EQ(determinant(exterior_power(d, 4)), determinant(d));
}

TEST(Matrix, ExteriorPowerIsMultiplicative) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-3, 3);
  RationalMatrix a(4, 4), b(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      a(i, j) = coef(rng);
      b(i, j) = make_rational(coef(rng), 2);
    }
  }
  EXPECT_EQ(exterior_power(a * b, 2), exterior_power(a, 2) * exterior_power(b, 2));
  EXPECT_EQ(exterior_power(a * b, 3), exterior_power(a, 3) * exterior_power(b, 3));
}

}  // namespace
}  // namespace ceresa
