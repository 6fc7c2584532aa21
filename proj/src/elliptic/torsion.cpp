#include "ceresa/elliptic/torsion.hpp"

#include <algorithm>
#include <map>

namespace ceresa {

std::string to_string(TorsionStructure s) {
  switch (s) {
    case TorsionStructure::Trivial:
      return "trivial";
    case TorsionStructure::Z2:
      return "Z/2";
    case TorsionStructure::Z3:
      return "Z/3";
    case TorsionStructure::Z6:
      return "Z/6";
  }
  return "?";
}

unsigned TorsionGroupQ::order() const {
  switch (structure) {
    case TorsionStructure::Trivial:
      return 1;
    case TorsionStructure::Z2:
      return 2;
    case TorsionStructure::Z3:
      return 3;
    case TorsionStructure::Z6:
      return 6;
  }
  return 1;
}

std::vector<PointQ> TorsionGroupQ::elements(const CurveQ& e) const {
  std::vector<PointQ> out{PointQ::infinity()};
  if (generators.empty()) return out;
  PointQ p = generators.front();
  for (unsigned k = 1; k < order(); ++k) {
    out.push_back(p);
    p = e.add(p, generators.front());
  }
  return out;
}

bool TorsionGroupQ::contains(const CurveQ& e, const PointQ& p) const {
  const auto all = elements(e);
  return std::find(all.begin(), all.end(), p) != all.end();
}

TorsionGroupQ torsion_j0_Q(const Rational& d) {
  if (d == 0) throw std::invalid_argument("torsion_j0_Q: d = 0");
  // D = d·den⁶ is an integer; (X, Y) on y² = x³ + D is (X/den², Y/den³) on the original curve.
  const Integer den = d.get_den();
  const Integer D = d.get_num() * pow(den, 5);
  const Rational s2 = make_rational(pow(den, 2));
  const Rational s3 = make_rational(pow(den, 3));
  auto point = [&](const Integer& x, const Integer& y) {
    return PointQ(make_rational(x) / s2, make_rational(y) / s3);
  };

  TorsionGroupQ g;
  if (auto u = exact_root(D, 6)) {
    g.structure = TorsionStructure::Z6;
    g.generators.push_back(point(2 * *u * *u, 3 * *u * *u * *u));
  } else if (auto c = exact_root(D, 3)) {
    g.structure = TorsionStructure::Z2;
    g.generators.push_back(point(-*c, 0));
  } else if (auto s = exact_root(D, 2)) {
    g.structure = TorsionStructure::Z3;
    g.generators.push_back(point(0, *s));
  } else if (mpz_divisible_ui_p(D.get_mpz_t(), 432) != 0) {
    if (auto m = exact_root(Integer(-D / 432), 6)) {
      g.structure = TorsionStructure::Z3;
      g.generators.push_back(point(12 * *m * *m, 36 * *m * *m * *m));
    }
  }
  return g;
}

namespace {

// f_n with ψ_n = f_n (n odd) and ψ_n = y·f_n (n even).
std::vector<RatPolynomial> reduced_division_polys(const Rational& d, unsigned n) {
  const RatPolynomial x = RatPolynomial::x();
  const RatPolynomial cubic = x.pow(3) + RatPolynomial::constant(d);
  const RatPolynomial cubic2 = cubic * cubic;
  std::vector<RatPolynomial> f(std::max(5U, n + 1));
  f[0] = RatPolynomial();
  f[1] = RatPolynomial::constant(1);
  f[2] = RatPolynomial::constant(2);
  f[3] = RatPolynomial({Rational(0), Rational(12 * d), Rational(0), Rational(0), Rational(3)});
  f[4] = RatPolynomial({Rational(-32 * d * d), Rational(0), Rational(0), Rational(80 * d), Rational(0), Rational(0),
                        Rational(4)});
  for (unsigned k = 5; k <= n; ++k) {
    const unsigned m = k / 2;
    if (k % 2 == 1) {
      RatPolynomial lhs = f[m + 2] * f[m].pow(3);
      RatPolynomial rhs = f[m - 1] * f[m + 1].pow(3);
      if (m % 2 == 0) {
        lhs *= cubic2;
      } else {
        rhs *= cubic2;
      }
      f[k] = lhs - rhs;
    } else {
      f[k] = f[m] * (f[m + 2] * f[m - 1].pow(2) - f[m - 2] * f[m + 1].pow(2)) * Rational(1, 2);
    }
  }
  return f;
}

}  // namespace

IntPolynomial division_poly(const CurveQ& e, unsigned n) {
  if (n == 0) throw std::invalid_argument("division_poly: n must be positive");
  const auto f = reduced_division_polys(e.d(), n);
  RatPolynomial psi = f[n];
  if (n % 2 == 0) psi *= RatPolynomial::x().pow(3) + RatPolynomial::constant(e.d());
  Integer l = 1;
  for (const Rational& c : psi.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> v;
  for (const Rational& c : psi.coefficients()) v.emplace_back(c.get_num() * (l / c.get_den()));
  return IntPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> multiplication_x_map(const CurveQ& e, unsigned n) {
  if (n == 0) throw std::invalid_argument("multiplication_x_map: n must be positive");
  const RatPolynomial x = RatPolynomial::x();
  if (n == 1) return {x, RatPolynomial::constant(1)};
  const auto f = reduced_division_polys(e.d(), n + 1);
  const RatPolynomial cubic = x.pow(3) + RatPolynomial::constant(e.d());
  const RatPolynomial fn2 = f[n] * f[n];
  if (n % 2 == 1) return {x * fn2 - cubic * f[n - 1] * f[n + 1], fn2};
  return {x * cubic * fn2 - f[n - 1] * f[n + 1], cubic * fn2};
}

std::vector<PointQ> divide_point(const CurveQ& e, unsigned n, const PointQ& q) {
  if (n == 0) throw std::invalid_argument("divide_point: n must be positive");
  if (!e.contains(q)) throw std::invalid_argument("divide_point: point not on curve");
  if (n == 1) return {q};
  const Integer N(n);
  std::vector<PointQ> out;
  if (q.is_infinity()) {
    for (const PointQ& p : torsion_j0_Q(e.d()).elements(e)) {
      if (e.mul(N, p).is_infinity()) out.push_back(p);
    }
  } else {
    const auto [num, den] = multiplication_x_map(e, n);
    const RatPolynomial eq = num - den * q.x();
    for (const Rational& x0 : rational_roots(to_primitive_integer(eq))) {
      const Rational rhs = x0 * x0 * x0 + e.d();
      const auto y0 = exact_root(rhs, 2);
      if (!y0) continue;
      for (const Rational& y : {*y0, Rational(-*y0)}) {
        const PointQ p(x0, y);
        if (e.mul(N, p) == q && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PointQ& l, const PointQ& r) {
    if (l.is_infinity() || r.is_infinity()) return l.is_infinity() && !r.is_infinity();
    return l.x() != r.x() ? l.x() < r.x() : l.y() < r.y();
  });
  return out;
}

}  // namespace ceresa
