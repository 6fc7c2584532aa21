#include "ceresa/arith/poly_mod.hpp"

#include <algorithm>
#include <stdexcept>

namespace ceresa {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

}  // namespace

ZpPoly::ZpPoly(std::vector<std::uint64_t> coefficients, std::uint64_t p) : c_(std::move(coefficients)), p_(p) {
  for (auto& c : c_) c %= p_;
  trim();
}

ZpPoly ZpPoly::reduce(const IntPolynomial& f, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  v.reserve(f.coefficients().size());
  for (const Integer& c : f.coefficients()) v.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  return ZpPoly(std::move(v), p);
}

ZpPoly ZpPoly::monomial(std::uint64_t c, std::size_t k, std::uint64_t p) {
  std::vector<std::uint64_t> v(k + 1, 0);
  v[k] = c;
  return ZpPoly(std::move(v), p);
}

void ZpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZpPoly ZpPoly::operator+(const ZpPoly& o) const {
  std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (coeff(i) + o.coeff(i)) % p_;
  return ZpPoly(std::move(v), p_);
}

ZpPoly ZpPoly::operator-(const ZpPoly& o) const {
  std::vector<std::uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
  return ZpPoly(std::move(v), p_);
}

ZpPoly ZpPoly::operator*(const ZpPoly& o) const {
  if (is_zero() || o.is_zero()) return ZpPoly(p_);
  std::vector<std::uint64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % p_;
  }
  return ZpPoly(std::move(v), p_);
}

ZpPoly ZpPoly::scaled(std::uint64_t k) const {
  std::vector<std::uint64_t> v(c_);
  for (auto& c : v) c = c * (k % p_) % p_;
  return ZpPoly(std::move(v), p_);
}

ZpPoly ZpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

ZpPoly ZpPoly::derivative() const {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * (i % p_) % p_);
  return ZpPoly(std::move(v), p_);
}

std::uint64_t ZpPoly::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
  return acc;
}

IntPolynomial ZpPoly::lift() const {
  std::vector<Integer> v;
  v.reserve(c_.size());
  for (auto c : c_) v.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(v));
}

std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& f, const ZpPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero mod p");
  const std::uint64_t p = f.modulus();
  if (f.degree() < g.degree()) return {ZpPoly(p), f};
  std::vector<std::uint64_t> r = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  std::vector<std::uint64_t> q(r.size() - dg, 0);
  const std::uint64_t inv = inv_mod(g.leading(), p);
  for (std::size_t k = r.size(); k-- > dg;) {
    const std::uint64_t coef = r[k] * inv % p;
    q[k - dg] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      r[k - dg + j] = (r[k - dg + j] + p - coef * gc[j] % p) % p;
    }
  }
  r.resize(dg);
  return {ZpPoly(std::move(q), p), ZpPoly(std::move(r), p)};
}

ZpPoly operator%(const ZpPoly& f, const ZpPoly& g) { return divmod(f, g).second; }

ZpPoly gcd(ZpPoly f, ZpPoly g) {
  while (!g.is_zero()) {
    ZpPoly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

ZpPoly powmod(const ZpPoly& base, const Integer& e, const ZpPoly& m) {
  const std::uint64_t p = m.modulus();
  ZpPoly result = ZpPoly::monomial(1, 0, p) % m;
  ZpPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = (result * b) % m;
  }
  return result;
}

std::vector<std::pair<int, ZpPoly>> distinct_degree_factorization(const ZpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<int, ZpPoly>> out;
  ZpPoly rest = f.monic();
  const ZpPoly x = ZpPoly::monomial(1, 1, p);
  ZpPoly h = x;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), rest);
    ZpPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rest = divmod(rest, g).first;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
  return out;
}

std::vector<ZpPoly> equal_degree_factorization(const ZpPoly& f, int d, std::mt19937_64& rng) {
  const std::uint64_t p = f.modulus();
  if (f.degree() == d) return {f.monic()};
  if (p == 2) throw std::invalid_argument("equal_degree_factorization needs odd p");
  // (p^d - 1)/2
  Integer e = pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> r(static_cast<std::size_t>(f.degree()));
    for (auto& c : r) c = coin(rng);
    ZpPoly a(std::move(r), p);
    if (a.degree() < 1) continue;
    ZpPoly g = gcd(f, powmod(a, e, f) - ZpPoly::monomial(1, 0, p));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      std::vector<ZpPoly> left = equal_degree_factorization(g, d, rng);
      std::vector<ZpPoly> right = equal_degree_factorization(divmod(f, g).first.monic(), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

namespace {

bool poly_less(const ZpPoly& l, const ZpPoly& r) {
  if (l.degree() != r.degree()) return l.degree() < r.degree();
  const auto& a = l.coefficients();
  const auto& b = r.coefficients();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<ZpPoly> factor_squarefree(const ZpPoly& f) {
  std::mt19937_64 rng(0x5eedULL + f.modulus());
  std::vector<ZpPoly> out;
  if (f.modulus() == 2) {
    throw std::invalid_argument("factor_squarefree needs odd p");
  }
  for (const auto& [d, g] : distinct_degree_factorization(f)) {
    auto parts = equal_degree_factorization(g, d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<std::uint64_t> roots(const ZpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> out;
  if (f.degree() <= 0) return out;
  if (p < 64) {
    for (std::uint64_t x = 0; x < p; ++x) {
      if (f.evaluate(x) == 0) out.push_back(x);
    }
    return out;
  }
  const ZpPoly x = ZpPoly::monomial(1, 1, p);
  ZpPoly split = gcd(f, powmod(x, Integer(static_cast<unsigned long>(p)), f) - x);
  if (split.degree() <= 0) return out;
  std::mt19937_64 rng(0x600dULL + p);
  for (const ZpPoly& lin : equal_degree_factorization(split, 1, rng)) {
    out.push_back((p - lin.coeff(0)) % p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const ZpPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  if (gcd(f, f.derivative()).degree() > 0) return false;
  const auto ddf = distinct_degree_factorization(f);
  return ddf.size() == 1 && ddf.front().first == f.degree();
}

}  // namespace ceresa
