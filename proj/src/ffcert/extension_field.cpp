#include "ceresa/ffcert/extension_field.hpp"

#include <stdexcept>

namespace ceresa {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

bool has_root(const ExtensionField::Element& m, unsigned k, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 1;
    for (unsigned i = k; i-- > 0;) acc = (mul_mod(acc, x, p) + m[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

ExtensionField::ExtensionField(std::uint64_t p, unsigned degree) : p_(p), k_(degree), q_(1) {
  if (degree < 1 || degree > 3) throw std::invalid_argument("ExtensionField: degree must be 1, 2 or 3");
  if (p < 5 || p >= (1ULL << 21) || !is_prime(p)) {
    throw std::invalid_argument("ExtensionField: p must be a prime in [5, 2^21)");
  }
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  if (k_ > 1) {
    // Degree ≤ 3: irreducible ⟺ no root in F_p. Enumerate (m_{k−1}, …, m_0) in lexicographic order.
    const std::uint64_t total = q_;
    bool found = false;
    for (std::uint64_t idx = 0; idx < total && !found; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned i = 0; i < k_; ++i) {
        m_[i] = rest % p_;
        rest /= p_;
      }
      found = m_[0] != 0 && !has_root(m_, k_, p_);
    }
    if (!found) throw std::logic_error("ExtensionField: no irreducible modulus");
  }
  if ((p_ - 1) % 3 == 0) {
    is_cube_.assign(p_, 0);
    for (std::uint64_t y = 1; y < p_; ++y) is_cube_[mul_mod(mul_mod(y, y, p_), y, p_)] = 1;
  }
}

ZpPoly ExtensionField::modulus() const {
  std::vector<std::uint64_t> c(m_.begin(), m_.begin() + k_);
  c.push_back(1);
  return ZpPoly(std::move(c), p_);
}

ExtensionField::Element ExtensionField::element(std::uint64_t index) const {
  Element e{};
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = index % p_;
    index /= p_;
  }
  return e;
}

ExtensionField::Element ExtensionField::add(const Element& x, const Element& y) const {
  return {(x[0] + y[0]) % p_, (x[1] + y[1]) % p_, (x[2] + y[2]) % p_};
}

ExtensionField::Element ExtensionField::sub(const Element& x, const Element& y) const {
  return {(x[0] + p_ - y[0]) % p_, (x[1] + p_ - y[1]) % p_, (x[2] + p_ - y[2]) % p_};
}

ExtensionField::Element ExtensionField::mul(const Element& x, const Element& y) const {
  // p < 2^21, so every partial sum below stays under 2^48 and one reduction per slot suffices.
  std::uint64_t c[5] = {0, 0, 0, 0, 0};
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) c[i + j] += x[i] * y[j];
  }
  // x^k ≡ −(m_{k−1}x^{k−1} + … + m_0)
  for (unsigned d = 2 * k_ - 2; d >= k_ && d < 5; --d) {
    const std::uint64_t top = c[d] % p_;
    if (top == 0) continue;
    for (unsigned i = 0; i < k_; ++i) c[d - k_ + i] += top * (p_ - m_[i]);
  }
  return {c[0] % p_, k_ > 1 ? c[1] % p_ : 0, k_ > 2 ? c[2] % p_ : 0};
}

ExtensionField::Element ExtensionField::pow(Element x, std::uint64_t e) const {
  Element r = constant(1);
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

ExtensionField::Element ExtensionField::inverse(const Element& x) const {
  if (is_zero(x)) throw std::domain_error("ExtensionField: inverse of zero");
  return pow(x, q_ - 2);
}

std::uint64_t ExtensionField::norm(const Element& x) const {
  if (k_ == 1) return x[0];
  if (k_ == 2) {
    // (u + vθ)(u + vθ') with θ + θ' = −m₁, θθ' = m₀.
    const std::uint64_t u = x[0], v = x[1];
    const std::uint64_t uu = mul_mod(u, u, p_);
    const std::uint64_t uv = mul_mod(mul_mod(u, v, p_), m_[1], p_);
    const std::uint64_t vv = mul_mod(mul_mod(v, v, p_), m_[0], p_);
    return (uu + p_ - uv + vv) % p_;
  }
  // Determinant of multiplication by x on the basis 1, θ, θ².
  const Element c0 = x;
  const Element c1 = mul(x, {0, 1, 0});
  const Element c2 = mul(x, {0, 0, 1});
  auto term = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) { return mul_mod(mul_mod(a, b, p_), c, p_); };
  const std::uint64_t plus = (term(c0[0], c1[1], c2[2]) + term(c1[0], c2[1], c0[2]) + term(c2[0], c0[1], c1[2])) % p_;
  const std::uint64_t minus = (term(c2[0], c1[1], c0[2]) + term(c0[0], c2[1], c1[2]) + term(c1[0], c0[1], c2[2])) % p_;
  return (plus + p_ - minus) % p_;
}

unsigned ExtensionField::cube_root_count(const Element& z) const {
  if (is_zero(z)) return 1;
  if ((q_ - 1) % 3 != 0) return 1;
  // z^{(q−1)/3} = N(z)^{(p−1)/3} when 3 | p − 1.
  if (!is_cube_.empty()) return is_cube_[norm(z)] ? 3 : 0;
  const Element w = pow(z, (q_ - 1) / 3);
  return w == constant(1) ? 3 : 0;
}

}  // namespace ceresa
