#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ceresa/arith/integer.hpp"

namespace ceresa {

/// Dense univariate polynomial, coefficients lowest degree first.
/// The coefficient vector is kept trimmed so the leading coefficient is
/// nonzero; the zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U evaluate(const U& point) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(T(c_[i] * static_cast<unsigned long>(i)));
    return Polynomial(std::move(v));
  }

  /// f(g(x)).
  Polynomial compose(const Polynomial& g) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> v(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
  }
  Polynomial operator-() const {
    std::vector<T> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Polynomial(std::move(v));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<T> v(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial operator*(const T& k) const {
    std::vector<T> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * k;
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(T(1));
    Polynomial base = *this;
    while (e != 0) {
      if ((e & 1U) != 0) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Quotient and remainder over Q. Throws std::domain_error on division by zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g);

/// f / g over Z; throws std::domain_error unless g divides f with integer quotient.
IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& g);

/// Monic gcd over Q (zero if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& f, const RatPolynomial& g);

/// gcd of the coefficients, sign chosen so that the primitive part has positive leading coefficient.
Integer content(const IntPolynomial& f);
IntPolynomial primitive_part(const IntPolynomial& f);

RatPolynomial to_rational(const IntPolynomial& f);
/// Scales a rational polynomial to the primitive integer polynomial with positive leading coefficient.
IntPolynomial to_primitive_integer(const RatPolynomial& f);

/// Primitive squarefree part of f (same roots, each simple).
IntPolynomial squarefree_part(const IntPolynomial& f);

/// Distinct rational roots in increasing order. f must be nonzero.
std::vector<Rational> rational_roots(const IntPolynomial& f);

/// Candidate search over ±p/q with p | f(0-stripped) constant and q | lead.
std::vector<Rational> rational_roots_by_divisors(const IntPolynomial& f);

/// Hensel-lifts simple roots modulo a small prime and reconstructs rationals.
std::vector<Rational> rational_roots_by_lifting(const IntPolynomial& f);

/// Pretty form such as "3*x^4 + 12*x" (highest degree first).
std::string to_string(const IntPolynomial& f, const std::string& var = "x");
std::string to_string(const RatPolynomial& f, const std::string& var = "x");

}  // namespace ceresa
