#pragma once

#include <cstddef>
#include <vector>

#include "ceresa/arith/integer.hpp"
#include "ceresa/arith/polynomial.hpp"

namespace ceresa {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  /// Companion matrix of a monic polynomial of degree n ≥ 1: ones on the subdiagonal,
  /// last column −c_0, …, −c_{n−1}. Its characteristic polynomial is f.
  static RationalMatrix companion(const RatPolynomial& monic);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& k) const;
  bool operator==(const RationalMatrix& o) const;

  Rational trace() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// det(T·I − M), monic of degree n, by Faddeev–LeVerrier. Exact.
RatPolynomial char_poly(const RationalMatrix& m);

/// Determinant by fraction-keeping Gaussian elimination with pivot search.
Rational determinant(const RationalMatrix& m);

/// Λ^k M on the basis e_S, S ⊂ {0..n−1} of size k in lexicographic order;
/// entry (S, T) is the k×k minor of M with rows S and columns T.
RationalMatrix exterior_power(const RationalMatrix& m, std::size_t k);

}  // namespace ceresa
