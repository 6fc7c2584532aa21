#include "ceresa/arith/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ceresa {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::companion(const RatPolynomial& monic) {
  const int n = monic.degree();
  if (n < 1 || monic.leading() != 1) throw std::invalid_argument("companion needs a monic polynomial of degree >= 1");
  const auto size = static_cast<std::size_t>(n);
  RationalMatrix m(size, size);
  for (std::size_t i = 1; i < size; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < size; ++i) m(i, size - 1) = -monic.coeff(i);
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& k) const {
  RationalMatrix r(*this);
  for (auto& x : r.data_) x *= k;
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RatPolynomial char_poly(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly needs a square matrix");
  const std::size_t n = m.rows();
  // M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n, n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    const RationalMatrix am = m * mk;
    c[n - k] = -am.trace() / Rational(static_cast<long>(k));
  }
  return RatPolynomial(std::move(c));
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a(m);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational factor = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

RationalMatrix exterior_power(const RationalMatrix& m, std::size_t k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exterior_power needs a square matrix");
  if (k == 0 || k > m.rows()) throw std::invalid_argument("exterior_power degree out of range");
  std::vector<std::vector<std::size_t>> basis;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, basis);
  RationalMatrix out(basis.size(), basis.size());
  RationalMatrix minor(k, k);
  for (std::size_t s = 0; s < basis.size(); ++s) {
    for (std::size_t t = 0; t < basis.size(); ++t) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(basis[s][i], basis[t][j]);
      }
      out(s, t) = determinant(minor);
    }
  }
  return out;
}

}  // namespace ceresa
