#include "feynkit/symmetric_form.hpp"

#include <stdexcept>
#include <utility>

namespace feynkit {

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  return leading_minor(rows_);
}

Rat RatMatrix::leading_minor(std::size_t k) const {
  if (k > rows_ || k > cols_) throw std::invalid_argument("leading_minor: order too large");
  RatMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);

  Rat det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m(pivot, col) == 0) ++pivot;
    if (pivot == k) return Rat(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t row = col + 1; row < k; ++row) {
      if (m(row, col) == 0) continue;
      Rat f = m(row, col) / m(col, col);
      for (std::size_t j = col; j < k; ++j) m(row, j) -= f * m(col, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = rows_;
  RatMatrix m(*this);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    Rat p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m(row, col) == 0) continue;
      Rat f = m(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(row, j) -= f * m(col, j);
        inv(row, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t RatMatrix::rank() const {
  RatMatrix m(*this);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(rank, j));
    for (std::size_t row = rank + 1; row < rows_; ++row) {
      if (m(row, col) == 0) continue;
      Rat f = m(row, col) / m(rank, col);
      for (std::size_t j = col; j < cols_; ++j) m(row, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

SymmetricForm::SymmetricForm(RatMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw std::invalid_argument("SymmetricForm: matrix must be square and non-empty");
  const std::size_t d = entries_.rows();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (entries_(i, j) != entries_(j, i))
        throw std::invalid_argument("SymmetricForm: matrix not symmetric");
  for (std::size_t k = 1; k <= d; ++k)
    if (entries_.leading_minor(k) <= 0)
      throw std::domain_error("SymmetricForm: matrix not positive-definite");
  det_ = entries_.leading_minor(d);
  inverse_ = entries_.inverse();
}

const Rat& SymmetricForm::propagator(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw std::out_of_range("propagator: index out of range");
  return inverse_(i, j);
}

}  // namespace feynkit
