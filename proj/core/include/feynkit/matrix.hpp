#pragma once

#include "feynkit/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace feynkit {

/// Dense matrix of exact rationals. Sized for desk-scale linear algebra
/// (propagators, relation matrices), not for anything large.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& o) const = default;

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += (*this)(i, k) * o(k, j);
      }
    return p;
  }

  /// Determinant by exact Gaussian elimination (square only).
  Rat determinant() const;

  /// Leading principal minor of order k (determinant of the top-left k x k block).
  Rat leading_minor(std::size_t k) const;

  /// Exact inverse via Gauss-Jordan. Throws std::domain_error if singular.
  RatMatrix inverse() const;

  /// Rank by exact row reduction.
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace feynkit
