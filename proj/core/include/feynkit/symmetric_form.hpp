#pragma once

#include "feynkit/matrix.hpp"
#include "feynkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace feynkit {

/// Positive-definite symmetric bilinear form A together with its exact
/// inverse (the propagator). Definiteness is checked eagerly at
/// construction through the leading principal minors; every downstream
/// formula assumes it.
class SymmetricForm {
 public:
  /// Throws std::invalid_argument if the matrix is not square/symmetric,
  /// std::domain_error if it is not positive-definite.
  explicit SymmetricForm(RatMatrix entries);

  std::size_t dim() const { return entries_.rows(); }
  const RatMatrix& entries() const { return entries_; }
  const RatMatrix& inverse() const { return inverse_; }
  const Rat& determinant() const { return det_; }

  /// Propagator entry A^{ij} = (A^{-1})_{ij}, zero-based indices.
  const Rat& propagator(std::size_t i, std::size_t j) const;

  static SymmetricForm identity(std::size_t d) { return SymmetricForm(RatMatrix::identity(d)); }

 private:
  RatMatrix entries_;
  RatMatrix inverse_;
  Rat det_;
};

/// Linear source term b added to the exponent (the shifted Gaussian).
class LinearSource {
 public:
  explicit LinearSource(std::vector<Rat> entries) : entries_(std::move(entries)) {}
  static LinearSource zero(std::size_t d) { return LinearSource(std::vector<Rat>(d, Rat(0))); }

  std::size_t dim() const { return entries_.size(); }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rat>& entries() const { return entries_; }

 private:
  std::vector<Rat> entries_;
};

}  // namespace feynkit
