#pragma once

#include "feynkit/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace feynkit {

/// Dense rank-r tensor over R^d with exact rational entries, flat
/// row-major storage of size d^r. Rank 0 is a scalar.
class Tensor {
 public:
  Tensor() : dim_(1), rank_(0), data_(1, Rat(0)) {}
  Tensor(std::size_t dim, std::size_t rank);

  static Tensor scalar(Rat value) {
    Tensor t;
    t.data_[0] = std::move(value);
    return t;
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return data_.size(); }

  Rat& at(std::span<const std::size_t> idx) { return data_[flat(idx)]; }
  const Rat& at(std::span<const std::size_t> idx) const { return data_[flat(idx)]; }
  Rat& flat_at(std::size_t i) { return data_[i]; }
  const Rat& flat_at(std::size_t i) const { return data_[i]; }

  bool operator==(const Tensor& o) const = default;

  /// Average over all index permutations.
  Tensor symmetrized() const;
  bool is_symmetric() const;

  Tensor operator*(const Rat& s) const;
  Tensor operator+(const Tensor& o) const;

  /// Contracts slot `slot_a` of this tensor with slot `slot_b` of `other`
  /// through the rank-2 kernel g: sum_{p,q} g(p,q) T[..p..] S[..q..].
  /// Surviving slots keep their order, this tensor's slots first.
  Tensor contract_with(std::size_t slot_a, const Tensor& other, std::size_t slot_b,
                       const Tensor& kernel) const;

  /// Contracts two slots of the same tensor through the kernel.
  Tensor self_contract(std::size_t slot_a, std::size_t slot_b, const Tensor& kernel) const;

  std::size_t flat(std::span<const std::size_t> idx) const;
  void unflat(std::size_t flat_index, std::vector<std::size_t>& idx_out) const;

 private:
  std::size_t dim_, rank_;
  std::vector<Rat> data_;
};

}  // namespace feynkit
