#include "feynkit/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace feynkit {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Tensor::Tensor(std::size_t dim, std::size_t rank)
    : dim_(dim), rank_(rank), data_(ipow(dim, rank), Rat(0)) {
  if (dim == 0) throw std::invalid_argument("Tensor: dimension must be positive");
}

std::size_t Tensor::flat(std::span<const std::size_t> idx) const {
  if (idx.size() != rank_) throw std::invalid_argument("Tensor: wrong index rank");
  std::size_t f = 0;
  for (std::size_t k = 0; k < rank_; ++k) {
    if (idx[k] >= dim_) throw std::out_of_range("Tensor: index out of range");
    f = f * dim_ + idx[k];
  }
  return f;
}

void Tensor::unflat(std::size_t flat_index, std::vector<std::size_t>& idx_out) const {
  idx_out.assign(rank_, 0);
  for (std::size_t k = rank_; k-- > 0;) {
    idx_out[k] = flat_index % dim_;
    flat_index /= dim_;
  }
}

Tensor Tensor::symmetrized() const {
  if (rank_ < 2) return *this;
  std::vector<std::size_t> perm(rank_);
  for (std::size_t i = 0; i < rank_; ++i) perm[i] = i;
  Tensor out(dim_, rank_);
  std::vector<std::size_t> idx, pidx(rank_);
  std::size_t nperm = 0;
  do {
    ++nperm;
    for (std::size_t f = 0; f < data_.size(); ++f) {
      if (data_[f] == 0) continue;
      unflat(f, idx);
      for (std::size_t k = 0; k < rank_; ++k) pidx[k] = idx[perm[k]];
      out.data_[out.flat(pidx)] += data_[f];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Rat inv(1, nperm);
  for (auto& v : out.data_) v *= inv;
  return out;
}

bool Tensor::is_symmetric() const { return *this == symmetrized(); }

Tensor Tensor::operator*(const Rat& s) const {
  Tensor out(*this);
  for (auto& v : out.data_) v *= s;
  return out;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (dim_ != o.dim_ || rank_ != o.rank_) throw std::invalid_argument("Tensor: shape mismatch");
  Tensor out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Tensor Tensor::contract_with(std::size_t slot_a, const Tensor& other, std::size_t slot_b,
                             const Tensor& kernel) const {
  if (kernel.rank() != 2 || kernel.dim() != dim_ || other.dim_ != dim_)
    throw std::invalid_argument("contract_with: bad kernel or dimension");
  if (slot_a >= rank_ || slot_b >= other.rank_)
    throw std::out_of_range("contract_with: slot out of range");

  Tensor out(dim_, rank_ - 1 + other.rank_ - 1);
  std::vector<std::size_t> ia, ib, io(out.rank());
  for (std::size_t fa = 0; fa < data_.size(); ++fa) {
    if (data_[fa] == 0) continue;
    unflat(fa, ia);
    for (std::size_t fb = 0; fb < other.data_.size(); ++fb) {
      if (other.data_[fb] == 0) continue;
      other.unflat(fb, ib);
      const Rat& g = kernel.data_[ia[slot_a] * dim_ + ib[slot_b]];
      if (g == 0) continue;
      std::size_t w = 0;
      for (std::size_t k = 0; k < rank_; ++k)
        if (k != slot_a) io[w++] = ia[k];
      for (std::size_t k = 0; k < other.rank_; ++k)
        if (k != slot_b) io[w++] = ib[k];
      out.data_[out.flat(io)] += data_[fa] * other.data_[fb] * g;
    }
  }
  return out;
}

Tensor Tensor::self_contract(std::size_t slot_a, std::size_t slot_b, const Tensor& kernel) const {
  if (kernel.rank() != 2 || kernel.dim() != dim_)
    throw std::invalid_argument("self_contract: bad kernel");
  if (slot_a == slot_b || slot_a >= rank_ || slot_b >= rank_)
    throw std::out_of_range("self_contract: bad slots");

  Tensor out(dim_, rank_ - 2);
  std::vector<std::size_t> ia, io(out.rank());
  for (std::size_t fa = 0; fa < data_.size(); ++fa) {
    if (data_[fa] == 0) continue;
    unflat(fa, ia);
    const Rat& g = kernel.data_[ia[slot_a] * dim_ + ia[slot_b]];
    if (g == 0) continue;
    std::size_t w = 0;
    for (std::size_t k = 0; k < rank_; ++k)
      if (k != slot_a && k != slot_b) io[w++] = ia[k];
    out.data_[out.flat(io)] += data_[fa] * g;
  }
  return out;
}

}  // namespace feynkit
