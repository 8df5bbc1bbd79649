#include "feynkit/gauss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace feynkit {

double gaussian_partition(const SymmetricForm& a) {
  const double d = static_cast<double>(a.dim());
  return std::sqrt(std::pow(2.0 * std::numbers::pi, d) / to_double(a.determinant()));
}

Rat shifted_exponent(const SymmetricForm& a, const LinearSource& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("shifted_exponent: dimension mismatch");
  Rat q(0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) q += b[i] * a.inverse()(i, j) * b[j];
  }
  return q / 2;
}

double shifted_partition(const SymmetricForm& a, const LinearSource& b) {
  return gaussian_partition(a) * std::exp(to_double(shifted_exponent(a, b)));
}

Rat propagator_entry(const SymmetricForm& a, std::size_t i, std::size_t j) {
  return a.propagator(i, j);
}

}  // namespace feynkit
