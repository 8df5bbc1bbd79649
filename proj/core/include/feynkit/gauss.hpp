#pragma once

#include "feynkit/symmetric_form.hpp"

#include <cstddef>

namespace feynkit {

/// Z_0 = (det(A/2pi))^{-1/2} = (2pi)^{d/2} (det A)^{-1/2}.
/// The determinant is exact; floating point enters only at the final root.
double gaussian_partition(const SymmetricForm& a);

/// The exact exponent (1/2) <b, A^{-1} b> of the shifted Gaussian.
Rat shifted_exponent(const SymmetricForm& a, const LinearSource& b);

/// Z_b = Z_0 exp((1/2) <b, A^{-1} b>). Throws on dimension mismatch.
double shifted_partition(const SymmetricForm& a, const LinearSource& b);

/// Two-point function <x^i, x^j> = (A^{-1})_{ij}, zero-based indices.
/// Throws std::out_of_range for bad indices.
Rat propagator_entry(const SymmetricForm& a, std::size_t i, std::size_t j);

}  // namespace feynkit
