#pragma once

#include "feynkit/mc.hpp"
#include "feynkit/symmetric_form.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace feynkit {

/// A perfect pairing of {0, .., m-1}: disjoint pairs (a, b) with a < b,
/// listed with first elements increasing.
using Pairing = std::vector<std::pair<std::size_t, std::size_t>>;

/// All pairings of m points in canonical order: the smallest unused index
/// is paired with every larger unused index, recursively. (2n)!/(2^n n!)
/// results for m = 2n; empty list for odd m.
std::vector<Pairing> enumerate_pairings(std::size_t m);

/// Moment request: coordinate indices i_1..i_m, zero-based, repeats allowed.
struct MomentRequest {
  std::vector<std::size_t> indices;
};

/// m-point function <x^{i_1},..,x^{i_m}> by explicit pairing enumeration:
/// sum over pairings of products of propagator entries. Zero for odd m.
Rat moment(const SymmetricForm& a, const MomentRequest& req);

/// Same pairing sum with a cache of sub-multiset results shared across
/// calls; use when evaluating many moments against one form.
class MomentEvaluator {
 public:
  explicit MomentEvaluator(const SymmetricForm& a) : a_(&a) {}
  Rat moment(const MomentRequest& req);

 private:
  Rat rec(std::vector<std::size_t> sorted);

  const SymmetricForm* a_;
  std::map<std::vector<std::size_t>, Rat> cache_;
};

/// Same moment through the derivative recursion
///   P_{i_1..i_m}(b) = (d_{i_1} + sum_i A^{i_1 i} b_i) P_{i_2..i_m}(b),
/// evaluated at b = 0. Agrees with moment() exactly.
Rat moment_via_recursion(const SymmetricForm& a, const MomentRequest& req);

/// Monte Carlo estimate of the normalized moment integral: x is sampled
/// from the Gaussian with covariance A^{-1} via a floating-point Cholesky
/// factorization, and the monomial is averaged.
IntegralEstimate moment_oracle_numeric(const SymmetricForm& a, const MomentRequest& req,
                                       const McConfig& cfg);

}  // namespace feynkit
