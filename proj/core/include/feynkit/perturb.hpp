#pragma once

#include "feynkit/graph.hpp"
#include "feynkit/series.hpp"
#include "feynkit/symmetric_form.hpp"
#include "feynkit/tensor.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace feynkit {

/// Interaction potential in the symmetrized convention
///   U(x) = sum_k (1/k!) <u_k, x (x) .. (x) x>,   k >= 3,
/// with each u_k a symmetric tensor. Under this convention the graph sum
/// with 1/|Aut| weights matches the derivative expansion exactly.
class Potential {
 public:
  Potential(std::size_t dim, std::map<std::size_t, Tensor> terms);

  /// Builds the potential from raw monomial coefficients: the map sends a
  /// monomial exponent vector (x^1)^{e_1}..(x^d)^{e_d} to its coefficient
  /// in U(x). Degrees below 3 are rejected.
  static Potential from_monomials(std::size_t dim,
                                  const std::map<std::vector<unsigned>, Rat>& monomials);

  std::size_t dim() const { return dim_; }
  const std::map<std::size_t, Tensor>& terms() const { return terms_; }
  std::vector<std::size_t> valences() const;

  /// U as a plain polynomial: exponent vector -> coefficient.
  std::map<std::vector<unsigned>, Rat> as_polynomial() const;

 private:
  std::size_t dim_;
  std::map<std::size_t, Tensor> terms_;
};

/// Z_U / Z_0 expanded to the given order by the direct Wick route:
/// coefficient of hbar^n is (1/n!) <U(x)^n> under the Gaussian.
PowerSeries partition_series_direct(const SymmetricForm& a, const Potential& u, std::size_t order);

/// The same series as the graph sum over vacuum classes,
/// sum_Gamma hbar^{|Gamma|} W_Gamma / |Aut Gamma|.
PowerSeries partition_series_graphs(const SymmetricForm& a, const Potential& u, std::size_t order);

/// <x^{i_1},..,x^{i_m}>_U as the sum over non-vacuum graph classes with m
/// ordered legs. Zero-based leg indices.
PowerSeries correlator_series(const SymmetricForm& a, const Potential& u,
                              const std::vector<std::size_t>& leg_indices, std::size_t order);

/// The same correlator through the quotient of direct Wick series:
/// (sum_n hbar^n/n! <U^n x^{i_1}..x^{i_m}>) / (Z_U/Z_0).
PowerSeries correlator_series_direct(const SymmetricForm& a, const Potential& u,
                                     const std::vector<std::size_t>& leg_indices,
                                     std::size_t order);

/// Free energy log(Z_U/Z_0) as a truncated series (log of the graph sum).
PowerSeries free_energy_series(const SymmetricForm& a, const Potential& u, std::size_t order);

/// Sum over connected vacuum classes only; equals free_energy_series.
PowerSeries free_energy_series_connected(const SymmetricForm& a, const Potential& u,
                                         std::size_t order);

/// One contributing graph class of a series coefficient (CLI breakdown).
struct GraphTerm {
  std::size_t hbar_order;
  FeynmanGraph graph;
  BigInt multiplicity;
  BigInt aut;
  Rat weight;        // W_Gamma with basis-covector legs
  Rat contribution;  // weight / aut
  bool vacuum;
  bool connected;
};

/// All graph classes contributing to orders 0..order for the given legs
/// (legs may be empty for the partition function).
std::vector<GraphTerm> graph_breakdown(const SymmetricForm& a, const Potential& u,
                                       const std::vector<std::size_t>& leg_indices,
                                       std::size_t order);

/// Weight system induced by (A, U): propagator a = A^{-1}, vertex tensors u_k.
WeightSystem weight_system_of(const SymmetricForm& a, const Potential& u);

}  // namespace feynkit
