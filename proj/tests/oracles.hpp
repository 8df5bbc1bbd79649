#pragma once

// Test-side oracles, kept independent of the library paths they check:
// brute-force determinants, box quadrature for Gaussian integrals, and
// random exact-rational problem generators.

#include "feynkit/matrix.hpp"
#include "feynkit/mc.hpp"
#include "feynkit/quadrature.hpp"
#include "feynkit/rational.hpp"
#include "feynkit/symmetric_form.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

using feynkit::BigInt;
using feynkit::Rat;
using feynkit::RatMatrix;

/// Determinant by cofactor expansion along the first row.
inline Rat cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rat det(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t w = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, w++) = m(r, c);
      }
    }
    Rat term = m(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

/// Tensor-product Gauss-Legendre quadrature of exp(-x.Ax/2 + b.x) over a
/// box centered on the critical point A^{-1}b, with per-axis halfwidths
/// scaled to the covariance diagonal.
inline double box_gauss_quadrature(const std::vector<std::vector<double>>& a,
                                   const std::vector<double>& b, int nodes_per_dim = 48,
                                   double sigmas = 10.0) {
  const std::size_t d = a.size();
  // Full Gauss-Jordan: center c = A^{-1} b and the covariance diagonal.
  std::vector<std::vector<double>> m = a;
  std::vector<std::vector<double>> inv(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1.0;
  std::vector<double> c = b;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col; r < d; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    std::swap(c[piv], c[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (std::size_t k = 0; k < d; ++k) {
        m[r][k] -= f * m[col][k];
        inv[r][k] -= f * inv[col][k];
      }
      c[r] -= f * c[col];
    }
  }
  std::vector<double> center(d), halfwidth(d);
  for (std::size_t i = 0; i < d; ++i) {
    center[i] = c[i] / m[i][i];
    halfwidth[i] = sigmas * std::sqrt(inv[i][i] / m[i][i]);
  }

  feynkit::GaussLegendre gl(nodes_per_dim);
  std::vector<std::size_t> idx(d, 0);
  double total = 0.0;
  while (true) {
    std::vector<double> x(d);
    double wprod = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = center[i] + halfwidth[i] * gl.nodes()[idx[i]];
      wprod *= gl.weights()[idx[i]] * halfwidth[i];
    }
    double expo = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      expo += b[i] * x[i];
      for (std::size_t j = 0; j < d; ++j) expo -= 0.5 * x[i] * a[i][j] * x[j];
    }
    total += wprod * std::exp(expo);

    std::size_t k = 0;
    while (k < d && ++idx[k] == gl.nodes().size()) idx[k++] = 0;
    if (k == d) break;
  }
  return total;
}

inline std::vector<std::vector<double>> to_double_matrix(const RatMatrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = feynkit::to_double(m(i, j));
  return out;
}

/// Random positive-definite exact matrix: M^T M + (1 + diag_boost) I with
/// small integer M.
inline RatMatrix random_pd_matrix(std::mt19937_64& rng, std::size_t d, int span = 2) {
  std::uniform_int_distribution<int> u(-span, span);
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = u(rng);
  RatMatrix a = m.transposed() * m;
  for (std::size_t i = 0; i < d; ++i) a(i, i) += 1;
  return a;
}

inline std::vector<Rat> random_rationals(std::mt19937_64& rng, std::size_t n, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rat> out(n);
  for (auto& r : out) r = Rat(num(rng), den(rng));
  return out;
}

/// Monte Carlo estimate of Z_b / Z_0 = E[exp(<b, x>)] for x drawn from the
/// Gaussian with covariance A^{-1}, via the library's moment-oracle sampler
/// only through public pieces: the covariance Cholesky is redone here.
inline feynkit::IntegralEstimate shifted_ratio_mc(const feynkit::SymmetricForm& a,
                                                  const std::vector<double>& b,
                                                  std::uint64_t samples, std::uint64_t seed) {
  const std::size_t d = a.dim();
  std::vector<double> chol(d * d, 0.0);
  {
    std::vector<double> cov(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) cov[i * d + j] = feynkit::to_double(a.inverse()(i, j));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double s = cov[i * d + j];
        for (std::size_t k = 0; k < j; ++k) s -= chol[i * d + k] * chol[j * d + k];
        chol[i * d + j] = (i == j) ? std::sqrt(s) : s / chol[j * d + j];
      }
  }
  return feynkit::run_monte_carlo({samples, seed, 1, false}, [&, d](feynkit::Rng& rng) {
    double z[8], x[8];
    for (std::size_t i = 0; i < d; ++i) z[i] = rng.gaussian();
    double dot = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k <= i; ++k) s += chol[i * d + k] * z[k];
      x[i] = s;
      dot += b[i] * x[i];
    }
    return std::exp(dot);
  });
}

}  // namespace oracles
