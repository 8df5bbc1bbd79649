#pragma once

#include "feynkit/matrix.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace feynkit {

/// Faddeev-Popov Jacobian for the rotation action on R^2 with the gauge
/// F = x_2 and the positive x_1-axis as the section: J(x) = 2 pi |x|.
/// Throws std::domain_error at x = 0 (degenerate orbit).
double fp_jacobian_rotation(const std::array<double, 2>& x);

/// Numeric orbit integral (1/2pi) int delta_eps(F(g x)) dg over the half
/// orbit meeting the section once, with a Gaussian nascent delta. Tends to
/// 1/J(x) as eps -> 0.
double fp_orbit_delta_numeric(const std::array<double, 2>& x, double epsilon);

struct RotationQuadConfig {
  double epsilon = 0.02;   // nascent delta width (Richardson over eps, eps/2)
  double tol = 1e-9;       // outer adaptive tolerance
  double r_max = 12.0;     // radial truncation for decay probing
};

/// Gauge-fixed integral of a rotationally invariant integrand f(r):
/// int_{x1>0} f(|x|) 2 pi |x| delta_eps(x2) dx1 dx2, Richardson
/// extrapolated in eps. Matches 2 pi int f(r) r dr. Throws
/// std::domain_error when the divergence guard trips.
double gauge_fixed_integral_rotation(const std::function<double(double)>& f,
                                     const RotationQuadConfig& cfg = {});

/// Reference value 2 pi int_0^R f(r) r dr by 1-d adaptive quadrature.
double polar_radial_integral(const std::function<double(double)>& f,
                             const RotationQuadConfig& cfg = {});

/// Invariant integrands for the C^2 example, as functions of the orbit
/// coordinate t = |x1|^2/|x2|^2.
enum class CstarIntegrand { gaussian, unit_disk };

struct CstarConfig {
  double epsilon = 0.05;     // nascent delta^2 width; Richardson over {eps, eps/2}
  int w_nodes = 48;          // Gauss-Legendre nodes per axis of the x2-window
  double rho_tol = 1e-8;     // adaptive tolerance in the |x1| radial direction
  double rho_max = 10.0;     // |x1| truncation radius
  CstarIntegrand integrand = CstarIntegrand::gaussian;
};

struct CstarResult {
  double value = 0.0;
  double truncation_estimate = 0.0;
  std::vector<std::pair<double, double>> epsilon_trace;  // (eps, raw value)
};

/// Gauge-fixed partition function for the C* action on C^2 in the gauge
/// F = x2^alpha - 1: nascent delta^2 concentrated on x2 = 1 carrying the
/// |alpha x2^{alpha-1}|^{-2} factor, Faddeev-Popov factor
/// det Lambda = alpha^2 (x2 xbar2)^alpha, invariant measure
/// dA(x1) dA(x2) / (|x1|^2 + |x2|^2)^2. The result is alpha-independent.
CstarResult cstar_gauge_fixed(unsigned alpha, const CstarConfig& cfg = {});

/// The direct quotient-measure value: int dA(z) f(|z|^2) / (1+|z|^2)^2.
double cstar_direct(CstarIntegrand integrand, double tol = 1e-10);

struct QuadraticFormReport {
  std::size_t rank_a = 0;
  std::complex<double> det_af;
  bool top_block_is_swap = false;
  RatMatrix a;  // the degenerate 4x4 quadratic form
};

/// Builds the worked example's 4x4 form A (rank 2) and the supplemented
/// 6x6 form A_F, and reports rank(A), det(A_F), and the leading block.
QuadraticFormReport quadratic_form_check();

}  // namespace feynkit
