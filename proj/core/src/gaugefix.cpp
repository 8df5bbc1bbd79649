#include "feynkit/gaugefix.hpp"

#include "feynkit/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace feynkit {

namespace {

constexpr double kPi = std::numbers::pi;

double gaussian_delta(double t, double eps) {
  return std::exp(-0.5 * t * t / (eps * eps)) / (eps * std::sqrt(2.0 * kPi));
}

double gaussian_delta2(double re, double im, double eps) {
  return std::exp(-0.5 * (re * re + im * im) / (eps * eps)) / (2.0 * kPi * eps * eps);
}

}  // namespace

double fp_jacobian_rotation(const std::array<double, 2>& x) {
  const double r = std::hypot(x[0], x[1]);
  if (r == 0.0) throw std::domain_error("fp_jacobian_rotation: degenerate orbit at x = 0");
  return 2.0 * kPi * r;
}

double fp_orbit_delta_numeric(const std::array<double, 2>& x, double epsilon) {
  const double r = std::hypot(x[0], x[1]);
  if (r == 0.0) throw std::domain_error("fp_orbit_delta_numeric: degenerate orbit at x = 0");
  // Rotate x onto the section (r, 0); the gauge function along the orbit is
  // F(phi) = r sin(phi). Restrict to the half orbit that meets the section
  // once, phi in (-pi/2, pi/2).
  auto integrand = [&](double phi) { return gaussian_delta(r * std::sin(phi), epsilon); };
  return adaptive_simpson_panels(integrand, -0.5 * kPi, 0.5 * kPi, 1e-12) / (2.0 * kPi);
}

namespace {

double rotation_gf_at_eps(const std::function<double(double)>& f, double eps, double r_max,
                          double tol) {
  const GaussLegendre inner(48);
  const double w = 10.0 * eps;
  auto slice = [&](double x1) {
    return inner.integrate(
        [&](double x2) {
          const double r = std::hypot(x1, x2);
          return f(r) * (2.0 * kPi * r) * gaussian_delta(x2, eps);
        },
        -w, w);
  };
  return adaptive_simpson_panels(slice, 0.0, r_max, tol);
}

}  // namespace

double gauge_fixed_integral_rotation(const std::function<double(double)>& f,
                                     const RotationQuadConfig& cfg) {
  // Divergence guard: f(r) r must decay toward the truncation radius.
  double peak = 0.0;
  for (double r = 1e-3; r <= cfg.r_max; r += cfg.r_max / 256.0)
    peak = std::max(peak, std::abs(f(r) * r));
  const double tail = std::abs(f(cfg.r_max) * cfg.r_max);
  if (!(peak < 1e12) || tail > 1e-4 * peak)
    throw std::domain_error("gauge_fixed_integral_rotation: integrand fails decay guard");

  const double v1 = rotation_gf_at_eps(f, cfg.epsilon, cfg.r_max, cfg.tol);
  const double v2 = rotation_gf_at_eps(f, 0.5 * cfg.epsilon, cfg.r_max, cfg.tol);
  return (4.0 * v2 - v1) / 3.0;  // Richardson in eps^2
}

double polar_radial_integral(const std::function<double(double)>& f,
                             const RotationQuadConfig& cfg) {
  return 2.0 * kPi *
         adaptive_simpson_panels([&](double r) { return f(r) * r; }, 0.0, cfg.r_max, cfg.tol);
}

namespace {

double cstar_invariant_factor(CstarIntegrand kind, double t) {
  switch (kind) {
    case CstarIntegrand::gaussian:
      return std::exp(-0.5 * t);
    case CstarIntegrand::unit_disk:
      return t < 1.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

double cstar_gf_at_eps(unsigned alpha, double eps, const CstarConfig& cfg) {
  const GaussLegendre wq(cfg.w_nodes);
  const double h = 14.0 * eps / static_cast<double>(alpha);

  // x2 = 1 + w, w in [-h, h]^2; delta^2 is concentrated near the root
  // x2 = 1 of x2^alpha = 1 (the other roots lie far outside the window).
  auto rho_slice = [&](double rho1) {
    const double rho1_sq = rho1 * rho1;
    double acc = 0.0;
    for (std::size_t a = 0; a < wq.nodes().size(); ++a) {
      const double wre = h * wq.nodes()[a];
      for (std::size_t b = 0; b < wq.nodes().size(); ++b) {
        const double wim = h * wq.nodes()[b];
        const std::complex<double> x2(1.0 + wre, wim);
        const double x2_sq = std::norm(x2);
        const std::complex<double> u = std::pow(x2, static_cast<double>(alpha)) - 1.0;
        const double delta = gaussian_delta2(u.real(), u.imag(), eps);
        if (delta == 0.0) continue;
        const double det_lambda =
            static_cast<double>(alpha) * static_cast<double>(alpha) *
            std::pow(x2_sq, static_cast<double>(alpha));
        const double measure = 1.0 / ((rho1_sq + x2_sq) * (rho1_sq + x2_sq));
        const double inv = cstar_invariant_factor(cfg.integrand, rho1_sq / x2_sq);
        acc += wq.weights()[a] * wq.weights()[b] * delta * det_lambda * measure * inv;
      }
    }
    return acc * h * h * 2.0 * kPi * rho1;
  };
  return adaptive_simpson_panels(rho_slice, 0.0, cfg.rho_max, cfg.rho_tol);
}

}  // namespace

CstarResult cstar_gauge_fixed(unsigned alpha, const CstarConfig& cfg) {
  if (alpha < 1) throw std::invalid_argument("cstar_gauge_fixed: alpha must be >= 1");
  CstarResult res;
  const double v1 = cstar_gf_at_eps(alpha, cfg.epsilon, cfg);
  const double v2 = cstar_gf_at_eps(alpha, 0.5 * cfg.epsilon, cfg);
  res.epsilon_trace = {{cfg.epsilon, v1}, {0.5 * cfg.epsilon, v2}};
  res.value = (4.0 * v2 - v1) / 3.0;

  // Crude tail proxy: the outermost 10% radial shell of the raw integral.
  CstarConfig inner = cfg;
  inner.rho_max = 0.9 * cfg.rho_max;
  res.truncation_estimate = std::abs(v1 - cstar_gf_at_eps(alpha, cfg.epsilon, inner));
  return res;
}

double cstar_direct(CstarIntegrand integrand, double tol) {
  auto f = [&](double rho) {
    const double t = rho * rho;
    return rho * cstar_invariant_factor(integrand, t) / ((1.0 + t) * (1.0 + t));
  };
  const double r_max = integrand == CstarIntegrand::unit_disk ? 1.0 : 12.0;
  return 2.0 * kPi * adaptive_simpson_panels(f, 0.0, r_max, tol);
}

QuadraticFormReport quadratic_form_check() {
  QuadraticFormReport rep;

  RatMatrix a(4, 4);
  a(0, 1) = 1;
  a(1, 0) = 1;
  rep.a = a;
  rep.rank_a = a.rank();

  using C = std::complex<double>;
  const C i(0.0, 1.0);
  // Coordinates (x1', xbar1', x2', xbar2', xi, xibar).
  C af[6][6] = {};
  af[0][1] = 1.0;
  af[1][0] = 1.0;
  af[2][4] = i;
  af[3][5] = -i;
  af[4][2] = i;
  af[5][3] = -i;

  rep.top_block_is_swap = af[0][0] == 0.0 && af[0][1] == 1.0 && af[1][0] == 1.0 && af[1][1] == 0.0;

  // LU determinant with partial pivoting.
  C det(1.0, 0.0);
  for (int col = 0; col < 6; ++col) {
    int pivot = col;
    for (int r = col; r < 6; ++r)
      if (std::abs(af[r][col]) > std::abs(af[pivot][col])) pivot = r;
    if (std::abs(af[pivot][col]) == 0.0) {
      det = 0.0;
      break;
    }
    if (pivot != col) {
      std::swap(af[pivot], af[col]);
      det = -det;
    }
    det *= af[col][col];
    for (int r = col + 1; r < 6; ++r) {
      const C f = af[r][col] / af[col][col];
      for (int c2 = col; c2 < 6; ++c2) af[r][c2] -= f * af[col][c2];
    }
  }
  rep.det_af = det;
  return rep;
}

}  // namespace feynkit
