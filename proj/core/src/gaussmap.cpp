#include "feynkit/gaussmap.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace feynkit {

namespace {
constexpr double kInv4Pi = 1.0 / (4.0 * std::numbers::pi);
}

double GaussForm::pullback_density(const Vec3& v, const Vec3& dv_ds, const Vec3& dv_dt) {
  const double n2 = v.norm2();
  return kInv4Pi * triple(v, dv_ds, dv_dt) / (n2 * std::sqrt(n2));
}

void GaussForm::chart(const Vec3& u, Vec3& a, Vec3& b) {
  a = any_orthogonal(u);
  b = u.cross(a);  // (a, b, u) right-handed: a x b = u
}

IntegralEstimate omega_sphere_normalization(const McConfig& cfg) {
  constexpr double kPi = std::numbers::pi;
  return run_monte_carlo(cfg, [](Rng& rng) {
    const double theta = rng.uniform(0.0, kPi);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const Vec3 u{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                 std::cos(theta)};
    const Vec3 du_dtheta{std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
                         -std::sin(theta)};
    const Vec3 du_dphi{-std::sin(theta) * std::sin(phi), std::sin(theta) * std::cos(phi), 0.0};
    // Cell measure of the (theta, phi) box.
    return GaussForm::pullback_density(u, du_dtheta, du_dphi) * (kPi * 2.0 * kPi);
  });
}

double det_small(double* m, int n) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (m[piv * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      det = -det;
    }
    det *= m[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      // Division keeps the elimination of duplicated rows exact (x/x = 1),
      // so structurally singular pullbacks come out as a hard zero.
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

}  // namespace feynkit
