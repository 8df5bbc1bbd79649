#pragma once

#include "feynkit/geometry.hpp"
#include "feynkit/mc.hpp"

namespace feynkit {

/// The unit-area 2-form on S^2, omega = (x dy^dz + cyc) / (4 pi |x|^3),
/// normalized so the whole sphere integrates to 1, evaluated through its
/// pullbacks under Gauss maps.
struct GaussForm {
  /// Pullback density of omega under a (not necessarily unit) map v(s, t):
  /// the coefficient of ds^dt in (v/|v|)^* omega, i.e.
  /// (1/4pi) v . (dv/ds x dv/dt) / |v|^3.
  static double pullback_density(const Vec3& v, const Vec3& dv_ds, const Vec3& dv_dt);

  /// Orthonormal chart (a, b) at the unit direction u with a x b = u; the
  /// rows (a . du/dxi), (b . du/dxi) feed the product-map determinant.
  static void chart(const Vec3& u, Vec3& a, Vec3& b);
};

/// Monte Carlo check that omega integrates to 1 over S^2: the sphere is
/// parametrized by (theta, phi) and the pullback density is integrated.
IntegralEstimate omega_sphere_normalization(const McConfig& cfg);

/// Determinant of an n x n matrix stored row-major (n <= 8), by partial
/// pivoting; used for the product Gauss-map pullbacks.
double det_small(double* m, int n);

}  // namespace feynkit
