#include "feynkit/cs_integrals.hpp"

#include "feynkit/gaussmap.hpp"
#include "feynkit/projection.hpp"

#include <algorithm>
#include <span>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace feynkit {

namespace {

constexpr double kInv4Pi = 1.0 / (4.0 * std::numbers::pi);
constexpr double kBallVolume = 4.0 * std::numbers::pi / 3.0;

double cyclic_gap(double a, double b) {
  double d = std::abs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

McConfig to_mc(const CsMcConfig& cfg) {
  return McConfig{cfg.samples, cfg.seed, cfg.threads, cfg.deterministic};
}

/// Two collar levels accumulated from one sample stream.
struct PairSample {
  double at_cut = 0.0;
  double at_half = 0.0;
};

CutEstimate run_cut_pair(const CsMcConfig& cfg,
                         const std::function<PairSample(Rng&)>& sample) {
  // Two passes over the same seeded stream: the sample path consumes the
  // RNG identically, so the two estimates differ only in the collar mask.
  const auto runner = [&](bool half) {
    return run_monte_carlo(to_mc(cfg), [&](Rng& rng) {
      const PairSample s = sample(rng);
      return half ? s.at_half : s.at_cut;
    });
  };
  CutEstimate out;
  out.raw = runner(false);
  out.half_cut = runner(true);
  out.extrapolated = 2.0 * out.half_cut.value - out.raw.value;
  return out;
}


struct FrameSample {
  Vec3 n;
  Vec3 dn;  // derivative with respect to the arclength fraction
};

FrameSample framing_with_derivative(const PolygonalLink& link, std::size_t comp, double s) {
  const auto& c = link.component(comp);
  const auto [k, t] = link.locate(comp, s);
  const std::size_t n = c.points.size();
  const Vec3& f0 = c.framing[k];
  const Vec3& f1 = c.framing[(k + 1) % n];
  const Vec3 w = f0 * (1.0 - t) + f1 * t;
  const double seg_len = (c.points[(k + 1) % n] - c.points[k]).norm();
  const Vec3 dw = (f1 - f0) * (link.length(comp) / seg_len);
  FrameSample out;
  const double wn = w.norm();
  out.n = w / wn;
  out.dn = (dw - out.n * out.n.dot(dw)) / wn;
  return out;
}

Vec3 knot_centroid(const PolygonalLink& link) {
  Vec3 c{};
  std::size_t n = 0;
  for (const auto& comp : link.components())
    for (const auto& p : comp.points) {
      c += p;
      ++n;
    }
  return c / static_cast<double>(n);
}

double bounding_radius(const PolygonalLink& link, const Vec3& center) {
  double r = 0.0;
  for (const auto& comp : link.components())
    for (const auto& p : comp.points) r = std::max(r, (p - center).norm());
  return r;
}

/// Uniform point in the unit ball plus the Jacobian of the radial map
/// z = center + R w / (1 - |w|) onto all of R^3.
struct BallPoint {
  Vec3 z;
  double jacobian;
};

BallPoint sample_free_vertex(Rng& rng, const Vec3& center, double scale) {
  Vec3 g{rng.gaussian(), rng.gaussian(), rng.gaussian()};
  while (g.norm2() < 1e-24) g = Vec3{rng.gaussian(), rng.gaussian(), rng.gaussian()};
  const double r = std::cbrt(rng.uniform());
  const Vec3 w = g.normalized() * r;
  const double one_minus = std::max(1.0 - r, 1e-12);
  BallPoint out;
  out.z = center + w * (scale / one_minus);
  out.jacobian = scale * scale * scale / (one_minus * one_minus * one_minus * one_minus);
  return out;
}

Vec3 uniform_direction(Rng& rng) {
  Vec3 g{rng.gaussian(), rng.gaussian(), rng.gaussian()};
  while (g.norm2() < 1e-24) g = Vec3{rng.gaussian(), rng.gaussian(), rng.gaussian()};
  return g.normalized();
}

/// Free-vertex proposal for the tripod integrand: a mixture of the
/// compactified ball map, per-anchor 1/r^2 shells (the integrand spikes as
/// 1/d^2 when the vertex approaches a leg), and shells around midpoints of
/// close anchor pairs (near a double coincidence the spike sharpens to
/// 1/d^4 on a shrinking scale, so the shell radius follows the pair gap).
/// All component densities are exact, keeping the estimator unbiased.
struct FreeVertexSampler {
  Vec3 center;
  double scale;
  double shell_radius;
  double core_cut;  // collar scale; the integrand is masked below it
  double ball_weight = 0.4;
  double leg_weight = 0.4;
  // remaining weight goes to the pair shells

  double ball_density(const Vec3& z) const {
    const double rho = (z - center).norm();
    const double r = rho / (scale + rho);
    const double om = 1.0 - r;
    return (om * om * om * om) / (scale * scale * scale * kBallVolume);
  }

  /// 1/d^2 shell: matches the single-leg 1/d^2 spike of the integrand.
  static double leg_shell_density(const Vec3& z, const Vec3& at, double radius) {
    const double d = (z - at).norm();
    if (d >= radius || d <= 0.0) return 0.0;
    return 1.0 / (4.0 * std::numbers::pi * d * d * radius);
  }

  /// 1/d^4 shell on [rmin, rmax]: matches the 1/d^4 spike near a pair of
  /// coinciding legs, so the importance ratio stays bounded there.
  static double pair_shell_density(const Vec3& z, const Vec3& at, double rmin, double rmax) {
    const double d = (z - at).norm();
    if (d >= rmax || d <= rmin) return 0.0;
    const double norm = 1.0 / rmin - 1.0 / rmax;
    return 1.0 / (4.0 * std::numbers::pi * d * d * d * d * norm);
  }

  double pair_rmax(std::span<const Vec3> anchors, std::size_t i, std::size_t j) const {
    return std::min(std::max(4.0 * (anchors[i] - anchors[j]).norm(), 8.0 * core_cut),
                    shell_radius);
  }
  double pair_rmin() const { return 0.4 * core_cut; }

  double density(const Vec3& z, std::span<const Vec3> anchors) const {
    double q = ball_weight * ball_density(z);
    const std::size_t n = anchors.size();
    const double leg_w = leg_weight / static_cast<double>(n);
    for (const auto& a : anchors) q += leg_w * leg_shell_density(z, a, shell_radius);
    const std::size_t npairs = n * (n - 1) / 2;
    if (npairs > 0) {
      const double pair_w = (1.0 - ball_weight - leg_weight) / static_cast<double>(npairs);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          q += pair_w * pair_shell_density(z, (anchors[i] + anchors[j]) * 0.5, pair_rmin(),
                                           pair_rmax(anchors, i, j));
    }
    return q;
  }

  /// Returns the point and its total mixture density.
  std::pair<Vec3, double> sample(Rng& rng, std::span<const Vec3> anchors) const {
    const double pick = rng.uniform();
    const std::size_t n = anchors.size();
    Vec3 z;
    if (pick < ball_weight) {
      z = sample_free_vertex(rng, center, scale).z;
    } else if (pick < ball_weight + leg_weight || n < 2) {
      const std::size_t which =
          std::min<std::size_t>(n - 1, static_cast<std::size_t>(rng.uniform() * n));
      z = anchors[which] + uniform_direction(rng) * (rng.uniform() * shell_radius);
    } else {
      const std::size_t npairs = n * (n - 1) / 2;
      const std::size_t which =
          std::min<std::size_t>(npairs - 1, static_cast<std::size_t>(rng.uniform() * npairs));
      std::size_t pi = 0, pj = 1, counter = 0;
      bool found = false;
      for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (counter++ == which) {
            pi = i;
            pj = j;
            found = true;
          }
      const Vec3 mid = (anchors[pi] + anchors[pj]) * 0.5;
      // Radius with density ~ 1/d^2 relative to the shell measure:
      // 1/d uniform on [1/rmax, 1/rmin].
      const double rmin = pair_rmin(), rmax = pair_rmax(anchors, pi, pj);
      const double inv = 1.0 / rmax + rng.uniform() * (1.0 / rmin - 1.0 / rmax);
      z = mid + uniform_direction(rng) * (1.0 / inv);
    }
    return {z, density(z, anchors)};
  }
};

}  // namespace

ConfigurationDomain domain_of(CsTopology topology) {
  switch (topology) {
    case CsTopology::chord_two_components:
      return {topology, 2, 0, 1};
    case CsTopology::chord_one_component:
      return {topology, 2, 0, 1};
    case CsTopology::cross_chords_x:
      return {topology, 4, 0, 2};
    case CsTopology::tripod_y:
      return {topology, 3, 1, 3};
    case CsTopology::double_edge:
      return {topology, 2, 2, 4};
  }
  throw std::invalid_argument("domain_of: unknown topology");
}

IntegralEstimate linking_integral(const PolygonalLink& link, std::size_t i, std::size_t j,
                                  const CsMcConfig& cfg) {
  if (i == j) throw std::invalid_argument("linking_integral: need two distinct components");
  const double li = link.length(i), lj = link.length(j);
  return run_monte_carlo(to_mc(cfg), [&, li, lj](Rng& rng) {
    const double s = rng.uniform();
    const double t = rng.uniform();
    const Vec3 x = link.point_at(i, s);
    const Vec3 y = link.point_at(j, t);
    const Vec3 u = y - x;
    const Vec3 du_ds = link.tangent_at(i, s) * (-li);
    const Vec3 du_dt = link.tangent_at(j, t) * lj;
    return GaussForm::pullback_density(u, du_ds, du_dt);
  });
}

namespace {

CutEstimate chord_integral_impl(const PolygonalLink& link, std::size_t comp, double frame_eps,
                                const CsMcConfig& cfg) {
  if (frame_eps != 0.0 && !link.component(comp).framed())
    throw std::invalid_argument("self_linking_integral: component not framed");
  const double len = link.length(comp);
  const double cut = cfg.delta_cut;
  // The frame deformation moves the head of the chord to the push-off
  // point y + eps n(y); the deformed map is then nonzero on the diagonal
  // and the annulus closes up to a torus of a well-defined degree.
  const double eps_abs = frame_eps * link.bounding_diameter();

  return run_cut_pair(cfg, [&, len, cut, eps_abs, frame_eps](Rng& rng) {
    const double q1 = rng.uniform();
    const double q2 = rng.uniform();
    const double gap = cyclic_gap(q1, q2);
    PairSample out;
    if (gap < 0.5 * cut) return out;

    const Vec3 x = link.point_at(comp, q1);
    const Vec3 y = link.point_at(comp, q2);
    Vec3 v = y - x;
    Vec3 dv1 = link.tangent_at(comp, q1) * (-len);
    Vec3 dv2 = link.tangent_at(comp, q2) * len;
    if (frame_eps != 0.0) {
      const FrameSample f = framing_with_derivative(link, comp, q2);
      v += f.n * eps_abs;
      dv2 += f.dn * eps_abs;
    }
    const double density = GaussForm::pullback_density(v, dv1, dv2);
    out.at_half = density;
    if (gap >= cut) out.at_cut = density;
    return out;
  });
}

}  // namespace

CutEstimate self_linking_integral(const PolygonalLink& link, std::size_t comp,
                                  const CsMcConfig& cfg) {
  return chord_integral_impl(link, comp, cfg.frame_epsilon, cfg);
}

CutEstimate chord_integral_unframed(const PolygonalLink& link, std::size_t comp,
                                    const CsMcConfig& cfg) {
  return chord_integral_impl(link, comp, 0.0, cfg);
}

namespace {

/// Pullback density of the two crossed chords (1,3), (2,4): in the edge
/// coordinate order (q1, q3, q2, q4) the product form is block diagonal,
/// so the density is the product of the chord densities.
double x_density(const PolygonalLink& knot, const double q[4]) {
  const double len = knot.length(0);
  const Vec3 p1 = knot.point_at(0, q[0]), p2 = knot.point_at(0, q[1]);
  const Vec3 p3 = knot.point_at(0, q[2]), p4 = knot.point_at(0, q[3]);
  const Vec3 u13 = p3 - p1, u24 = p4 - p2;
  const double f1 = GaussForm::pullback_density(u13, knot.tangent_at(0, q[0]) * (-len),
                                                knot.tangent_at(0, q[2]) * len);
  const double f2 = GaussForm::pullback_density(u24, knot.tangent_at(0, q[1]) * (-len),
                                                knot.tangent_at(0, q[3]) * len);
  return f1 * f2;
}

CutEstimate wx_integral(const PolygonalLink& knot, const CsMcConfig& cfg) {
  const double cut = cfg.delta_cut;
  return run_cut_pair(cfg, [&, cut](Rng& rng) {
    const double s = rng.uniform();
    double t[3] = {rng.uniform(), rng.uniform(), rng.uniform()};
    std::sort(t, t + 3);
    const double q[4] = {s, s + t[0], s + t[1], s + t[2]};
    const double gaps[4] = {t[0], t[1] - t[0], t[2] - t[1], 1.0 - t[2]};
    const double min_gap = *std::min_element(gaps, gaps + 4);

    PairSample out;
    if (min_gap < 0.5 * cut) return out;
    const double density = x_density(knot, q) / 6.0;  // sorted-uniform simplex factor 3!
    out.at_half = density;
    if (min_gap >= cut) out.at_cut = density;
    return out;
  });
}

/// 6x6 product Gauss-map determinant of the tripod: edges z -> q_i with the
/// orientation columns (z_x, q1, z_y, q2, z_z, q3), and the vertex cyclic
/// order taken clockwise against the ascending legs. The cyclic-order
/// convention is pinned by the invariance of (1/4)W_X + (1/3)W_Y across
/// isotopic representatives (the unknot family and two trefoil
/// parametrizations); the opposite choice breaks it by ~0.3 on the trefoil.
double y_density(const PolygonalLink& knot, const double q[3], const Vec3& z) {
  const double len = knot.length(0);
  double m[36];
  for (int e = 0; e < 3; ++e) {
    const Vec3 leg = knot.point_at(0, q[e]);
    const Vec3 u = leg - z;
    const double un = u.norm();
    const Vec3 uh = u / un;
    Vec3 a, b;
    GaussForm::chart(uh, a, b);
    const Vec3 dleg = knot.tangent_at(0, q[e]) * len;

    // d(u/|u|) per coordinate: columns 0,2,4 move z by -e_x, -e_y, -e_z;
    // column 2e+1 moves leg q_e along the knot.
    for (int col = 0; col < 6; ++col) {
      Vec3 du{};
      if (col % 2 == 0) {
        Vec3 dz{};
        (col == 0 ? dz.x : col == 2 ? dz.y : dz.z) = 1.0;
        du = -dz;
      } else if (col == 2 * e + 1) {
        du = dleg;
      } else {
        m[(2 * e) * 6 + col] = 0.0;
        m[(2 * e + 1) * 6 + col] = 0.0;
        continue;
      }
      const Vec3 duh = (du - uh * uh.dot(du)) / un;
      m[(2 * e) * 6 + col] = a.dot(duh);
      m[(2 * e + 1) * 6 + col] = b.dot(duh);
    }
  }
  const double det = det_small(m, 6);
  // Clockwise vertex cyclic order: odd relabeling of the z columns.
  return -det * kInv4Pi * kInv4Pi * kInv4Pi;
}

CutEstimate wy_integral(const PolygonalLink& knot, const CsMcConfig& cfg) {
  const double cut = cfg.delta_cut;
  const Vec3 center = knot_centroid(knot);
  const double scale = bounding_radius(knot, center);
  const double z_cut = cfg.delta_cut * knot.bounding_diameter();
  const FreeVertexSampler sampler{center, scale, 0.75 * scale, z_cut};

  return run_cut_pair(cfg, [&, cut, z_cut, sampler](Rng& rng) {
    const double s = rng.uniform();
    double t[2] = {rng.uniform(), rng.uniform()};
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    const double q[3] = {s, s + t[0], s + t[1]};
    const double gaps[3] = {t[0], t[1] - t[0], 1.0 - t[1]};
    const double min_gap = *std::min_element(gaps, gaps + 3);

    const Vec3 anchors[3] = {knot.point_at(0, q[0]), knot.point_at(0, q[1]),
                             knot.point_at(0, q[2])};
    const auto [z, q_density] = sampler.sample(rng, anchors);

    PairSample out;
    if (min_gap < 0.5 * cut) return out;
    double min_dist = 1e300;
    for (const auto& a : anchors) min_dist = std::min(min_dist, (a - z).norm());
    if (min_dist < 0.5 * z_cut) return out;

    // Sorted-pair simplex factor 2!; the free vertex is importance sampled.
    const double value = y_density(knot, q, z) / (q_density * 2.0);
    out.at_half = value;
    if (min_gap >= cut && min_dist >= z_cut) out.at_cut = value;
    return out;
  });
}

}  // namespace

V2Estimate v2_integral(const PolygonalLink& knot, const CsMcConfig& cfg) {
  if (knot.component_count() != 1)
    throw std::invalid_argument("v2_integral: expected a one-component link");
  if (!knot.component(0).framed())
    throw std::invalid_argument("v2_integral: knot must carry a zero self-linking framing");
  if (writhe_pushoff_selflinking(knot, 0, cfg.seed) != 0)
    throw std::invalid_argument("v2_integral: framing self-linking must be 0");

  V2Estimate est;
  CsMcConfig cfg_x = cfg;
  CsMcConfig cfg_y = cfg;
  cfg_y.seed = Rng::mix(cfg.seed, 0x5947);
  est.wx = wx_integral(knot, cfg_x);
  est.wy = wy_integral(knot, cfg_y);
  est.value = est.wx.extrapolated / 4.0 + est.wy.extrapolated / 3.0;
  // Conservative: var(2H - R) <= 4 var(H) + var(R) for positively
  // correlated collar levels.
  const auto extrap_err = [](const CutEstimate& c) {
    return std::sqrt(4.0 * c.half_cut.std_error * c.half_cut.std_error +
                     c.raw.std_error * c.raw.std_error);
  };
  const double ex = extrap_err(est.wx) / 4.0;
  const double ey = extrap_err(est.wy) / 3.0;
  est.std_error = std::sqrt(ex * ex + ey * ey);
  return est;
}

double double_edge_density(const PolygonalLink& knot, double s1, double s2, const Vec3& z1,
                           const Vec3& z2) {
  const double len = knot.length(0);
  // Edges: q1 -> z1, z1 -> z2 (doubled), z2 -> q2. Orientation columns:
  // (q1, z1_x, z1_y, z2_x, z1_z, z2_y, z2_z, q2).
  double m[64] = {};
  struct Edge {
    Vec3 u;
    int tail_kind;  // 0: leg1, 1: z1, 2: z2
    int head_kind;  // 1: z1, 2: z2, 3: leg2
  };
  const Vec3 p1 = knot.point_at(0, s1), p2 = knot.point_at(0, s2);
  const Edge edges[4] = {{z1 - p1, 0, 1}, {z2 - z1, 1, 2}, {z2 - z1, 1, 2}, {p2 - z2, 2, 3}};
  // Column -> (kind, axis): q1, z1x, z1y, z2x, z1z, z2y, z2z, q2.
  const int col_kind[8] = {0, 1, 1, 2, 1, 2, 2, 3};
  const int col_axis[8] = {0, 0, 1, 0, 2, 1, 2, 0};

  for (int e = 0; e < 4; ++e) {
    const Vec3& u = edges[e].u;
    const double un = u.norm();
    const Vec3 uh = u / un;
    Vec3 a, b;
    GaussForm::chart(uh, a, b);
    for (int col = 0; col < 8; ++col) {
      Vec3 du{};
      const int kind = col_kind[col];
      if (kind == 0 && edges[e].tail_kind == 0) {
        du = knot.tangent_at(0, s1) * (-len);
      } else if (kind == 3 && edges[e].head_kind == 3) {
        du = knot.tangent_at(0, s2) * len;
      } else if (kind == 1 || kind == 2) {
        Vec3 dz{};
        (col_axis[col] == 0 ? dz.x : col_axis[col] == 1 ? dz.y : dz.z) = 1.0;
        if (edges[e].tail_kind == kind)
          du = -dz;
        else if (edges[e].head_kind == kind)
          du = dz;
        else
          continue;
      } else {
        continue;
      }
      const Vec3 duh = (du - uh * uh.dot(du)) / un;
      m[(2 * e) * 8 + col] = a.dot(duh);
      m[(2 * e + 1) * 8 + col] = b.dot(duh);
    }
  }
  return det_small(m, 8) * kInv4Pi * kInv4Pi * kInv4Pi * kInv4Pi;
}

CutEstimate double_edge_weight(const PolygonalLink& knot, const CsMcConfig& cfg) {
  if (knot.component_count() != 1)
    throw std::invalid_argument("double_edge_weight: expected a one-component link");
  const double cut = cfg.delta_cut;
  const Vec3 center = knot_centroid(knot);
  const double scale = bounding_radius(knot, center);
  const double z_cut = cfg.delta_cut * knot.bounding_diameter();

  return run_cut_pair(cfg, [&, cut, center, scale, z_cut](Rng& rng) {
    const double q1 = rng.uniform();
    const double q2 = rng.uniform();
    const double gap = cyclic_gap(q1, q2);
    const BallPoint b1 = sample_free_vertex(rng, center, scale);
    const BallPoint b2 = sample_free_vertex(rng, center, scale);

    PairSample out;
    if (gap < 0.5 * cut) return out;
    const double sep = (b2.z - b1.z).norm();
    double min_dist = std::min(
        {sep, (knot.point_at(0, q1) - b1.z).norm(), (knot.point_at(0, q2) - b2.z).norm()});
    if (min_dist < 0.5 * z_cut) return out;

    const double value = double_edge_density(knot, q1, q2, b1.z, b2.z) * b1.jacobian *
                         b2.jacobian * kBallVolume * kBallVolume;
    out.at_half = value;
    if (gap >= cut && min_dist >= z_cut) out.at_cut = value;
    return out;
  });
}

}  // namespace feynkit
