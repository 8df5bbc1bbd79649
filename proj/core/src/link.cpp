#include "feynkit/link.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace feynkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
  // Closest points of two segments, clamped coordinate descent on the
  // quadratic; standard robust formulation.
  const Vec3 d1 = a1 - a0, d2 = b1 - b0, r = a0 - b0;
  const double aa = d1.norm2(), ee = d2.norm2(), ff = d2.dot(r);
  double s = 0.0, t = 0.0;
  if (aa <= 1e-300 && ee <= 1e-300) return r.norm();
  if (aa <= 1e-300) {
    t = std::clamp(ff / ee, 0.0, 1.0);
  } else {
    const double cc = d1.dot(r);
    if (ee <= 1e-300) {
      s = std::clamp(-cc / aa, 0.0, 1.0);
    } else {
      const double bb = d1.dot(d2);
      const double denom = aa * ee - bb * bb;
      if (denom > 1e-300) s = std::clamp((bb * ff - cc * ee) / denom, 0.0, 1.0);
      t = (bb * s + ff) / ee;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-cc / aa, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((bb - cc) / aa, 0.0, 1.0);
      }
    }
  }
  return ((a0 + d1 * s) - (b0 + d2 * t)).norm();
}

PolygonalLink::PolygonalLink(std::vector<LinkComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("PolygonalLink: no components");

  Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
  for (const auto& c : components_) {
    if (c.points.size() < 3)
      throw std::invalid_argument("PolygonalLink: component needs >= 3 vertices");
    for (const auto& p : c.points) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
  }
  bounding_diameter_ = (hi - lo).norm();
  if (bounding_diameter_ <= 0.0) throw std::invalid_argument("PolygonalLink: degenerate extent");
  tau_embed_ = 1e-6 * bounding_diameter_;

  cumulative_.resize(components_.size());
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    const auto& pts = components_[ci].points;
    const std::size_t n = pts.size();
    cumulative_[ci].resize(n);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double seg = (pts[(k + 1) % n] - pts[k]).norm();
      if (seg <= tau_embed_)
        throw std::invalid_argument("PolygonalLink: consecutive points coincide");
      acc += seg;
      cumulative_[ci][k] = acc;
    }

    if (components_[ci].framed()) {
      const auto& fr = components_[ci].framing;
      if (fr.size() != n)
        throw std::invalid_argument("PolygonalLink: framing size mismatch");
      for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(fr[k].norm() - 1.0) > 1e-9)
          throw std::invalid_argument("PolygonalLink: framing vector not unit");
        const Vec3 t_prev = (pts[k] - pts[(k + n - 1) % n]).normalized();
        const Vec3 t_next = (pts[(k + 1) % n] - pts[k]).normalized();
        if (std::abs(fr[k].dot(t_prev)) > 0.999 || std::abs(fr[k].dot(t_next)) > 0.999)
          throw std::invalid_argument("PolygonalLink: framing tangent to the curve");
      }
    }
  }

  // Embedding: all segment pairs except neighbors sharing a vertex.
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    const auto& pa = components_[ci].points;
    const std::size_t na = pa.size();
    for (std::size_t cj = ci; cj < components_.size(); ++cj) {
      const auto& pb = components_[cj].points;
      const std::size_t nb = pb.size();
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = (ci == cj ? i + 1 : 0); j < nb; ++j) {
          if (ci == cj) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == nb - 1);
            if (adjacent) continue;
          }
          const double dist = segment_distance(pa[i], pa[(i + 1) % na], pb[j], pb[(j + 1) % nb]);
          if (dist <= tau_embed_)
            throw std::invalid_argument("PolygonalLink: segments closer than tau_embed");
        }
      }
    }
  }
}

std::pair<std::size_t, double> PolygonalLink::locate(std::size_t comp, double s) const {
  const auto& cum = cumulative_.at(comp);
  s -= std::floor(s);
  const double target = s * cum.back();
  const auto it = std::lower_bound(cum.begin(), cum.end(), target);
  std::size_t k = static_cast<std::size_t>(it - cum.begin());
  if (k >= cum.size()) k = cum.size() - 1;
  const double seg_start = k == 0 ? 0.0 : cum[k - 1];
  const double seg_len = cum[k] - seg_start;
  return {k, (target - seg_start) / seg_len};
}

Vec3 PolygonalLink::point_at(std::size_t comp, double s) const {
  const auto [k, t] = locate(comp, s);
  const auto& pts = components_[comp].points;
  const Vec3& p0 = pts[k];
  const Vec3& p1 = pts[(k + 1) % pts.size()];
  return p0 + (p1 - p0) * t;
}

Vec3 PolygonalLink::tangent_at(std::size_t comp, double s) const {
  const auto [k, t] = locate(comp, s);
  (void)t;
  const auto& pts = components_[comp].points;
  return (pts[(k + 1) % pts.size()] - pts[k]).normalized();
}

Vec3 PolygonalLink::framing_at(std::size_t comp, double s) const {
  const auto& c = components_[comp];
  if (!c.framed()) throw std::invalid_argument("framing_at: component not framed");
  const auto [k, t] = locate(comp, s);
  const Vec3 n = c.framing[k] * (1.0 - t) + c.framing[(k + 1) % c.points.size()] * t;
  return n.normalized();
}

PolygonalLink PolygonalLink::with_framing(std::size_t comp, std::vector<Vec3> framing) const {
  auto comps = components_;
  comps.at(comp).framing = std::move(framing);
  return PolygonalLink(std::move(comps));
}

PolygonalLink make_round_circle(std::size_t segments, double radius, const Vec3& center) {
  LinkComponent c;
  for (std::size_t k = 0; k < segments; ++k) {
    const double t = kTwoPi * k / segments;
    c.points.push_back(center + Vec3{radius * std::cos(t), radius * std::sin(t), 0.0});
  }
  return PolygonalLink({c});
}

PolygonalLink make_hopf_link(std::size_t segments) {
  LinkComponent c1, c2;
  for (std::size_t k = 0; k < segments; ++k) {
    const double t = kTwoPi * k / segments;
    c1.points.push_back({std::cos(t), std::sin(t), 0.0});
    c2.points.push_back({1.0 + std::cos(t), 0.0, std::sin(t)});
  }
  return PolygonalLink({c1, c2});
}

PolygonalLink make_torus_knot(int p, int q, std::size_t segments, double big_radius,
                              double small_radius) {
  LinkComponent c;
  for (std::size_t k = 0; k < segments; ++k) {
    const double t = kTwoPi * k / segments;
    const double w = big_radius + small_radius * std::cos(q * t);
    c.points.push_back({w * std::cos(p * t), w * std::sin(p * t), small_radius * std::sin(q * t)});
  }
  return PolygonalLink({c});
}

PolygonalLink make_torus_link_2_4(std::size_t segments) {
  std::vector<LinkComponent> comps(2);
  for (int j = 0; j < 2; ++j) {
    for (std::size_t k = 0; k < segments; ++k) {
      const double t = kTwoPi * k / segments;
      const double phase = 2.0 * t + std::numbers::pi * j;
      const double w = 2.0 + std::cos(phase);
      comps[j].points.push_back({w * std::cos(t), w * std::sin(t), std::sin(phase)});
    }
  }
  return PolygonalLink({comps[0], comps[1]});
}

PolygonalLink make_trefoil(std::size_t segments) { return make_torus_knot(2, 3, segments); }

std::vector<Vec3> reference_framing(const LinkComponent& comp) {
  const std::size_t n = comp.points.size();
  const Vec3 candidates[] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0.577, 0.577, 0.577}};
  for (const auto& ref : candidates) {
    std::vector<Vec3> framing(n);
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const Vec3 t_next = (comp.points[(k + 1) % n] - comp.points[k]).normalized();
      const Vec3 t_prev = (comp.points[k] - comp.points[(k + n - 1) % n]).normalized();
      const Vec3 t_avg = (t_next + t_prev).normalized();
      Vec3 f = ref - t_avg * ref.dot(t_avg);
      if (f.norm() < 0.2) {
        ok = false;
        break;
      }
      f = f.normalized();
      if (std::abs(f.dot(t_next)) > 0.9 || std::abs(f.dot(t_prev)) > 0.9) {
        ok = false;
        break;
      }
      framing[k] = f;
    }
    if (ok) return framing;
  }
  throw std::runtime_error("reference_framing: no safe reference direction found");
}

std::vector<Vec3> twist_framing(const LinkComponent& comp, const std::vector<Vec3>& base,
                                int twists) {
  const std::size_t n = comp.points.size();
  if (base.size() != n) throw std::invalid_argument("twist_framing: framing size mismatch");
  double total = 0.0;
  std::vector<double> at(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    at[k] = total;
    total += (comp.points[(k + 1) % n] - comp.points[k]).norm();
  }
  std::vector<Vec3> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3 t_next = (comp.points[(k + 1) % n] - comp.points[k]).normalized();
    const Vec3 t_prev = (comp.points[k] - comp.points[(k + n - 1) % n]).normalized();
    const Vec3 axis = (t_next + t_prev).normalized();
    const double angle = kTwoPi * twists * (at[k] / total);
    Vec3 f = rotate_about(base[k], axis, angle);
    f = f - axis * f.dot(axis);  // keep it normal to the local direction
    out[k] = f.normalized();
  }
  return out;
}

}  // namespace feynkit
