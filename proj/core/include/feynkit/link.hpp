#pragma once

#include "feynkit/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace feynkit {

/// One closed polyline, optionally framed by a unit normal per vertex.
struct LinkComponent {
  std::vector<Vec3> points;
  std::vector<Vec3> framing;  // empty or one unit vector per vertex

  bool framed() const { return !framing.empty(); }
};

/// Embedded polygonal link in R^3. Validation at construction: every
/// component closed with >= 3 distinct consecutive vertices, pairwise
/// segment distance above tau_embed = 1e-6 x bounding-box diameter
/// (adjacent segments excepted), framings unit and nowhere tangent.
class PolygonalLink {
 public:
  explicit PolygonalLink(std::vector<LinkComponent> components);

  std::size_t component_count() const { return components_.size(); }
  const LinkComponent& component(std::size_t i) const { return components_.at(i); }
  const std::vector<LinkComponent>& components() const { return components_; }

  double bounding_diameter() const { return bounding_diameter_; }
  double embed_tolerance() const { return tau_embed_; }

  /// Total polygonal length of a component.
  double length(std::size_t comp) const { return cumulative_[comp].back(); }

  /// Point at arclength fraction s in [0, 1) along the component.
  Vec3 point_at(std::size_t comp, double s) const;
  /// Unit tangent of the segment containing arclength fraction s.
  Vec3 tangent_at(std::size_t comp, double s) const;
  /// Framing at arclength fraction s: vertex framings interpolated along
  /// the segment and normalized. Component must be framed.
  Vec3 framing_at(std::size_t comp, double s) const;

  /// Segment index and local parameter for an arclength fraction.
  std::pair<std::size_t, double> locate(std::size_t comp, double s) const;

  PolygonalLink with_framing(std::size_t comp, std::vector<Vec3> framing) const;

 private:
  std::vector<LinkComponent> components_;
  std::vector<std::vector<double>> cumulative_;  // per component, per segment end
  double bounding_diameter_ = 0.0;
  double tau_embed_ = 0.0;
};

/// Distance between two 3D segments.
double segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1);

// Built-in generators (all polygonal, vertex counts as given).

/// Planar round circle of the given radius in the z = 0 plane.
PolygonalLink make_round_circle(std::size_t segments = 64, double radius = 1.0,
                                const Vec3& center = {});

/// Standard Hopf link: unit circle in the xy-plane at the origin and a unit
/// circle in the xz-plane centered at (1, 0, 0).
PolygonalLink make_hopf_link(std::size_t segments = 64);

/// (p, q) torus knot on the torus of radii (R, r).
PolygonalLink make_torus_knot(int p, int q, std::size_t segments = 120, double big_radius = 2.0,
                              double small_radius = 1.0);

/// (2, 4) torus link: two parallel (1, 2) curves, linking number +-2.
PolygonalLink make_torus_link_2_4(std::size_t segments = 96);

/// Trefoil as the (2, 3) torus knot.
PolygonalLink make_trefoil(std::size_t segments = 120);

/// A framing from a fixed reference direction, projected orthogonal to the
/// curve at each vertex. Picks a reference with a safe tangency margin.
std::vector<Vec3> reference_framing(const LinkComponent& comp);

/// Adds `twists` full turns to a framing, distributed by arclength.
std::vector<Vec3> twist_framing(const LinkComponent& comp, const std::vector<Vec3>& base,
                                int twists);

}  // namespace feynkit
