#pragma once

#include "feynkit/link.hpp"
#include "feynkit/mc.hpp"

#include <cstdint>

namespace feynkit {

/// Supported configuration-space graph topologies on a link.
enum class CsTopology {
  chord_two_components,  // one edge joining two components
  chord_one_component,   // one edge, both legs on the same component
  cross_chords_x,        // four cyclically ordered legs, chords (1,3),(2,4)
  tripod_y,              // three legs plus one free R^3 vertex
  double_edge,           // two legs, two internal vertices, doubled middle edge
};

/// Dimension bookkeeping of C_Gamma: legs contribute one coordinate, free
/// vertices three; the dimension must equal twice the number of edges.
struct ConfigurationDomain {
  CsTopology topology;
  int legs = 0;
  int free_vertices = 0;
  int edges = 0;

  int dimension() const { return legs + 3 * free_vertices; }
  bool dimension_matches_edges() const { return dimension() == 2 * edges; }
};

ConfigurationDomain domain_of(CsTopology topology);

struct CsMcConfig {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool deterministic = false;
  /// Collar half-width around the coincidence set, as an arclength
  /// fraction (legs) and as a fraction of the bounding diameter (free
  /// vertices against legs).
  double delta_cut = 1e-4;
  /// Deformation size of the framed Gauss map in the self-linking integral.
  double frame_epsilon = 0.05;
};

/// Estimate with the near-diagonal collar at delta_cut and at delta_cut/2,
/// plus the linear Richardson extrapolation of the two values.
struct CutEstimate {
  IntegralEstimate raw;       // collar delta_cut
  IntegralEstimate half_cut;  // collar delta_cut / 2
  double extrapolated = 0.0;  // 2 * half_cut - raw
};

/// Gauss linking integral W_e = int_{S^1 x S^1} phi* omega for the chord
/// joining components i and j; converges to lk(L_i, L_j).
IntegralEstimate linking_integral(const PolygonalLink& link, std::size_t i, std::size_t j,
                                  const CsMcConfig& cfg);

/// Chord integral on one component with the frame-deformed Gauss map
/// phi + eps n(y); converges to the framing push-off self-linking.
CutEstimate self_linking_integral(const PolygonalLink& link, std::size_t comp,
                                  const CsMcConfig& cfg);

/// The undeformed one-component chord integral; not an isotopy invariant.
CutEstimate chord_integral_unframed(const PolygonalLink& link, std::size_t comp,
                                    const CsMcConfig& cfg);

/// Weights of the two degree-2 graphs and the knot invariant
/// v2 = (1/4) W_X + (1/3) W_Y. The knot must be framed with zero
/// self-linking (see normalize_framing_to_zero).
struct V2Estimate {
  CutEstimate wx;
  CutEstimate wy;
  double value = 0.0;      // from the extrapolated weights
  double std_error = 0.0;  // combined half-cut standard errors
};
V2Estimate v2_integral(const PolygonalLink& knot, const CsMcConfig& cfg);

/// Weight of the doubled-edge degree-2 graph; the integrand vanishes
/// pointwise (the two parallel edges share one Gauss map), so the
/// estimate is exactly zero.
CutEstimate double_edge_weight(const PolygonalLink& knot, const CsMcConfig& cfg);

/// Pointwise integrand of the doubled-edge graph at given positions (legs
/// s1, s2 as arclength fractions, free vertices z1, z2); exposed for the
/// vanishing check.
double double_edge_density(const PolygonalLink& knot, double s1, double s2, const Vec3& z1,
                           const Vec3& z2);

}  // namespace feynkit
