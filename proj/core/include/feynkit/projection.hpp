#pragma once

#include "feynkit/link.hpp"

#include <cstdint>
#include <vector>

namespace feynkit {

/// One transverse double point of a generic planar projection.
struct Crossing {
  std::size_t over_comp = 0, under_comp = 0;
  double over_param = 0.0, under_param = 0.0;  // arclength fractions
  int sign = 0;                                // right-handed crossing = +1
};

struct LinkDiagram {
  Vec3 direction;  // projection direction; "over" = larger coordinate along it
  Vec3 e1, e2;     // (e1, e2, direction) right-handed
  std::vector<Crossing> crossings;
};

/// Projects along a seeded random direction, retrying on degeneracies
/// (near-parallel strands, near-endpoint or tangential crossings, triple
/// points). Throws std::runtime_error when the retry budget runs out.
LinkDiagram project_link(const PolygonalLink& link, std::uint64_t seed = 2024,
                         int retry_budget = 20);

/// Signed count of crossings where `over` passes over `under`.
int signed_over_count(const LinkDiagram& diagram, std::size_t over, std::size_t under);

/// Linking number lk(L_i, L_j) as the signed over-crossing count of i over
/// j in a generic projection of the two components.
int combinatorial_linking(const PolygonalLink& link, std::size_t i, std::size_t j,
                          std::uint64_t seed = 2024);

/// Default push-off offset used by the self-linking computation.
double default_pushoff_epsilon(const PolygonalLink& link);

/// Two-component link {component, framing push-off at distance eps}.
PolygonalLink pushoff_pair(const PolygonalLink& link, std::size_t comp, double eps);

/// Self-linking of a framed component: linking number with its framing
/// push-off, validated stable under halving of the push-off distance.
int writhe_pushoff_selflinking(const PolygonalLink& link, std::size_t comp,
                               std::uint64_t seed = 2024);

/// Adjusts the framing by compensating twists until the self-linking is 0.
PolygonalLink normalize_framing_to_zero(const PolygonalLink& link, std::size_t comp,
                                        std::uint64_t seed = 2024);

}  // namespace feynkit
