#pragma once

#include "feynkit/rational.hpp"
#include "feynkit/tensor.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace feynkit {

/// End of an edge: a (vertex, slot) half-edge. Legs come first in the
/// vertex numbering (ids 0..legs-1, slot always 0), internal vertices
/// follow (ids legs..legs+k-1, slots 0..valence-1).
struct HalfEdge {
  std::size_t vertex = 0;
  std::size_t slot = 0;
  auto operator<=>(const HalfEdge&) const = default;
};

/// Feynman graph with m ordered legs (univalent, distinguishable) and
/// internal vertices of valence >= 3. Multi-edges and self-loops are
/// representable through the half-edge model.
class FeynmanGraph {
 public:
  FeynmanGraph(std::size_t legs, std::vector<std::size_t> internal_valences,
               std::vector<std::pair<HalfEdge, HalfEdge>> edges);

  std::size_t legs() const { return legs_; }
  const std::vector<std::size_t>& internal_valences() const { return valences_; }
  const std::vector<std::pair<HalfEdge, HalfEdge>>& edges() const { return edges_; }
  /// Degree |Gamma| = number of internal vertices.
  std::size_t degree() const { return valences_.size(); }
  std::size_t vertex_count() const { return legs_ + valences_.size(); }

  bool is_internal(std::size_t vertex) const { return vertex >= legs_; }
  std::size_t valence(std::size_t vertex) const {
    return is_internal(vertex) ? valences_[vertex - legs_] : 1;
  }

  /// Collapsed edge multiset: per edge the unordered pair of endpoint
  /// vertices. Slots are forgotten; together with the valence list this
  /// determines the graph up to isomorphism fixing the legs.
  std::vector<std::pair<std::size_t, std::size_t>> collapsed_edges() const;

  /// Canonical key under relabelings of internal vertices (legs fixed).
  /// Equal keys == isomorphic graphs.
  std::string canonical_key() const;

  /// Partition of vertices into connected components.
  std::vector<std::vector<std::size_t>> connected_components() const;
  /// True iff some connected component carries no leg.
  bool is_vacuum() const;
  bool is_connected() const;

 private:
  std::size_t legs_;
  std::vector<std::size_t> valences_;
  std::vector<std::pair<HalfEdge, HalfEdge>> edges_;
};

/// Order of the automorphism group fixing legs pointwise: pairs of a
/// valence-preserving internal-vertex permutation and a compatible
/// bijection of edges/half-edges. Brute force over vertex permutations;
/// guarded for <= 12 internal vertices.
BigInt automorphism_count(const FeynmanGraph& g);

/// One isomorphism class produced by the Wick contraction of vertex stars.
struct ContractionClass {
  FeynmanGraph graph;
  /// Number of (ordered valence assignment, pairing) combinations that
  /// produce this class. Satisfies multiplicity * |Aut| = n! * prod(k_v!).
  BigInt multiplicity;
};

/// Enumerates all Wick pairings of the half-edges of n internal vertices
/// (each taking any valence from `potential_valences`) plus m ordered leg
/// half-edges, grouped by graph isomorphism class. Odd-total assignments
/// contribute nothing.
std::vector<ContractionClass> enumerate_contraction_graphs(
    const std::vector<std::size_t>& potential_valences, std::size_t order, std::size_t legs);

/// Weight system: a propagator a in Sym^2(V) attached to edges and one
/// symmetric tensor u_k per internal valence k attached to vertices.
class WeightSystem {
 public:
  WeightSystem(Tensor propagator, std::map<std::size_t, Tensor> vertex_tensors);

  std::size_t dim() const { return propagator_.dim(); }
  const Tensor& propagator() const { return propagator_; }
  bool has_valence(std::size_t k) const { return vertex_tensors_.count(k) > 0; }
  const Tensor& vertex_tensor(std::size_t k) const;

 private:
  Tensor propagator_;
  std::map<std::size_t, Tensor> vertex_tensors_;
};

/// W_Gamma(f_1,..,f_m): contract one copy of u_k per internal vertex and
/// one leg covector per leg through the propagator along every edge.
/// `leg_covectors` must have one rank-1 tensor per leg.
Rat graph_weight(const FeynmanGraph& g, const WeightSystem& w,
                 const std::vector<Tensor>& leg_covectors);

/// Convenience: legs contracted with basis covectors e_{leg_indices[i]}.
Rat graph_weight_basis_legs(const FeynmanGraph& g, const WeightSystem& w,
                            const std::vector<std::size_t>& leg_indices);

}  // namespace feynkit
