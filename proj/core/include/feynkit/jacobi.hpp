#pragma once

#include "feynkit/matrix.hpp"
#include "feynkit/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace feynkit {

/// End of an edge of a Jacobi diagram: legs have slot 0, trivalent
/// vertices slots 0, 1, 2 in cyclic order.
struct JacobiEnd {
  std::size_t vertex = 0;
  std::size_t slot = 0;
  auto operator<=>(const JacobiEnd&) const = default;
};

/// Uni-trivalent diagram on m labeled circles. Legs sit on circles with a
/// cyclic order; edges are ordered and directed (orientation data).
struct JacobiDiagram {
  std::size_t num_circles = 1;
  /// Per circle: the leg vertex ids in cyclic order; every circle carries
  /// at least one leg.
  std::vector<std::vector<std::size_t>> circle_legs;
  /// Per vertex: valence 1 (leg) or 3.
  std::vector<std::size_t> valences;
  std::vector<std::pair<JacobiEnd, JacobiEnd>> edges;

  std::size_t degree() const { return valences.size() / 2; }
  bool has_looped_edge() const;
  void validate() const;
};

/// Orientation moves of the configuration-space coordinate recipe.
enum class OrientationMove {
  reverse_vertex_cyclic_order,
  transpose_edge_pair,
  reverse_edge_direction,
};

/// Sign of the induced orientation change of C_Gamma, computed as the
/// parity of the coordinate permutation: each leg owns one coordinate,
/// each trivalent vertex three (assigned to its edge ends by cyclic
/// order), and the coordinates are read off as (x_1, y_1, .., x_n, y_n)
/// along the ordered directed edges.
int orientation_sign(const JacobiDiagram& d, OrientationMove move, std::size_t which);

/// Complete isomorph-free list of degree-n diagrams on m circles (each
/// circle carrying at least one leg, every component touching a circle).
/// Loop-bearing (tadpole) diagrams are included; filter by has_looped_edge
/// when the tadpole-free list is wanted. Guarded to n <= 2.
std::vector<JacobiDiagram> enumerate_jacobi(std::size_t degree, std::size_t circles);

/// A diagram expressed against the enumerated basis: basis index and the
/// orientation-transport sign; sign 0 means the class is forced to zero
/// (the diagram has an odd automorphism, e.g. a tadpole handle twist).
struct DiagramClass {
  std::size_t index = 0;
  int sign = 0;
};

/// The degree-n space on m circles: enumerated basis, AS/STU/IHX relation
/// rows, and exact rank computations.
class JacobiSpace {
 public:
  JacobiSpace(std::size_t degree, std::size_t circles);

  const std::vector<JacobiDiagram>& basis() const { return basis_; }
  const RatMatrix& relation_matrix() const { return relations_; }
  std::size_t relation_count() const { return relations_.rows(); }

  /// Identifies an oriented diagram against the basis.
  DiagramClass classify(const JacobiDiagram& d) const;

  /// dim of the span of diagrams modulo the relations.
  std::size_t quotient_dimension() const;
  /// Same with the framing relation added: isolated-chord diagrams
  /// (a chord with cyclically adjacent endpoints) are set to zero.
  std::size_t reduced_dimension() const;

  /// Coordinates of [d] in the quotient, as the residual of the basis
  /// vector after exact row reduction; zero vector for killed classes.
  /// With `reduced`, the framing relation is included.
  std::vector<Rat> class_vector(const JacobiDiagram& d, bool reduced = false) const;

  /// Indices of basis diagrams with an isolated chord.
  std::vector<std::size_t> isolated_chord_indices() const;

 private:
  std::size_t degree_, circles_;
  std::vector<JacobiDiagram> basis_;
  std::vector<std::string> basis_keys_;
  RatMatrix relations_;
  RatMatrix framed_relations_;
};

/// Canonical key / transport sign of an oriented diagram under circle
/// rotations, trivalent relabelings, and slot permutations (odd slot
/// permutations contribute -1; edge order and directions are free).
std::pair<std::string, int> canonical_form(const JacobiDiagram& d);

// Ready-made degree-2 diagrams on one circle (Example conventions: legs
// ascending along the circle, vertex cyclic orders as drawn).
JacobiDiagram make_cross_chords();     // X: chords (1,3), (2,4)
JacobiDiagram make_parallel_chords();  // the isolated-chord diagram
JacobiDiagram make_tripod();           // Y: three legs joined at a vertex
JacobiDiagram make_double_edge_diagram();
JacobiDiagram make_tadpole();          // degree 1: looped vertex plus leg
JacobiDiagram make_single_chord(std::size_t circles);  // degree 1

}  // namespace feynkit
