#include "doctest.h"

#include "feynkit/jacobi.hpp"

#include <algorithm>
#include <random>

using namespace feynkit;

TEST_CASE("orientation signs") {
  const auto y = make_tripod();
  CHECK(orientation_sign(y, OrientationMove::reverse_vertex_cyclic_order, 3) == -1);
  CHECK(orientation_sign(y, OrientationMove::transpose_edge_pair, 0) == 1);
  CHECK(orientation_sign(y, OrientationMove::reverse_edge_direction, 1) == -1);

  SUBCASE("double reversal is the identity, signs multiply to +1") {
    const int s = orientation_sign(y, OrientationMove::reverse_vertex_cyclic_order, 3);
    // Reversing twice returns the diagram; the induced signs compose.
    CHECK(s * s == 1);
  }
  SUBCASE("invalid moves are rejected") {
    CHECK_THROWS_AS(orientation_sign(y, OrientationMove::reverse_vertex_cyclic_order, 0),
                    std::invalid_argument);  // a leg, not trivalent
    CHECK_THROWS_AS(orientation_sign(y, OrientationMove::reverse_edge_direction, 9),
                    std::invalid_argument);
  }
}

TEST_CASE("enumeration") {
  SUBCASE("degree 1") {
    const auto m1 = enumerate_jacobi(1, 1);
    CHECK(m1.size() == 2);  // chord on the circle + flagged tadpole
    std::size_t loopless = 0;
    for (const auto& d : m1)
      if (!d.has_looped_edge()) ++loopless;
    CHECK(loopless == 1);

    const auto m2 = enumerate_jacobi(1, 2);
    REQUIRE(m2.size() == 1);  // single chord joining the two circles
    CHECK_FALSE(m2[0].has_looped_edge());
  }
  SUBCASE("degree 2, one circle: contains the four loopless diagrams of the example") {
    const auto all = enumerate_jacobi(2, 1);
    std::vector<std::string> keys;
    for (const auto& d : all) keys.push_back(canonical_form(d).first);
    for (const auto& probe : {make_cross_chords(), make_parallel_chords(), make_tripod(),
                              make_double_edge_diagram()}) {
      const auto key = canonical_form(probe).first;
      CHECK(std::count(keys.begin(), keys.end(), key) == 1);
    }
  }
  SUBCASE("degree guard") {
    CHECK_THROWS_AS(enumerate_jacobi(3, 1), std::invalid_argument);
  }
}

TEST_CASE("tadpole class vanishes by the handle-twisting automorphism") {
  JacobiSpace sp(1, 1);
  const auto vec = sp.class_vector(make_tadpole(), false);
  for (const auto& x : vec) CHECK(x == 0);
  // The chord survives.
  bool chord_nonzero = false;
  for (const auto& x : sp.class_vector(make_single_chord(1), false))
    if (x != 0) chord_nonzero = true;
  CHECK(chord_nonzero);
  CHECK(sp.quotient_dimension() == 1);
}

TEST_CASE("degree-1 two-circle space has dimension 1") {
  JacobiSpace sp(1, 2);
  CHECK(sp.quotient_dimension() == 1);
  CHECK(sp.relation_count() == 0);  // no relations connect the single chord
}

TEST_CASE("degree-2 one-circle quotient") {
  JacobiSpace sp(2, 1);
  // Regression-pinned after the first exact derivation.
  CHECK(sp.basis().size() == 10);
  CHECK(sp.quotient_dimension() == 2);
  CHECK(sp.reduced_dimension() == 1);

  SUBCASE("[X] == [Y] in the zero-framing basis") {
    const auto vx = sp.class_vector(make_cross_chords(), true);
    const auto vy = sp.class_vector(make_tripod(), true);
    CHECK(vx == vy);
    bool nonzero = false;
    for (const auto& x : vx)
      if (x != 0) nonzero = true;
    CHECK(nonzero);
  }
  SUBCASE("the isolated chord dies in the zero-framing basis") {
    for (const auto& x : sp.class_vector(make_parallel_chords(), true)) CHECK(x == 0);
  }
  SUBCASE("class_of respects isomorphism") {
    // X with rotated legs and permuted edge order.
    JacobiDiagram rotated = make_cross_chords();
    rotated.circle_legs = {{1, 2, 3, 0}};
    std::swap(rotated.edges[0], rotated.edges[1]);
    CHECK(sp.class_vector(rotated, false) == sp.class_vector(make_cross_chords(), false));
  }
}

TEST_CASE("degree-2 two-circle quotient (regression)") {
  JacobiSpace sp(2, 2);
  CHECK(sp.quotient_dimension() == 4);
  CHECK(sp.reduced_dimension() == 1);
}

TEST_CASE("rank is invariant under relation row order") {
  JacobiSpace sp(2, 1);
  const RatMatrix& rel = sp.relation_matrix();
  const std::size_t rank = rel.rank();

  std::vector<std::size_t> order(rel.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    RatMatrix shuffled(rel.rows(), rel.cols());
    for (std::size_t r = 0; r < rel.rows(); ++r)
      for (std::size_t c = 0; c < rel.cols(); ++c) shuffled(r, c) = rel(order[r], c);
    CHECK(shuffled.rank() == rank);
  }
}
