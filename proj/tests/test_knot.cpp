#include "doctest.h"

#include "feynkit/link.hpp"
#include "feynkit/projection.hpp"

#include <cmath>
#include <stdexcept>

using namespace feynkit;

TEST_CASE("PolygonalLink validation") {
  SUBCASE("too few vertices") {
    CHECK_THROWS_AS(PolygonalLink({LinkComponent{{{0, 0, 0}, {1, 0, 0}}, {}}}),
                    std::invalid_argument);
  }
  SUBCASE("coincident consecutive points") {
    CHECK_THROWS_AS(
        PolygonalLink({LinkComponent{{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {}}}),
        std::invalid_argument);
  }
  SUBCASE("self-intersecting polygon") {
    // A figure-eight shaped flat quadrilateral crosses itself.
    CHECK_THROWS_AS(
        PolygonalLink({LinkComponent{{{0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}}, {}}}),
        std::invalid_argument);
  }
  SUBCASE("non-unit framing") {
    auto c = make_round_circle(8).component(0);
    c.framing.assign(c.points.size(), Vec3{0, 0, 2});
    CHECK_THROWS_AS(PolygonalLink({c}), std::invalid_argument);
  }
  SUBCASE("tangent framing") {
    auto c = make_round_circle(32).component(0);
    c.framing.resize(c.points.size());
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      const auto& p = c.points[k];
      const auto& q = c.points[(k + 1) % c.points.size()];
      c.framing[k] = (q - p).normalized();
    }
    CHECK_THROWS_AS(PolygonalLink({c}), std::invalid_argument);
  }
  SUBCASE("generators are embedded") {
    CHECK_NOTHROW(make_round_circle(32));
    CHECK_NOTHROW(make_hopf_link(48));
    CHECK_NOTHROW(make_trefoil(96));
    CHECK_NOTHROW(make_torus_knot(2, 5, 160));
    CHECK_NOTHROW(make_torus_link_2_4(96));
  }
}

TEST_CASE("arclength parametrization") {
  const auto circ = make_round_circle(256, 2.0);
  CHECK(circ.length(0) == doctest::Approx(2.0 * 2.0 * std::numbers::pi).epsilon(1e-3));
  const Vec3 p0 = circ.point_at(0, 0.0);
  CHECK(p0.x == doctest::Approx(2.0));
  const Vec3 p25 = circ.point_at(0, 0.25);
  CHECK(p25.y == doctest::Approx(2.0).epsilon(1e-3));
  const Vec3 t0 = circ.tangent_at(0, 0.0);
  CHECK(std::abs(t0.dot(p0.normalized())) < 0.05);  // tangent roughly orthogonal to radius
}

TEST_CASE("combinatorial linking") {
  SUBCASE("split circles have lk 0") {
    PolygonalLink split({make_round_circle(32).component(0),
                         make_round_circle(32, 1.0, {8, 0, 0}).component(0)});
    CHECK(combinatorial_linking(split, 0, 1) == 0);
  }
  SUBCASE("Hopf link is +-1, torus (2,4) link is +-2") {
    const auto hopf = make_hopf_link(64);
    CHECK(std::abs(combinatorial_linking(hopf, 0, 1)) == 1);
    const auto t24 = make_torus_link_2_4(96);
    CHECK(std::abs(combinatorial_linking(t24, 0, 1)) == 2);
  }
  SUBCASE("symmetric in the two components") {
    const auto hopf = make_hopf_link(64);
    CHECK(combinatorial_linking(hopf, 0, 1) == combinatorial_linking(hopf, 1, 0));
    const auto t24 = make_torus_link_2_4(96);
    CHECK(combinatorial_linking(t24, 0, 1) == combinatorial_linking(t24, 1, 0));
  }
  SUBCASE("independent of the projection direction (5 seeds)") {
    const auto hopf = make_hopf_link(64);
    const int ref = combinatorial_linking(hopf, 0, 1, 1);
    for (std::uint64_t seed = 2; seed <= 6; ++seed)
      CHECK(combinatorial_linking(hopf, 0, 1, seed) == ref);
  }
  SUBCASE("south vs north pole counting agree") {
    // Over-crossings of i over j and of j over i count preimages of the
    // two poles of the Gauss map; both give lk.
    const auto t24 = make_torus_link_2_4(96);
    const auto diagram = project_link(t24, 11);
    CHECK(signed_over_count(diagram, 0, 1) == signed_over_count(diagram, 1, 0));
  }
  SUBCASE("same component is rejected") {
    CHECK_THROWS_AS(combinatorial_linking(make_hopf_link(48), 0, 0), std::invalid_argument);
  }
}

TEST_CASE("framing push-off self-linking") {
  const auto circ = make_round_circle(64);
  const auto base = reference_framing(circ.component(0));

  SUBCASE("flat circle with a constant vertical framing has slk 0") {
    CHECK(writhe_pushoff_selflinking(circ.with_framing(0, base), 0) == 0);
  }
  SUBCASE("each added twist changes slk by one") {
    int prev = writhe_pushoff_selflinking(
        circ.with_framing(0, twist_framing(circ.component(0), base, -2)), 0);
    for (int t = -1; t <= 2; ++t) {
      const int cur = writhe_pushoff_selflinking(
          circ.with_framing(0, twist_framing(circ.component(0), base, t)), 0);
      CHECK(std::abs(cur - prev) == 1);
      prev = cur;
    }
  }
  SUBCASE("unframed component is rejected") {
    CHECK_THROWS_AS(writhe_pushoff_selflinking(circ, 0), std::invalid_argument);
  }
}

TEST_CASE("normalize_framing_to_zero") {
  SUBCASE("already-zero framing is unchanged") {
    const auto circ = make_round_circle(64);
    const auto framed = circ.with_framing(0, reference_framing(circ.component(0)));
    REQUIRE(writhe_pushoff_selflinking(framed, 0) == 0);
    const auto normalized = normalize_framing_to_zero(framed, 0);
    CHECK(normalized.component(0).framing == framed.component(0).framing);
  }
  SUBCASE("twisted framing is compensated") {
    const auto circ = make_round_circle(64);
    const auto base = reference_framing(circ.component(0));
    const auto framed = circ.with_framing(0, twist_framing(circ.component(0), base, 1));
    REQUIRE(writhe_pushoff_selflinking(framed, 0) != 0);
    CHECK(writhe_pushoff_selflinking(normalize_framing_to_zero(framed, 0), 0) == 0);
  }
  SUBCASE("trefoil with a reference framing normalizes") {
    const auto tre = make_trefoil(120);
    const auto framed = tre.with_framing(0, reference_framing(tre.component(0)));
    CHECK(writhe_pushoff_selflinking(normalize_framing_to_zero(framed, 0), 0) == 0);
  }
}
