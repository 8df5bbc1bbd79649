#include "doctest.h"

#include "feynkit/json_io.hpp"

using namespace feynkit;

TEST_CASE("rational JSON") {
  CHECK(rational_from_json(Json(5)) == Rat(5));
  CHECK(rational_from_json(Json("3/4")) == Rat(3, 4));
  CHECK(rational_from_json(Json("-7/2")) == Rat(-7, 2));
  CHECK_THROWS_AS(rational_from_json(Json("x")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
  CHECK(rational_to_json(Rat(5)) == Json(5));
  CHECK(rational_to_json(Rat(3, 4)) == Json("3/4"));
}

TEST_CASE("matrix JSON round trip") {
  const Json j = Json::parse(R"({"dim": 2, "entries": [[2, "1/2"], ["1/2", 1]]})");
  const RatMatrix m = parse_matrix(j);
  CHECK(m(0, 1) == Rat(1, 2));
  CHECK(parse_matrix(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(parse_matrix(Json::parse(R"({"dim": 2, "entries": [[1]]})")),
                  std::invalid_argument);
}

TEST_CASE("potential JSON") {
  const Json j = Json::parse(R"({"dim": 1, "3": [[[6]]], "4": [[[[24]]]]})");
  const Potential u = parse_potential(j);
  CHECK(u.terms().count(3) == 1);
  CHECK(u.terms().count(4) == 1);
  const auto poly = u.as_polynomial();
  CHECK(poly.at({3}) == Rat(1));
  CHECK(poly.at({4}) == Rat(1));
  CHECK_THROWS_AS(parse_potential(Json::parse(R"({"dim": 1, "2": [[1]]})")),
                  std::invalid_argument);
}

TEST_CASE("graph JSON round trip") {
  const Json j = Json::parse(
      R"({"legs": 2, "vertices": [3], "edges": [[[0,0],[2,0]], [[1,0],[2,1]], [[2,2],[2,2]]]})");
  CHECK_THROWS_AS(parse_graph(j), std::invalid_argument);  // slot reused by the loop
  const Json ok = Json::parse(
      R"({"legs": 2, "vertices": [4], "edges": [[[0,0],[2,0]], [[1,0],[2,1]], [[2,2],[2,3]]]})");
  const FeynmanGraph g = parse_graph(ok);
  CHECK(g.legs() == 2);
  CHECK(g.degree() == 1);
  const FeynmanGraph back = parse_graph(graph_to_json(g));
  CHECK(back.canonical_key() == g.canonical_key());
}

TEST_CASE("link JSON round trip") {
  const auto hopf = make_hopf_link(24);
  const PolygonalLink back = parse_link(link_to_json(hopf));
  REQUIRE(back.component_count() == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    REQUIRE(back.component(c).points.size() == hopf.component(c).points.size());
    for (std::size_t k = 0; k < back.component(c).points.size(); ++k)
      CHECK((back.component(c).points[k] - hopf.component(c).points[k]).norm() == 0.0);
  }

  // Framed round trip.
  const auto circ = make_round_circle(16);
  const auto framed = circ.with_framing(0, reference_framing(circ.component(0)));
  const PolygonalLink framed_back = parse_link(link_to_json(framed));
  CHECK(framed_back.component(0).framed());
}

TEST_CASE("builtin link specs") {
  CHECK(load_link("builtin:circle").component_count() == 1);
  CHECK(load_link("builtin:hopf?segments=32").component(0).points.size() == 32);
  CHECK(load_link("builtin:trefoil?segments=90").component(0).points.size() == 90);
  CHECK(load_link("builtin:torus-link-2-4").component_count() == 2);
  CHECK_THROWS_AS(load_link("builtin:granny"), std::invalid_argument);
  CHECK_THROWS_AS(load_link("/no/such/file.json"), std::invalid_argument);
}
