#pragma once

#include "feynkit/projection.hpp"

#include <cstdint>
#include <vector>

namespace feynkit {

/// Conway polynomial coefficients, index = power of z.
using ConwayPoly = std::vector<long long>;

/// Oriented link diagram in Gauss-code form: per component the cyclic
/// sequence of crossing passages, plus a sign per crossing.
struct GaussDiagram {
  struct Passage {
    std::size_t crossing = 0;
    bool over = false;
  };
  std::vector<std::vector<Passage>> components;
  std::vector<int> signs;
};

/// Builds the Gauss diagram of a projected link.
GaussDiagram gauss_diagram(const LinkDiagram& diagram, std::size_t num_components);

/// Conway polynomial by the skein recursion nabla(L+) - nabla(L-) = z nabla(L0),
/// resolving toward descending diagrams (descending => unknot or split).
ConwayPoly conway_polynomial(const GaussDiagram& diagram);

inline long long conway_coefficient(const ConwayPoly& p, std::size_t k) {
  return k < p.size() ? p[k] : 0;
}

/// Conway polynomial of a polygonal link via a generic projection.
ConwayPoly conway_of_link(const PolygonalLink& link, std::uint64_t seed = 2024);

/// a2 = [z^2] nabla for a one-component link: the degree-2 Vassiliev
/// invariant (second Conway coefficient).
long long conway_a2(const PolygonalLink& knot, std::uint64_t seed = 2024);

}  // namespace feynkit
