#include "feynkit/conway.hpp"

#include <algorithm>
#include <stdexcept>

namespace feynkit {

namespace {

ConwayPoly poly_add(const ConwayPoly& a, const ConwayPoly& b) {
  ConwayPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

ConwayPoly poly_shift_scale(const ConwayPoly& a, long long scale) {
  if (a.empty() || scale == 0) return {};
  ConwayPoly out(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = scale * a[i];
  return out;
}

struct Location {
  std::size_t comp = 0, pos = 0;
};

/// Positions of both passages of a crossing.
std::pair<Location, Location> find_passages(const GaussDiagram& d, std::size_t crossing) {
  Location first, second;
  int found = 0;
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (std::size_t p = 0; p < d.components[c].size(); ++p)
      if (d.components[c][p].crossing == crossing) {
        (found == 0 ? first : second) = {c, p};
        ++found;
      }
  if (found != 2) throw std::logic_error("gauss diagram: crossing does not appear twice");
  return {first, second};
}

GaussDiagram switch_crossing(GaussDiagram d, std::size_t crossing) {
  for (auto& comp : d.components)
    for (auto& p : comp)
      if (p.crossing == crossing) p.over = !p.over;
  d.signs[crossing] = -d.signs[crossing];
  return d;
}

/// Oriented smoothing: the crossing is removed and the strands reconnect
/// respecting orientation (merge of two components or split of one).
GaussDiagram smooth_crossing(const GaussDiagram& d, std::size_t crossing) {
  const auto [a, b] = find_passages(d, crossing);
  GaussDiagram out;
  out.signs = d.signs;

  auto arc = [&](const std::vector<GaussDiagram::Passage>& comp, std::size_t from,
                 std::size_t to) {
    // Elements strictly between from and to, walking cyclically.
    std::vector<GaussDiagram::Passage> seq;
    const std::size_t n = comp.size();
    for (std::size_t k = (from + 1) % n; k != to; k = (k + 1) % n) seq.push_back(comp[k]);
    return seq;
  };

  if (a.comp == b.comp) {
    const auto& comp = d.components[a.comp];
    auto c1 = arc(comp, a.pos, b.pos);
    auto c2 = arc(comp, b.pos, a.pos);
    for (std::size_t c = 0; c < d.components.size(); ++c)
      if (c != a.comp) out.components.push_back(d.components[c]);
    out.components.push_back(std::move(c1));
    out.components.push_back(std::move(c2));
  } else {
    const auto& ca = d.components[a.comp];
    const auto& cb = d.components[b.comp];
    std::vector<GaussDiagram::Passage> merged;
    // ... -> (before a) -> [crossing] -> (after b) -> ... -> (before b)
    // -> [crossing] -> (after a) -> ...
    const std::size_t na = ca.size(), nb = cb.size();
    for (std::size_t k = (a.pos + 1) % na; k != a.pos; k = (k + 1) % na) merged.push_back(ca[k]);
    for (std::size_t k = (b.pos + 1) % nb; k != b.pos; k = (k + 1) % nb) merged.push_back(cb[k]);
    for (std::size_t c = 0; c < d.components.size(); ++c)
      if (c != a.comp && c != b.comp) out.components.push_back(d.components[c]);
    out.components.push_back(std::move(merged));
  }
  return out;
}

/// First crossing met from below while walking the components in order.
/// Returns true with the crossing id if the diagram is not yet descending.
bool first_bad_crossing(const GaussDiagram& d, std::size_t& out_crossing) {
  std::vector<char> seen(d.signs.size(), 0);
  for (const auto& comp : d.components)
    for (const auto& p : comp) {
      if (!seen[p.crossing]) {
        seen[p.crossing] = 1;
        if (!p.over) {
          out_crossing = p.crossing;
          return true;
        }
      }
    }
  return false;
}

ConwayPoly nabla(const GaussDiagram& d) {
  std::size_t bad = 0;
  if (!first_bad_crossing(d, bad)) {
    // Descending diagram: an unlink. nabla = 1 for a knot, 0 otherwise.
    return d.components.size() == 1 ? ConwayPoly{1} : ConwayPoly{};
  }
  const int sign = d.signs[bad];
  const ConwayPoly switched = nabla(switch_crossing(d, bad));
  const ConwayPoly smoothed = nabla(smooth_crossing(d, bad));
  // nabla(L+) = nabla(L-) + z nabla(L0); the bad crossing currently has
  // the given sign.
  return poly_add(switched, poly_shift_scale(smoothed, sign));
}

}  // namespace

GaussDiagram gauss_diagram(const LinkDiagram& diagram, std::size_t num_components) {
  GaussDiagram out;
  out.components.resize(num_components);
  out.signs.reserve(diagram.crossings.size());

  struct Event {
    double param;
    GaussDiagram::Passage passage;
  };
  std::vector<std::vector<Event>> events(num_components);
  for (std::size_t ci = 0; ci < diagram.crossings.size(); ++ci) {
    const auto& c = diagram.crossings[ci];
    out.signs.push_back(c.sign);
    events.at(c.over_comp).push_back({c.over_param, {ci, true}});
    events.at(c.under_comp).push_back({c.under_param, {ci, false}});
  }
  for (std::size_t c = 0; c < num_components; ++c) {
    std::sort(events[c].begin(), events[c].end(),
              [](const Event& x, const Event& y) { return x.param < y.param; });
    for (const auto& e : events[c]) out.components[c].push_back(e.passage);
  }
  return out;
}

ConwayPoly conway_polynomial(const GaussDiagram& diagram) { return nabla(diagram); }

ConwayPoly conway_of_link(const PolygonalLink& link, std::uint64_t seed) {
  const LinkDiagram d = project_link(link, seed);
  return conway_polynomial(gauss_diagram(d, link.component_count()));
}

long long conway_a2(const PolygonalLink& knot, std::uint64_t seed) {
  if (knot.component_count() != 1)
    throw std::invalid_argument("conway_a2: expected a one-component link");
  return conway_coefficient(conway_of_link(knot, seed), 2);
}

}  // namespace feynkit
