#include "feynkit/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace feynkit {

Rat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

Json rational_to_json(const Rat& r) {
  if (denominator(r) == 1) {
    const BigInt num = numerator(r);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
      return Json(num.convert_to<long long>());
  }
  return Json(to_string(r));
}

RatMatrix parse_matrix(const Json& j) {
  if (!j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs \"dim\" and \"entries\"");
  const std::size_t d = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != d)
    throw std::invalid_argument("matrix JSON: wrong row count");
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!rows[i].is_array() || rows[i].size() != d)
      throw std::invalid_argument("matrix JSON: wrong column count");
    for (std::size_t k = 0; k < d; ++k) m(i, k) = rational_from_json(rows[i][k]);
  }
  return m;
}

SymmetricForm parse_symmetric_form(const Json& j) { return SymmetricForm(parse_matrix(j)); }

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

namespace {

void fill_tensor(Tensor& t, const Json& j, std::vector<std::size_t>& idx, std::size_t depth) {
  if (depth == t.rank()) {
    t.at(idx) = rational_from_json(j);
    return;
  }
  if (!j.is_array() || j.size() != t.dim())
    throw std::invalid_argument("potential JSON: tensor shape mismatch");
  for (std::size_t i = 0; i < t.dim(); ++i) {
    idx[depth] = i;
    fill_tensor(t, j[i], idx, depth + 1);
  }
}

}  // namespace

Potential parse_potential(const Json& j) {
  if (!j.contains("dim")) throw std::invalid_argument("potential JSON needs \"dim\"");
  const std::size_t d = j.at("dim").get<std::size_t>();
  std::map<std::size_t, Tensor> terms;
  for (const auto& [key, value] : j.items()) {
    if (key == "dim") continue;
    std::size_t k = 0;
    try {
      k = std::stoul(key);
    } catch (...) {
      throw std::invalid_argument("potential JSON: keys must be valences");
    }
    Tensor t(d, k);
    std::vector<std::size_t> idx(k, 0);
    fill_tensor(t, value, idx, 0);
    terms.emplace(k, std::move(t));
  }
  return Potential(d, std::move(terms));
}

FeynmanGraph parse_graph(const Json& j) {
  const std::size_t legs = j.at("legs").get<std::size_t>();
  std::vector<std::size_t> valences = j.at("vertices").get<std::vector<std::size_t>>();
  std::vector<std::pair<HalfEdge, HalfEdge>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON: edge needs two endpoints");
    auto parse_end = [](const Json& end) {
      if (!end.is_array() || end.size() != 2)
        throw std::invalid_argument("graph JSON: endpoint is [vertex, slot]");
      return HalfEdge{end[0].get<std::size_t>(), end[1].get<std::size_t>()};
    };
    edges.emplace_back(parse_end(e[0]), parse_end(e[1]));
  }
  return FeynmanGraph(legs, std::move(valences), std::move(edges));
}

Json graph_to_json(const FeynmanGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges())
    edges.push_back(Json::array({Json::array({a.vertex, a.slot}), Json::array({b.vertex, b.slot})}));
  return Json{{"legs", g.legs()}, {"vertices", g.internal_valences()}, {"edges", std::move(edges)}};
}

PolygonalLink parse_link(const Json& j) {
  if (!j.contains("components")) throw std::invalid_argument("link JSON needs \"components\"");
  std::vector<LinkComponent> comps;
  for (const auto& cj : j.at("components")) {
    LinkComponent c;
    for (const auto& p : cj.at("points")) {
      if (!p.is_array() || p.size() != 3)
        throw std::invalid_argument("link JSON: points are [x, y, z]");
      c.points.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    }
    if (cj.contains("framing")) {
      for (const auto& f : cj.at("framing"))
        c.framing.push_back({f[0].get<double>(), f[1].get<double>(), f[2].get<double>()});
    }
    comps.push_back(std::move(c));
  }
  return PolygonalLink(std::move(comps));
}

Json link_to_json(const PolygonalLink& link) {
  Json comps = Json::array();
  for (const auto& c : link.components()) {
    Json cj;
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(Json::array({p.x, p.y, p.z}));
    cj["points"] = std::move(pts);
    if (c.framed()) {
      Json fr = Json::array();
      for (const auto& f : c.framing) fr.push_back(Json::array({f.x, f.y, f.z}));
      cj["framing"] = std::move(fr);
    }
    comps.push_back(std::move(cj));
  }
  return Json{{"components", std::move(comps)}};
}

PolygonalLink load_link(const std::string& path_or_builtin) {
  constexpr const char* kPrefix = "builtin:";
  if (path_or_builtin.rfind(kPrefix, 0) != 0) {
    std::ifstream in(path_or_builtin);
    if (!in) throw std::invalid_argument("cannot open link file: " + path_or_builtin);
    Json j;
    in >> j;
    return parse_link(j);
  }

  std::string spec = path_or_builtin.substr(std::string(kPrefix).size());
  std::size_t segments = 0;
  const auto qpos = spec.find('?');
  if (qpos != std::string::npos) {
    const std::string query = spec.substr(qpos + 1);
    spec = spec.substr(0, qpos);
    if (query.rfind("segments=", 0) == 0)
      segments = std::stoul(query.substr(9));
    else
      throw std::invalid_argument("builtin link: unknown parameter " + query);
  }
  auto n = [&](std::size_t dflt) { return segments ? segments : dflt; };
  if (spec == "circle") return make_round_circle(n(64));
  if (spec == "hopf") return make_hopf_link(n(64));
  if (spec == "trefoil") return make_trefoil(n(160));
  if (spec == "trefoil-alt") return make_torus_knot(3, 2, n(160));
  if (spec == "torus-2-5") return make_torus_knot(2, 5, n(200));
  if (spec == "torus-link-2-4") return make_torus_link_2_4(n(96));
  throw std::invalid_argument("unknown builtin link: " + spec);
}

}  // namespace feynkit
