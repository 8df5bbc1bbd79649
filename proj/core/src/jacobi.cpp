#include "feynkit/jacobi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace feynkit {

namespace {

/// Slot count of a vertex.
std::size_t valence_slots(const JacobiDiagram& d, std::size_t v) { return d.valences[v]; }

int permutation_parity(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
  // Parity of the permutation mapping the `from` word to the `to` word.
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < from.size(); ++i) pos[from[i]] = i;
  std::vector<std::size_t> perm(to.size());
  for (std::size_t i = 0; i < to.size(); ++i) perm[i] = pos.at(to[i]);
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<std::size_t> coordinate_word(const JacobiDiagram& d) {
  std::vector<std::size_t> word;
  word.reserve(2 * d.edges.size());
  for (const auto& [tail, head] : d.edges) {
    word.push_back(tail.vertex * 3 + tail.slot);
    word.push_back(head.vertex * 3 + head.slot);
  }
  return word;
}

int parity_of_s3(const std::array<std::size_t, 3>& sigma) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

bool JacobiDiagram::has_looped_edge() const {
  for (const auto& [a, b] : edges)
    if (a.vertex == b.vertex) return true;
  return false;
}

void JacobiDiagram::validate() const {
  std::size_t leg_count = 0;
  std::vector<char> is_leg(valences.size(), 0);
  for (std::size_t v = 0; v < valences.size(); ++v) {
    if (valences[v] != 1 && valences[v] != 3)
      throw std::invalid_argument("JacobiDiagram: valences must be 1 or 3");
    if (valences[v] == 1) {
      ++leg_count;
      is_leg[v] = 1;
    }
  }
  if (circle_legs.size() != num_circles)
    throw std::invalid_argument("JacobiDiagram: circle count mismatch");
  std::size_t placed = 0;
  for (const auto& legs : circle_legs) {
    if (legs.empty()) throw std::invalid_argument("JacobiDiagram: bare circle");
    for (auto l : legs) {
      if (l >= valences.size() || !is_leg[l])
        throw std::invalid_argument("JacobiDiagram: circle entry is not a leg");
      ++placed;
    }
  }
  if (placed != leg_count) throw std::invalid_argument("JacobiDiagram: unplaced legs");

  std::vector<std::vector<int>> used(valences.size());
  for (std::size_t v = 0; v < valences.size(); ++v) used[v].assign(valences[v], 0);
  for (const auto& [a, b] : edges)
    for (const auto& end : {a, b}) {
      if (end.vertex >= valences.size() || end.slot >= valences[end.vertex])
        throw std::invalid_argument("JacobiDiagram: end out of range");
      if (used[end.vertex][end.slot]++)
        throw std::invalid_argument("JacobiDiagram: slot used twice");
    }
  for (const auto& u : used)
    for (int c : u)
      if (!c) throw std::invalid_argument("JacobiDiagram: unused slot");
}

int orientation_sign(const JacobiDiagram& d, OrientationMove move, std::size_t which) {
  const auto base = coordinate_word(d);
  JacobiDiagram moved = d;
  switch (move) {
    case OrientationMove::reverse_vertex_cyclic_order: {
      if (which >= d.valences.size() || d.valences[which] != 3)
        throw std::invalid_argument("orientation_sign: not a trivalent vertex");
      // Reversed cyclic order: the coordinates at slots 1 and 2 swap.
      for (auto& [a, b] : moved.edges)
        for (auto* end : {&a, &b})
          if (end->vertex == which && end->slot > 0) end->slot = 3 - end->slot;
      break;
    }
    case OrientationMove::transpose_edge_pair: {
      if (which + 1 >= d.edges.size())
        throw std::invalid_argument("orientation_sign: edge pair out of range");
      std::swap(moved.edges[which], moved.edges[which + 1]);
      break;
    }
    case OrientationMove::reverse_edge_direction: {
      if (which >= d.edges.size()) throw std::invalid_argument("orientation_sign: bad edge");
      std::swap(moved.edges[which].first, moved.edges[which].second);
      break;
    }
  }
  return permutation_parity(base, coordinate_word(moved));
}

std::pair<std::string, int> canonical_form(const JacobiDiagram& d) {
  const std::size_t nv = d.valences.size();
  std::vector<std::size_t> trivalent;
  for (std::size_t v = 0; v < nv; ++v)
    if (d.valences[v] == 3) trivalent.push_back(v);

  // Leg numbering offsets per circle.
  std::vector<std::size_t> circle_offset(d.num_circles, 0);
  {
    std::size_t off = 0;
    for (std::size_t c = 0; c < d.num_circles; ++c) {
      circle_offset[c] = off;
      off += d.circle_legs[c].size();
    }
  }
  const std::size_t total_legs = nv - trivalent.size();

  static const std::array<std::array<std::size_t, 3>, 6> kS3 = {{
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};

  std::string best;
  int best_sign = 0;
  bool ambiguous = false;

  // Rotation choices per circle.
  std::vector<std::size_t> rot(d.num_circles, 0);
  std::function<void(std::size_t)> per_rotation = [&](std::size_t c) {
    if (c < d.num_circles) {
      for (rot[c] = 0; rot[c] < d.circle_legs[c].size(); ++rot[c]) per_rotation(c + 1);
      return;
    }
    // Leg id map under the rotations.
    std::vector<std::size_t> leg_id(nv, SIZE_MAX);
    for (std::size_t cc = 0; cc < d.num_circles; ++cc) {
      const auto& legs = d.circle_legs[cc];
      for (std::size_t p = 0; p < legs.size(); ++p)
        leg_id[legs[(rot[cc] + p) % legs.size()]] = circle_offset[cc] + p;
    }

    std::vector<std::size_t> tri_perm(trivalent.size());
    std::iota(tri_perm.begin(), tri_perm.end(), 0);
    do {
      std::vector<std::size_t> tri_rank(nv, SIZE_MAX);
      for (std::size_t k = 0; k < trivalent.size(); ++k)
        tri_rank[trivalent[k]] = total_legs + tri_perm[k];

      // Slot permutations per trivalent vertex.
      std::vector<std::size_t> sigma_idx(trivalent.size(), 0);
      std::function<void(std::size_t)> per_sigma = [&](std::size_t t) {
        if (t < trivalent.size()) {
          for (sigma_idx[t] = 0; sigma_idx[t] < 6; ++sigma_idx[t]) per_sigma(t + 1);
          return;
        }
        int parity = 1;
        for (std::size_t k = 0; k < trivalent.size(); ++k)
          parity *= parity_of_s3(kS3[sigma_idx[k]]);

        std::vector<std::pair<std::size_t, std::size_t>> rel_edges;
        rel_edges.reserve(d.edges.size());
        auto map_end = [&](const JacobiEnd& e) -> std::size_t {
          if (d.valences[e.vertex] == 1) return leg_id[e.vertex] * 3;
          std::size_t t_index = SIZE_MAX;
          for (std::size_t k = 0; k < trivalent.size(); ++k)
            if (trivalent[k] == e.vertex) t_index = k;
          return tri_rank[e.vertex] * 3 + kS3[sigma_idx[t_index]][e.slot];
        };
        for (const auto& [a, b] : d.edges) {
          std::size_t x = map_end(a), y = map_end(b);
          rel_edges.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(rel_edges.begin(), rel_edges.end());
        std::string key;
        key.reserve(rel_edges.size() * 8);
        for (const auto& [x, y] : rel_edges) {
          key += std::to_string(x);
          key += ',';
          key += std::to_string(y);
          key += ';';
        }
        if (best_sign == 0 && !ambiguous) {
          best = key;
          best_sign = parity;
          return;
        }
        if (key < best) {
          best = key;
          best_sign = parity;
          ambiguous = false;
        } else if (key == best && parity != best_sign) {
          ambiguous = true;
        }
      };
      per_sigma(0);
    } while (std::next_permutation(tri_perm.begin(), tri_perm.end()));
  };
  per_rotation(0);

  // Header with the circle structure.
  std::string head = "C";
  for (const auto& legs : d.circle_legs) head += std::to_string(legs.size()) + ".";
  head += "|T" + std::to_string(trivalent.size()) + "|";
  return {head + best, ambiguous ? 0 : best_sign};
}

namespace {

void visit_slot_pairings(std::vector<JacobiEnd>& unused,
                         std::vector<std::pair<JacobiEnd, JacobiEnd>>& current,
                         const std::function<void()>& visit) {
  if (unused.empty()) {
    visit();
    return;
  }
  const JacobiEnd first = unused.front();
  for (std::size_t k = 1; k < unused.size(); ++k) {
    const JacobiEnd partner = unused[k];
    std::vector<JacobiEnd> rest;
    rest.reserve(unused.size() - 2);
    for (std::size_t j = 1; j < unused.size(); ++j)
      if (j != k) rest.push_back(unused[j]);
    current.emplace_back(first, partner);
    visit_slot_pairings(rest, current, visit);
    current.pop_back();
  }
}

bool all_components_touch_circle(const JacobiDiagram& d) {
  const std::size_t nv = d.valences.size();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : d.edges) parent[find(a.vertex)] = find(b.vertex);
  // Legs on a common circle are connected through the skeleton.
  for (const auto& legs : d.circle_legs)
    for (std::size_t p = 1; p < legs.size(); ++p) parent[find(legs[0])] = find(legs[p]);
  std::set<std::size_t> roots, leg_roots;
  for (std::size_t v = 0; v < nv; ++v) roots.insert(find(v));
  for (const auto& legs : d.circle_legs)
    for (auto l : legs) leg_roots.insert(find(l));
  return roots == leg_roots;
}

}  // namespace

std::vector<JacobiDiagram> enumerate_jacobi(std::size_t degree, std::size_t circles) {
  if (degree > 2) throw std::invalid_argument("enumerate_jacobi: degree guard (n <= 2)");
  if (circles == 0) throw std::invalid_argument("enumerate_jacobi: need at least one circle");

  std::vector<JacobiDiagram> out;
  std::set<std::string> seen;
  const std::size_t total_vertices = 2 * degree;
  if (total_vertices == 0) return out;

  for (std::size_t legs = circles; legs <= total_vertices; ++legs) {
    const std::size_t tri = total_vertices - legs;

    // Compositions of `legs` into `circles` positive parts.
    std::vector<std::size_t> part(circles, 1);
    std::function<void(std::size_t, std::size_t)> per_composition = [&](std::size_t idx,
                                                                        std::size_t left) {
      if (idx + 1 == circles) {
        part[idx] = left;
        JacobiDiagram proto;
        proto.num_circles = circles;
        proto.valences.assign(total_vertices, 1);
        for (std::size_t v = legs; v < total_vertices; ++v) proto.valences[v] = 3;
        proto.circle_legs.assign(circles, {});
        std::size_t next = 0;
        for (std::size_t c = 0; c < circles; ++c)
          for (std::size_t p = 0; p < part[c]; ++p) proto.circle_legs[c].push_back(next++);

        std::vector<JacobiEnd> slots;
        for (std::size_t v = 0; v < total_vertices; ++v)
          for (std::size_t s = 0; s < proto.valences[v]; ++s) slots.push_back({v, s});

        std::vector<std::pair<JacobiEnd, JacobiEnd>> current;
        visit_slot_pairings(slots, current, [&] {
          JacobiDiagram d = proto;
          d.edges = current;
          if (!all_components_touch_circle(d)) return;
          const auto [key, sign] = canonical_form(d);
          (void)sign;
          if (seen.insert(key).second) out.push_back(d);
        });
        return;
      }
      for (std::size_t take = 1; take + (circles - idx - 1) <= left; ++take) {
        part[idx] = take;
        per_composition(idx + 1, left - take);
      }
    };
    if (legs >= circles) per_composition(0, legs);
  }
  return out;
}

namespace {

/// Reverses the cyclic order at a trivalent vertex (slots 1 and 2 swap).
JacobiDiagram reverse_vertex(const JacobiDiagram& d, std::size_t v) {
  JacobiDiagram out = d;
  for (auto& [a, b] : out.edges)
    for (auto* end : {&a, &b})
      if (end->vertex == v && end->slot > 0) end->slot = 3 - end->slot;
  return out;
}

struct PeerTable {
  std::vector<std::vector<JacobiEnd>> peer;  // per vertex, per slot
  std::vector<std::vector<std::size_t>> edge_of;

  explicit PeerTable(const JacobiDiagram& d) {
    peer.resize(d.valences.size());
    edge_of.resize(d.valences.size());
    for (std::size_t v = 0; v < d.valences.size(); ++v) {
      peer[v].assign(d.valences[v], {});
      edge_of[v].assign(d.valences[v], SIZE_MAX);
    }
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      const auto& [a, b] = d.edges[e];
      peer[a.vertex][a.slot] = b;
      peer[b.vertex][b.slot] = a;
      edge_of[a.vertex][a.slot] = e;
      edge_of[b.vertex][b.slot] = e;
    }
  }
};

/// Removes vertex v (trivalent) and leg l, rewiring v's two non-stem ends
/// to two fresh legs inserted at l's circle position, in the given order.
/// Returns the STU resolution diagram.
JacobiDiagram stu_resolution(const JacobiDiagram& d, std::size_t v, std::size_t stem_slot,
                             std::size_t leg, bool swapped) {
  const PeerTable pt(d);
  const JacobiEnd p1 = pt.peer[v][(stem_slot + 1) % 3];
  const JacobiEnd p2 = pt.peer[v][(stem_slot + 2) % 3];

  JacobiDiagram out;
  out.num_circles = d.num_circles;

  // Vertex renumbering: drop v and leg, append two fresh legs a, b.
  std::vector<std::size_t> remap(d.valences.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t w = 0; w < d.valences.size(); ++w) {
    if (w == v || w == leg) continue;
    remap[w] = next++;
  }
  const std::size_t leg_a = next++;
  const std::size_t leg_b = next++;
  out.valences.assign(next, 1);
  for (std::size_t w = 0; w < d.valences.size(); ++w)
    if (remap[w] != SIZE_MAX) out.valences[remap[w]] = d.valences[w];

  out.circle_legs.assign(d.num_circles, {});
  for (std::size_t c = 0; c < d.num_circles; ++c) {
    for (auto l : d.circle_legs[c]) {
      if (l == leg) {
        if (!swapped) {
          out.circle_legs[c].push_back(leg_a);
          out.circle_legs[c].push_back(leg_b);
        } else {
          out.circle_legs[c].push_back(leg_b);
          out.circle_legs[c].push_back(leg_a);
        }
      } else {
        out.circle_legs[c].push_back(remap[l]);
      }
    }
  }

  auto map_end = [&](const JacobiEnd& e) -> JacobiEnd {
    return JacobiEnd{remap[e.vertex], e.slot};
  };

  // The double resolution of a loop at v: p1 and p2 are v's own slots.
  const bool p1_internal = p1.vertex == v;
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& [a, b] = d.edges[e];
    const bool touches = a.vertex == v || b.vertex == v || a.vertex == leg || b.vertex == leg;
    if (!touches) out.edges.emplace_back(map_end(a), map_end(b));
  }
  if (p1_internal) {
    out.edges.emplace_back(JacobiEnd{leg_a, 0}, JacobiEnd{leg_b, 0});
  } else {
    out.edges.emplace_back(JacobiEnd{leg_a, 0}, map_end(p1));
    out.edges.emplace_back(JacobiEnd{leg_b, 0}, map_end(p2));
  }
  return out;
}

/// RREF of an exact matrix; returns the reduced nonzero rows.
std::vector<std::vector<Rat>> rref_rows(const RatMatrix& m) {
  std::vector<std::vector<Rat>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rat> row(m.cols());
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row[c] = m(r, c);
      if (row[c] != 0) nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  std::vector<std::vector<Rat>> reduced;
  for (auto row : rows) {
    for (const auto& pivot_row : reduced) {
      std::size_t p = 0;
      while (p < pivot_row.size() && pivot_row[p] == 0) ++p;
      if (p < row.size() && row[p] != 0) {
        const Rat f = row[p] / pivot_row[p];
        for (std::size_t c = p; c < row.size(); ++c) row[c] -= f * pivot_row[c];
      }
    }
    bool nonzero = false;
    for (const auto& x : row)
      if (x != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) reduced.push_back(std::move(row));
  }
  // Back substitution for a clean reduced form.
  for (std::size_t i = reduced.size(); i-- > 0;) {
    std::size_t p = 0;
    while (p < reduced[i].size() && reduced[i][p] == 0) ++p;
    const Rat inv = Rat(1) / reduced[i][p];
    for (auto& x : reduced[i]) x *= inv;
    for (std::size_t j = 0; j < i; ++j) {
      if (reduced[j][p] == 0) continue;
      const Rat f = reduced[j][p];
      for (std::size_t c = 0; c < reduced[j].size(); ++c)
        reduced[j][c] -= f * reduced[i][c];
    }
  }
  return reduced;
}

}  // namespace

JacobiSpace::JacobiSpace(std::size_t degree, std::size_t circles)
    : degree_(degree), circles_(circles), basis_(enumerate_jacobi(degree, circles)) {
  for (const auto& d : basis_) basis_keys_.push_back(canonical_form(d).first);

  std::vector<std::vector<Rat>> rows;
  auto add_row = [&](std::vector<Rat> row) {
    for (const auto& x : row)
      if (x != 0) {
        rows.push_back(std::move(row));
        return;
      }
  };

  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& d = basis_[i];
    for (std::size_t v = 0; v < d.valences.size(); ++v) {
      if (d.valences[v] != 3) continue;

      // Antisymmetry: reversed vertex = minus the diagram.
      {
        const auto cls = classify(reverse_vertex(d, v));
        std::vector<Rat> row(basis_.size(), Rat(0));
        row[i] += 1;
        if (cls.sign != 0) row[cls.index] += cls.sign;
        add_row(std::move(row));
      }

      // STU on every stem edge from this vertex to a leg.
      const PeerTable pt(d);
      for (std::size_t s = 0; s < 3; ++s) {
        const JacobiEnd peer = pt.peer[v][s];
        if (d.valences[peer.vertex] != 1) continue;
        const auto t_cls = classify(stu_resolution(d, v, s, peer.vertex, false));
        const auto u_cls = classify(stu_resolution(d, v, s, peer.vertex, true));
        std::vector<Rat> row(basis_.size(), Rat(0));
        if (t_cls.sign != 0) row[t_cls.index] += t_cls.sign;
        if (u_cls.sign != 0) row[u_cls.index] -= u_cls.sign;
        row[i] -= 1;  // S = T - U
        add_row(std::move(row));
      }

      // IHX on internal edges with a clean fragment neighborhood.
      for (std::size_t s = 0; s < 3; ++s) {
        const JacobiEnd other = pt.peer[v][s];
        if (d.valences[other.vertex] != 3 || other.vertex == v) continue;
        if (other.vertex < v) continue;  // one instance per edge
        const std::size_t u = v, w = other.vertex;
        const JacobiEnd ports[4] = {
            pt.peer[u][(s + 1) % 3], pt.peer[u][(s + 2) % 3],
            pt.peer[w][(other.slot + 1) % 3], pt.peer[w][(other.slot + 2) % 3]};
        bool clean = true;
        for (const auto& p : ports)
          if (p.vertex == u || p.vertex == w) clean = false;
        if (!clean) continue;

        auto rewire = [&](const JacobiEnd& at_u2, const JacobiEnd& at_w1,
                          const JacobiEnd& at_w2) {
          JacobiDiagram out = d;
          out.edges.clear();
          // Keep edges not incident to u or w; re-add the fragment.
          for (const auto& [a, b] : d.edges) {
            if (a.vertex == u || b.vertex == u || a.vertex == w || b.vertex == w) continue;
            out.edges.emplace_back(a, b);
          }
          out.edges.emplace_back(JacobiEnd{u, s}, JacobiEnd{w, other.slot});
          out.edges.emplace_back(JacobiEnd{u, (s + 1) % 3}, ports[0]);
          out.edges.emplace_back(JacobiEnd{u, (s + 2) % 3}, at_u2);
          out.edges.emplace_back(JacobiEnd{w, (other.slot + 1) % 3}, at_w1);
          out.edges.emplace_back(JacobiEnd{w, (other.slot + 2) % 3}, at_w2);
          return out;
        };
        // I = (a,b | c,d), H = (a,c | b,d), X = (a,d | c,b); I - H + X = 0.
        const auto h_cls = classify(rewire(ports[2], ports[1], ports[3]));
        const auto x_cls = classify(rewire(ports[3], ports[2], ports[1]));
        std::vector<Rat> row(basis_.size(), Rat(0));
        row[i] += 1;
        if (h_cls.sign != 0) row[h_cls.index] -= h_cls.sign;
        if (x_cls.sign != 0) row[x_cls.index] += x_cls.sign;
        add_row(std::move(row));
      }
    }

    // Diagrams killed outright by an odd automorphism.
    if (canonical_form(d).second == 0) {
      std::vector<Rat> row(basis_.size(), Rat(0));
      row[i] = 1;
      add_row(std::move(row));
    }
  }

  relations_ = RatMatrix(rows.size(), basis_.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < basis_.size(); ++c) relations_(r, c) = rows[r][c];

  // Framing relations: kill diagrams containing an isolated chord.
  auto framed_rows = rows;
  for (auto idx : isolated_chord_indices()) {
    std::vector<Rat> row(basis_.size(), Rat(0));
    row[idx] = 1;
    framed_rows.push_back(std::move(row));
  }
  framed_relations_ = RatMatrix(framed_rows.size(), basis_.size());
  for (std::size_t r = 0; r < framed_rows.size(); ++r)
    for (std::size_t c = 0; c < basis_.size(); ++c) framed_relations_(r, c) = framed_rows[r][c];
}

DiagramClass JacobiSpace::classify(const JacobiDiagram& d) const {
  const auto [key, sign] = canonical_form(d);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_keys_[i] != key) continue;
    if (sign == 0) return {i, 0};
    const int base_sign = canonical_form(basis_[i]).second;
    if (base_sign == 0) return {i, 0};
    return {i, sign * base_sign};
  }
  throw std::invalid_argument("JacobiSpace::classify: diagram outside the enumerated basis");
}

std::size_t JacobiSpace::quotient_dimension() const {
  return basis_.size() - relations_.rank();
}

std::size_t JacobiSpace::reduced_dimension() const {
  return basis_.size() - framed_relations_.rank();
}

std::vector<std::size_t> JacobiSpace::isolated_chord_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& d = basis_[i];
    const PeerTable pt(d);
    bool isolated = false;
    for (std::size_t c = 0; c < d.num_circles && !isolated; ++c) {
      const auto& legs = d.circle_legs[c];
      for (std::size_t p = 0; p < legs.size() && !isolated; ++p) {
        const std::size_t l1 = legs[p], l2 = legs[(p + 1) % legs.size()];
        if (l1 == l2) continue;
        const JacobiEnd peer = pt.peer[l1][0];
        if (peer.vertex == l2) isolated = true;
      }
    }
    // A circle with exactly two legs joined by a chord is isolated either way.
    if (isolated) out.push_back(i);
  }
  return out;
}

std::vector<Rat> JacobiSpace::class_vector(const JacobiDiagram& d, bool reduced) const {
  const auto cls = classify(d);
  std::vector<Rat> vec(basis_.size(), Rat(0));
  if (cls.sign == 0) return vec;
  vec[cls.index] = cls.sign;

  const auto rows = rref_rows(reduced ? framed_relations_ : relations_);
  for (const auto& row : rows) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size() || vec[p] == 0) continue;
    const Rat f = vec[p] / row[p];
    for (std::size_t c = 0; c < row.size(); ++c) vec[c] -= f * row[c];
  }
  return vec;
}

JacobiDiagram make_cross_chords() {
  JacobiDiagram d;
  d.num_circles = 1;
  d.circle_legs = {{0, 1, 2, 3}};
  d.valences = {1, 1, 1, 1};
  d.edges = {{{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}};
  return d;
}

JacobiDiagram make_parallel_chords() {
  JacobiDiagram d;
  d.num_circles = 1;
  d.circle_legs = {{0, 1, 2, 3}};
  d.valences = {1, 1, 1, 1};
  d.edges = {{{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}};
  return d;
}

JacobiDiagram make_tripod() {
  JacobiDiagram d;
  d.num_circles = 1;
  d.circle_legs = {{0, 1, 2}};
  d.valences = {1, 1, 1, 3};
  d.edges = {{{3, 0}, {0, 0}}, {{3, 1}, {1, 0}}, {{3, 2}, {2, 0}}};
  return d;
}

JacobiDiagram make_double_edge_diagram() {
  JacobiDiagram d;
  d.num_circles = 1;
  d.circle_legs = {{0, 1}};
  d.valences = {1, 1, 3, 3};
  d.edges = {{{2, 0}, {0, 0}}, {{2, 1}, {3, 1}}, {{2, 2}, {3, 2}}, {{3, 0}, {1, 0}}};
  return d;
}

JacobiDiagram make_tadpole() {
  JacobiDiagram d;
  d.num_circles = 1;
  d.circle_legs = {{0}};
  d.valences = {1, 3};
  d.edges = {{{1, 0}, {0, 0}}, {{1, 1}, {1, 2}}};
  return d;
}

JacobiDiagram make_single_chord(std::size_t circles) {
  JacobiDiagram d;
  d.num_circles = circles;
  d.valences = {1, 1};
  if (circles == 1) {
    d.circle_legs = {{0, 1}};
  } else if (circles == 2) {
    d.circle_legs = {{0}, {1}};
  } else {
    throw std::invalid_argument("make_single_chord: one or two circles");
  }
  d.edges = {{{0, 0}, {1, 0}}};
  return d;
}

}  // namespace feynkit
