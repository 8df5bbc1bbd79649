#include "feynkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace feynkit {

namespace {

using VertexPair = std::pair<std::size_t, std::size_t>;

VertexPair ordered(std::size_t a, std::size_t b) { return a <= b ? VertexPair{a, b} : VertexPair{b, a}; }

std::string serialize_edges(const std::vector<VertexPair>& edges) {
  std::string s;
  s.reserve(edges.size() * 6);
  for (const auto& [a, b] : edges) {
    s += std::to_string(a);
    s += ',';
    s += std::to_string(b);
    s += ';';
  }
  return s;
}

/// Calls `visit` for every product of within-block permutations of the
/// internal vertex labels, where blocks group vertices of equal valence.
void for_each_valence_permutation(const std::vector<std::size_t>& valences,
                                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = valences.size();
  std::vector<std::vector<std::size_t>> blocks;
  {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return valences[a] < valences[b]; });
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && valences[order[j]] == valences[order[i]]) ++j;
      blocks.emplace_back(order.begin() + i, order.begin() + j);
      i = j;
    }
  }

  std::vector<std::size_t> perm(n);
  std::vector<std::vector<std::size_t>> images;
  for (auto& b : blocks) images.push_back(b);

  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      visit(perm);
      return;
    }
    auto img = images[bi];
    std::sort(img.begin(), img.end());
    do {
      for (std::size_t k = 0; k < blocks[bi].size(); ++k) perm[blocks[bi][k]] = img[k];
      rec(bi + 1);
    } while (std::next_permutation(img.begin(), img.end()));
  };
  rec(0);
}

}  // namespace

FeynmanGraph::FeynmanGraph(std::size_t legs, std::vector<std::size_t> internal_valences,
                           std::vector<std::pair<HalfEdge, HalfEdge>> edges)
    : legs_(legs), valences_(std::move(internal_valences)), edges_(std::move(edges)) {
  for (auto v : valences_)
    if (v < 3) throw std::invalid_argument("FeynmanGraph: internal valence must be >= 3");

  // Every half-edge slot must be used exactly once.
  std::vector<std::vector<int>> used(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) used[v].assign(valence(v), 0);
  auto mark = [&](const HalfEdge& h) {
    if (h.vertex >= vertex_count() || h.slot >= valence(h.vertex))
      throw std::invalid_argument("FeynmanGraph: half-edge out of range");
    if (used[h.vertex][h.slot]++)
      throw std::invalid_argument("FeynmanGraph: half-edge slot used twice");
  };
  for (const auto& [h1, h2] : edges_) {
    mark(h1);
    mark(h2);
  }
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (auto u : used[v])
      if (!u) throw std::invalid_argument("FeynmanGraph: unused half-edge slot");
}

std::vector<VertexPair> FeynmanGraph::collapsed_edges() const {
  std::vector<VertexPair> out;
  out.reserve(edges_.size());
  for (const auto& [h1, h2] : edges_) out.push_back(ordered(h1.vertex, h2.vertex));
  std::sort(out.begin(), out.end());
  return out;
}

std::string FeynmanGraph::canonical_key() const {
  // First renumber internal vertices into valence-sorted order so that
  // graphs built from different ordered valence assignments agree, then
  // minimize over the remaining same-valence relabelings.
  const std::size_t n = valences_.size();
  std::vector<std::size_t> rank_of(n);
  {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return valences_[a] < valences_[b]; });
    for (std::size_t r = 0; r < n; ++r) rank_of[order[r]] = r;
  }
  std::vector<VertexPair> base;
  base.reserve(edges_.size());
  for (const auto& [h1, h2] : edges_) {
    auto map = [&](std::size_t v) { return v < legs_ ? v : legs_ + rank_of[v - legs_]; };
    base.push_back(ordered(map(h1.vertex), map(h2.vertex)));
  }
  std::sort(base.begin(), base.end());
  auto sorted_val = valences_;
  std::sort(sorted_val.begin(), sorted_val.end());

  std::string best;
  bool first = true;
  for_each_valence_permutation(sorted_val, [&](const std::vector<std::size_t>& perm) {
    std::vector<VertexPair> relabeled;
    relabeled.reserve(base.size());
    auto map = [&](std::size_t v) { return v < legs_ ? v : legs_ + perm[v - legs_]; };
    for (const auto& [a, b] : base) relabeled.push_back(ordered(map(a), map(b)));
    std::sort(relabeled.begin(), relabeled.end());
    std::string key = serialize_edges(relabeled);
    if (first || key < best) {
      best = std::move(key);
      first = false;
    }
  });

  std::string head = "L" + std::to_string(legs_) + "|V";
  for (auto v : sorted_val) head += std::to_string(v) + ".";
  return head + "|" + best;
}

std::vector<std::vector<std::size_t>> FeynmanGraph::connected_components() const {
  const std::size_t n = vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [h1, h2] : edges_) parent[find(h1.vertex)] = find(h2.vertex);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool FeynmanGraph::is_vacuum() const {
  for (const auto& comp : connected_components()) {
    bool has_leg = false;
    for (auto v : comp)
      if (v < legs_) {
        has_leg = true;
        break;
      }
    if (!has_leg) return true;
  }
  return false;
}

bool FeynmanGraph::is_connected() const { return connected_components().size() <= 1; }

BigInt automorphism_count(const FeynmanGraph& g) {
  if (g.degree() > 12) throw std::invalid_argument("automorphism_count: size guard exceeded");

  const auto base = g.collapsed_edges();
  const std::size_t legs = g.legs();

  BigInt valid_perms = 0;
  for_each_valence_permutation(g.internal_valences(), [&](const std::vector<std::size_t>& perm) {
    std::vector<VertexPair> relabeled;
    relabeled.reserve(base.size());
    for (const auto& [a, b] : base)
      relabeled.push_back(ordered(a < legs ? a : legs + perm[a - legs],
                                  b < legs ? b : legs + perm[b - legs]));
    std::sort(relabeled.begin(), relabeled.end());
    if (relabeled == base) ++valid_perms;
  });

  // Per valid vertex permutation: parallel edges may be permuted among
  // themselves, and every self-loop may additionally be flipped.
  BigInt edge_factor = 1;
  for (std::size_t i = 0; i < base.size();) {
    std::size_t j = i;
    while (j < base.size() && base[j] == base[i]) ++j;
    const std::size_t mult = j - i;
    for (std::size_t k = 2; k <= mult; ++k) edge_factor *= k;
    if (base[i].first == base[i].second)
      for (std::size_t k = 0; k < mult; ++k) edge_factor *= 2;
    i = j;
  }
  return valid_perms * edge_factor;
}

namespace {

/// Visitor-style pairing enumeration over the fixed slot list.
void visit_pairings(std::vector<std::size_t>& unused,
                    std::vector<std::pair<std::size_t, std::size_t>>& current,
                    const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>& visit) {
  if (unused.empty()) {
    visit(current);
    return;
  }
  const std::size_t first = unused.front();
  for (std::size_t k = 1; k < unused.size(); ++k) {
    const std::size_t partner = unused[k];
    std::vector<std::size_t> rest;
    rest.reserve(unused.size() - 2);
    for (std::size_t j = 1; j < unused.size(); ++j)
      if (j != k) rest.push_back(unused[j]);
    current.emplace_back(first, partner);
    visit_pairings(rest, current, visit);
    current.pop_back();
  }
}

}  // namespace

std::vector<ContractionClass> enumerate_contraction_graphs(
    const std::vector<std::size_t>& potential_valences, std::size_t order, std::size_t legs) {
  std::vector<std::size_t> valences = potential_valences;
  std::sort(valences.begin(), valences.end());
  valences.erase(std::unique(valences.begin(), valences.end()), valences.end());
  for (auto k : valences)
    if (k < 3) throw std::invalid_argument("enumerate_contraction_graphs: valence must be >= 3");

  std::vector<ContractionClass> classes;
  std::map<std::string, std::size_t> canon_to_class;
  std::map<std::vector<VertexPair>, std::size_t> collapsed_memo;

  // Ordered valence assignments (k_1..k_n).
  std::vector<std::size_t> assignment(order, 0);
  std::function<void(std::size_t)> per_assignment = [&](std::size_t pos) {
    if (pos < order) {
      for (std::size_t vi = 0; vi < valences.size(); ++vi) {
        assignment[pos] = vi;
        per_assignment(pos + 1);
      }
      return;
    }

    std::vector<std::size_t> ks(order);
    for (std::size_t i = 0; i < order; ++i) ks[i] = valences[assignment[i]];
    std::size_t total = legs;
    for (auto k : ks) total += k;
    if (total % 2 != 0) return;
    if (total > 16) throw std::invalid_argument("enumerate_contraction_graphs: half-edge guard (<= 16)");

    // Slot table: index -> half-edge.
    std::vector<HalfEdge> slot(total);
    {
      std::size_t w = 0;
      for (std::size_t l = 0; l < legs; ++l) slot[w++] = HalfEdge{l, 0};
      for (std::size_t i = 0; i < order; ++i)
        for (std::size_t s = 0; s < ks[i]; ++s) slot[w++] = HalfEdge{legs + i, s};
    }

    std::vector<std::size_t> unused(total);
    std::iota(unused.begin(), unused.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> current;
    std::vector<VertexPair> collapsed(total / 2);

    visit_pairings(unused, current, [&](const auto& pairing) {
      for (std::size_t e = 0; e < pairing.size(); ++e)
        collapsed[e] = ordered(slot[pairing[e].first].vertex, slot[pairing[e].second].vertex);
      std::sort(collapsed.begin(), collapsed.end());

      auto memo_it = collapsed_memo.find(collapsed);
      std::size_t cls;
      if (memo_it != collapsed_memo.end()) {
        cls = memo_it->second;
      } else {
        std::vector<std::pair<HalfEdge, HalfEdge>> edges;
        edges.reserve(pairing.size());
        for (const auto& [p, q] : pairing) edges.emplace_back(slot[p], slot[q]);
        FeynmanGraph g(legs, ks, std::move(edges));
        const std::string key = g.canonical_key();
        auto canon_it = canon_to_class.find(key);
        if (canon_it != canon_to_class.end()) {
          cls = canon_it->second;
        } else {
          cls = classes.size();
          classes.push_back(ContractionClass{std::move(g), BigInt(0)});
          canon_to_class.emplace(key, cls);
        }
        collapsed_memo.emplace(collapsed, cls);
      }
      classes[cls].multiplicity += 1;
    });
  };
  per_assignment(0);
  return classes;
}

WeightSystem::WeightSystem(Tensor propagator, std::map<std::size_t, Tensor> vertex_tensors)
    : propagator_(propagator.symmetrized()) {
  if (propagator_.rank() != 2) throw std::invalid_argument("WeightSystem: propagator must be rank 2");
  for (auto& [k, t] : vertex_tensors) {
    if (t.rank() != k || t.dim() != propagator_.dim())
      throw std::invalid_argument("WeightSystem: vertex tensor shape mismatch");
    vertex_tensors_.emplace(k, t.symmetrized());
  }
}

const Tensor& WeightSystem::vertex_tensor(std::size_t k) const {
  auto it = vertex_tensors_.find(k);
  if (it == vertex_tensors_.end())
    throw std::invalid_argument("WeightSystem: missing vertex tensor for valence " +
                                std::to_string(k));
  return it->second;
}

Rat graph_weight(const FeynmanGraph& g, const WeightSystem& w,
                 const std::vector<Tensor>& leg_covectors) {
  if (leg_covectors.size() != g.legs())
    throw std::invalid_argument("graph_weight: need one covector per leg");
  for (const auto& f : leg_covectors)
    if (f.rank() != 1 || f.dim() != w.dim())
      throw std::invalid_argument("graph_weight: leg covectors must be rank 1 over dim(V)");

  // Tensor network: one node per vertex, contracted edge by edge through
  // the propagator. A node's open slots track which (vertex, slot) pairs
  // its tensor indices currently represent.
  struct Node {
    Tensor tensor;
    std::vector<HalfEdge> open;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> owner(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Node n;
    if (g.is_internal(v))
      n.tensor = w.vertex_tensor(g.valence(v));
    else
      n.tensor = leg_covectors[v];
    for (std::size_t s = 0; s < g.valence(v); ++s) n.open.push_back(HalfEdge{v, s});
    owner[v] = nodes.size();
    nodes.push_back(std::move(n));
  }

  auto slot_pos = [](const Node& n, const HalfEdge& h) {
    for (std::size_t i = 0; i < n.open.size(); ++i)
      if (n.open[i] == h) return i;
    throw std::logic_error("graph_weight: half-edge not open");
  };

  std::vector<std::pair<HalfEdge, HalfEdge>> remaining = g.edges();
  while (!remaining.empty()) {
    // Greedy: contract the edge minimizing the resulting open rank.
    std::size_t best = 0;
    std::size_t best_rank = SIZE_MAX;
    for (std::size_t e = 0; e < remaining.size(); ++e) {
      const std::size_t na = owner[remaining[e].first.vertex];
      const std::size_t nb = owner[remaining[e].second.vertex];
      const std::size_t r = na == nb ? nodes[na].open.size() - 2
                                     : nodes[na].open.size() + nodes[nb].open.size() - 2;
      if (r < best_rank) {
        best_rank = r;
        best = e;
      }
    }
    const auto [h1, h2] = remaining[best];
    remaining.erase(remaining.begin() + best);

    const std::size_t na = owner[h1.vertex];
    const std::size_t nb = owner[h2.vertex];
    Node& a = nodes[na];
    if (na == nb) {
      const std::size_t p1 = slot_pos(a, h1), p2 = slot_pos(a, h2);
      a.tensor = a.tensor.self_contract(p1, p2, w.propagator());
      std::vector<HalfEdge> open;
      for (std::size_t i = 0; i < a.open.size(); ++i)
        if (i != p1 && i != p2) open.push_back(a.open[i]);
      a.open = std::move(open);
    } else {
      Node& b = nodes[nb];
      const std::size_t p1 = slot_pos(a, h1), p2 = slot_pos(b, h2);
      Node merged;
      merged.tensor = a.tensor.contract_with(p1, b.tensor, p2, w.propagator());
      for (std::size_t i = 0; i < a.open.size(); ++i)
        if (i != p1) merged.open.push_back(a.open[i]);
      for (std::size_t i = 0; i < b.open.size(); ++i)
        if (i != p2) merged.open.push_back(b.open[i]);
      // Reuse slot na as the merged node, repoint everything owned by nb.
      const std::size_t dead = nb;
      nodes[na] = std::move(merged);
      for (auto& o : owner)
        if (o == dead) o = na;
    }
  }

  Rat result(1);
  std::vector<bool> seen(nodes.size(), false);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t n = owner[v];
    if (seen[n]) continue;
    seen[n] = true;
    if (nodes[n].tensor.rank() != 0) throw std::logic_error("graph_weight: dangling open slots");
    result *= nodes[n].tensor.flat_at(0);
  }
  return result;
}

Rat graph_weight_basis_legs(const FeynmanGraph& g, const WeightSystem& w,
                            const std::vector<std::size_t>& leg_indices) {
  if (leg_indices.size() != g.legs())
    throw std::invalid_argument("graph_weight_basis_legs: index count mismatch");
  std::vector<Tensor> covectors;
  covectors.reserve(leg_indices.size());
  for (auto idx : leg_indices) {
    Tensor e(w.dim(), 1);
    if (idx >= w.dim()) throw std::out_of_range("graph_weight_basis_legs: leg index out of range");
    e.flat_at(idx) = 1;
    covectors.push_back(std::move(e));
  }
  return graph_weight(g, w, covectors);
}

}  // namespace feynkit
