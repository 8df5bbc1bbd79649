#include "feynkit/perturb.hpp"

#include "feynkit/wick.hpp"

#include <algorithm>
#include <stdexcept>

namespace feynkit {

namespace {

using Poly = std::map<std::vector<unsigned>, Rat>;

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly out;
  for (const auto& [ea, ca] : p)
    for (const auto& [eb, cb] : q) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

/// Gaussian moment of a monomial, with the pairing sub-results shared
/// across all monomials of one series run.
struct MomentCache {
  explicit MomentCache(const SymmetricForm& a) : eval(a) {}
  MomentEvaluator eval;

  Rat moment_of(const std::vector<unsigned>& exponent) {
    MomentRequest req;
    for (std::size_t i = 0; i < exponent.size(); ++i)
      for (unsigned c = 0; c < exponent[i]; ++c) req.indices.push_back(i);
    return eval.moment(req);
  }

  Rat moment_of_poly(const Poly& p) {
    Rat total(0);
    for (const auto& [e, c] : p)
      if (c != 0) total += c * moment_of(e);
    return total;
  }
};

void check_dims(const SymmetricForm& a, const Potential& u) {
  if (a.dim() != u.dim()) throw std::invalid_argument("perturb: dimension mismatch of A and U");
}

}  // namespace

Potential::Potential(std::size_t dim, std::map<std::size_t, Tensor> terms) : dim_(dim) {
  for (auto& [k, t] : terms) {
    if (k < 3) throw std::invalid_argument("Potential: valence must be >= 3");
    if (t.rank() != k || t.dim() != dim)
      throw std::invalid_argument("Potential: tensor shape mismatch");
    terms_.emplace(k, t.symmetrized());
  }
}

Potential Potential::from_monomials(std::size_t dim,
                                    const std::map<std::vector<unsigned>, Rat>& monomials) {
  std::map<std::size_t, Tensor> raw;
  for (const auto& [exponent, coeff] : monomials) {
    if (exponent.size() != dim) throw std::invalid_argument("Potential: exponent length mismatch");
    std::size_t degree = 0;
    for (auto e : exponent) degree += e;
    if (degree < 3) throw std::invalid_argument("Potential: monomial degree must be >= 3");
    auto [it, fresh] = raw.emplace(degree, Tensor(dim, degree));
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < dim; ++i)
      for (unsigned c = 0; c < exponent[i]; ++c) word.push_back(i);
    it->second.at(word) += coeff;
  }
  std::map<std::size_t, Tensor> terms;
  for (auto& [k, t] : raw) terms.emplace(k, t.symmetrized() * factorial(k));
  return Potential(dim, std::move(terms));
}

std::vector<std::size_t> Potential::valences() const {
  std::vector<std::size_t> out;
  for (const auto& [k, t] : terms_) out.push_back(k);
  return out;
}

std::map<std::vector<unsigned>, Rat> Potential::as_polynomial() const {
  Poly poly;
  std::vector<std::size_t> word;
  for (const auto& [k, t] : terms_) {
    const Rat inv_kfact = Rat(1) / factorial(k);
    for (std::size_t f = 0; f < t.size(); ++f) {
      if (t.flat_at(f) == 0) continue;
      t.unflat(f, word);
      std::vector<unsigned> e(dim_, 0);
      for (auto i : word) e[i] += 1;
      poly[e] += t.flat_at(f) * inv_kfact;
    }
  }
  return poly;
}

WeightSystem weight_system_of(const SymmetricForm& a, const Potential& u) {
  check_dims(a, u);
  Tensor prop(a.dim(), 2);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      prop.flat_at(i * a.dim() + j) = a.inverse()(i, j);
  return WeightSystem(std::move(prop), u.terms());
}

PowerSeries partition_series_direct(const SymmetricForm& a, const Potential& u,
                                    std::size_t order) {
  check_dims(a, u);
  MomentCache cache(a);
  const Poly u_poly = u.as_polynomial();

  PowerSeries out(order);
  out[0] = 1;
  Poly power;
  power[std::vector<unsigned>(u.dim(), 0)] = Rat(1);
  Rat nfact(1);
  for (std::size_t n = 1; n <= order; ++n) {
    power = poly_mul(power, u_poly);
    nfact *= Rat(n);
    out[n] = cache.moment_of_poly(power) / nfact;
  }
  return out;
}

namespace {

/// Shared driver: sums W/|Aut| per order over contraction classes, with an
/// optional filter, for m legs contracted with basis covectors.
PowerSeries graph_sum(const SymmetricForm& a, const Potential& u,
                      const std::vector<std::size_t>& leg_indices, std::size_t order,
                      const std::function<bool(const FeynmanGraph&)>& keep) {
  check_dims(a, u);
  const WeightSystem w = weight_system_of(a, u);
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Rat coeff(0);
    for (const auto& cls : enumerate_contraction_graphs(u.valences(), n, leg_indices.size())) {
      if (!keep(cls.graph)) continue;
      const Rat weight = graph_weight_basis_legs(cls.graph, w, leg_indices);
      if (weight == 0) continue;
      coeff += weight / Rat(automorphism_count(cls.graph));
    }
    out[n] = coeff;
  }
  return out;
}

}  // namespace

PowerSeries partition_series_graphs(const SymmetricForm& a, const Potential& u,
                                    std::size_t order) {
  return graph_sum(a, u, {}, order, [](const FeynmanGraph&) { return true; });
}

PowerSeries correlator_series(const SymmetricForm& a, const Potential& u,
                              const std::vector<std::size_t>& leg_indices, std::size_t order) {
  return graph_sum(a, u, leg_indices, order,
                   [](const FeynmanGraph& g) { return !g.is_vacuum(); });
}

PowerSeries correlator_series_direct(const SymmetricForm& a, const Potential& u,
                                     const std::vector<std::size_t>& leg_indices,
                                     std::size_t order) {
  check_dims(a, u);
  for (auto i : leg_indices)
    if (i >= a.dim()) throw std::out_of_range("correlator_series_direct: leg index out of range");

  MomentCache cache(a);
  const Poly u_poly = u.as_polynomial();
  Poly legs_poly;
  {
    std::vector<unsigned> e(u.dim(), 0);
    for (auto i : leg_indices) e[i] += 1;
    legs_poly[e] = Rat(1);
  }

  PowerSeries numerator(order);
  Poly power = legs_poly;
  numerator[0] = cache.moment_of_poly(power);
  Rat nfact(1);
  for (std::size_t n = 1; n <= order; ++n) {
    power = poly_mul(power, u_poly);
    nfact *= Rat(n);
    numerator[n] = cache.moment_of_poly(power) / nfact;
  }
  return numerator / partition_series_direct(a, u, order);
}

PowerSeries free_energy_series(const SymmetricForm& a, const Potential& u, std::size_t order) {
  return partition_series_graphs(a, u, order).log();
}

PowerSeries free_energy_series_connected(const SymmetricForm& a, const Potential& u,
                                         std::size_t order) {
  // The empty graph (order 0) is the unit of the product, not a connected graph.
  return graph_sum(a, u, {}, order, [](const FeynmanGraph& g) {
    return g.vertex_count() > 0 && g.is_connected();
  });
}

std::vector<GraphTerm> graph_breakdown(const SymmetricForm& a, const Potential& u,
                                       const std::vector<std::size_t>& leg_indices,
                                       std::size_t order) {
  check_dims(a, u);
  const WeightSystem w = weight_system_of(a, u);
  std::vector<GraphTerm> out;
  for (std::size_t n = 0; n <= order; ++n) {
    for (const auto& cls : enumerate_contraction_graphs(u.valences(), n, leg_indices.size())) {
      GraphTerm term{n,
                     cls.graph,
                     cls.multiplicity,
                     automorphism_count(cls.graph),
                     graph_weight_basis_legs(cls.graph, w, leg_indices),
                     Rat(0),
                     cls.graph.is_vacuum(),
                     cls.graph.is_connected()};
      term.contribution = term.weight / Rat(term.aut);
      out.push_back(std::move(term));
    }
  }
  return out;
}

}  // namespace feynkit
