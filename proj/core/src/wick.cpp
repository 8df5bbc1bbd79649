#include "feynkit/wick.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace feynkit {

namespace {

void pairings_rec(std::vector<std::size_t>& unused, Pairing& current,
                  std::vector<Pairing>& out) {
  if (unused.empty()) {
    out.push_back(current);
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
    pairings_rec(rest, current, out);
    current.pop_back();
  }
}

void check_indices(const SymmetricForm& a, const MomentRequest& req) {
  for (auto i : req.indices)
    if (i >= a.dim()) throw std::out_of_range("moment: coordinate index out of range");
}

/// Polynomial in b over d variables, exponent vector -> coefficient.
using BPoly = std::map<std::vector<unsigned>, Rat>;

void add_term(BPoly& p, std::vector<unsigned> exp, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = p.find(exp);
  if (it == p.end())
    p.emplace(std::move(exp), coeff);
  else
    it->second += coeff;
}

}  // namespace

std::vector<Pairing> enumerate_pairings(std::size_t m) {
  if (m % 2 != 0) return {};
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  std::vector<Pairing> out;
  Pairing current;
  pairings_rec(all, current, out);
  return out;
}

Rat moment(const SymmetricForm& a, const MomentRequest& req) {
  MomentEvaluator eval(a);
  return eval.moment(req);
}

Rat MomentEvaluator::moment(const MomentRequest& req) {
  check_indices(*a_, req);
  if (req.indices.size() % 2 != 0) return Rat(0);
  auto sorted = req.indices;
  std::sort(sorted.begin(), sorted.end());
  return rec(std::move(sorted));
}

Rat MomentEvaluator::rec(std::vector<std::size_t> sorted) {
  if (sorted.empty()) return Rat(1);
  auto it = cache_.find(sorted);
  if (it != cache_.end()) return it->second;

  // Fixed-first-element pairing recursion: the first index pairs with each
  // later position in turn. The moment depends only on the index multiset,
  // which keeps the sub-results shareable.
  Rat total(0);
  const std::size_t first = sorted.front();
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    const Rat& prop = a_->propagator(first, sorted[j]);
    if (prop == 0) continue;
    std::vector<std::size_t> rest;
    rest.reserve(sorted.size() - 2);
    for (std::size_t k = 1; k < sorted.size(); ++k)
      if (k != j) rest.push_back(sorted[k]);
    total += prop * rec(std::move(rest));
  }
  cache_.emplace(std::move(sorted), total);
  return total;
}

Rat moment_via_recursion(const SymmetricForm& a, const MomentRequest& req) {
  check_indices(a, req);
  const std::size_t d = a.dim();

  BPoly poly;
  poly[std::vector<unsigned>(d, 0)] = Rat(1);

  // Apply the operators right to left: the i_m factor acts on 1 first.
  for (std::size_t k = req.indices.size(); k-- > 0;) {
    const std::size_t iv = req.indices[k];
    BPoly next;
    for (const auto& [exp, coeff] : poly) {
      // d/d b_{iv}
      if (exp[iv] > 0) {
        auto de = exp;
        de[iv] -= 1;
        add_term(next, std::move(de), coeff * exp[iv]);
      }
      // + sum_i A^{iv i} b_i
      for (std::size_t i = 0; i < d; ++i) {
        const Rat& aij = a.propagator(iv, i);
        if (aij == 0) continue;
        auto me = exp;
        me[i] += 1;
        add_term(next, std::move(me), coeff * aij);
      }
    }
    poly = std::move(next);
  }

  const auto it = poly.find(std::vector<unsigned>(d, 0));
  return it == poly.end() ? Rat(0) : it->second;
}

IntegralEstimate moment_oracle_numeric(const SymmetricForm& a, const MomentRequest& req,
                                       const McConfig& cfg) {
  check_indices(a, req);
  const std::size_t d = a.dim();
  if (d > 16) throw std::invalid_argument("moment_oracle_numeric: dimension guard (d <= 16)");

  // Cholesky factor of the covariance A^{-1}, in floating point.
  std::vector<double> cov(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) cov[i * d + j] = to_double(a.inverse()(i, j));
  std::vector<double> chol(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = cov[i * d + j];
      for (std::size_t k = 0; k < j; ++k) s -= chol[i * d + k] * chol[j * d + k];
      if (i == j) {
        if (s <= 0.0) throw std::domain_error("moment_oracle_numeric: covariance not PD");
        chol[i * d + i] = std::sqrt(s);
      } else {
        chol[i * d + j] = s / chol[j * d + j];
      }
    }
  }

  const auto indices = req.indices;
  return run_monte_carlo(cfg, [&, d](Rng& rng) {
    double z[16], x[16];
    for (std::size_t i = 0; i < d; ++i) z[i] = rng.gaussian();
    for (std::size_t i = 0; i < d; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k <= i; ++k) s += chol[i * d + k] * z[k];
      x[i] = s;
    }
    double prod = 1.0;
    for (auto idx : indices) prod *= x[idx];
    return prod;
  });
}

}  // namespace feynkit
