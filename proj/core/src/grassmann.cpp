#include "feynkit/grassmann.hpp"

#include <bit>
#include <stdexcept>

namespace feynkit {

namespace {

int sign_of_merge(std::uint32_t left, std::uint32_t right) {
  // Parity of moving each right generator past the left generators above it.
  int inversions = 0;
  for (std::uint32_t t = right; t;) {
    const int bit = std::countr_zero(t);
    t &= t - 1;
    inversions += std::popcount(left >> (bit + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

GrassmannPolynomial GrassmannPolynomial::scalar(std::size_t l, const Rat& value) {
  GrassmannPolynomial p(l);
  p.add_term(0, value);
  return p;
}

GrassmannPolynomial GrassmannPolynomial::c(std::size_t l, std::size_t i) {
  if (i < 1 || i > l) throw std::out_of_range("GrassmannPolynomial::c: index out of range");
  GrassmannPolynomial p(l);
  p.add_term(std::uint32_t(1) << (i - 1), Rat(1));
  return p;
}

GrassmannPolynomial GrassmannPolynomial::cbar(std::size_t l, std::size_t i) {
  if (i < 1 || i > l) throw std::out_of_range("GrassmannPolynomial::cbar: index out of range");
  GrassmannPolynomial p(l);
  p.add_term(std::uint32_t(1) << (l + i - 1), Rat(1));
  return p;
}

GrassmannPolynomial GrassmannPolynomial::ghost_quadratic(const RatMatrix& lambda) {
  if (lambda.rows() != lambda.cols())
    throw std::invalid_argument("ghost_quadratic: matrix must be square");
  const std::size_t l = lambda.rows();
  GrassmannPolynomial p(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (lambda(i, j) == 0) continue;
      // cbar^{i+1} c^{j+1} sorted to ascending ids (j, l+i) picks up one swap.
      const std::uint32_t mask = (std::uint32_t(1) << j) | (std::uint32_t(1) << (l + i));
      p.add_term(mask, -lambda(i, j));
    }
  return p;
}

Rat GrassmannPolynomial::coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GrassmannPolynomial::add_term(std::uint32_t mask, const Rat& coeff) {
  if (coeff == 0) return;
  if (mask >> generators()) throw std::out_of_range("GrassmannPolynomial: generator out of range");
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GrassmannPolynomial GrassmannPolynomial::operator+(const GrassmannPolynomial& o) const {
  if (l_ != o.l_) throw std::invalid_argument("GrassmannPolynomial: generator set mismatch");
  GrassmannPolynomial out(*this);
  for (const auto& [mask, coeff] : o.terms_) out.add_term(mask, coeff);
  return out;
}

GrassmannPolynomial GrassmannPolynomial::operator-(const GrassmannPolynomial& o) const {
  if (l_ != o.l_) throw std::invalid_argument("GrassmannPolynomial: generator set mismatch");
  GrassmannPolynomial out(*this);
  for (const auto& [mask, coeff] : o.terms_) out.add_term(mask, -coeff);
  return out;
}

GrassmannPolynomial GrassmannPolynomial::operator*(const GrassmannPolynomial& o) const {
  if (l_ != o.l_) throw std::invalid_argument("GrassmannPolynomial: generator set mismatch");
  GrassmannPolynomial out(l_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;  // nilpotency
      Rat prod = ca * cb;
      if (sign_of_merge(ma, mb) < 0) prod = -prod;
      out.add_term(ma | mb, prod);
    }
  return out;
}

GrassmannPolynomial GrassmannPolynomial::operator*(const Rat& s) const {
  GrassmannPolynomial out(l_);
  if (s == 0) return out;
  for (const auto& [mask, coeff] : terms_) out.add_term(mask, coeff * s);
  return out;
}

GrassmannPolynomial grassmann_exp(const GrassmannPolynomial& p) {
  if (p.coefficient(0) != 0)
    throw std::invalid_argument("grassmann_exp: constant term present");
  for (const auto& [mask, coeff] : p.terms())
    if (std::popcount(mask) % 2 != 0)
      throw std::invalid_argument("grassmann_exp: odd-degree term present");

  GrassmannPolynomial result = GrassmannPolynomial::scalar(p.pairs(), Rat(1));
  GrassmannPolynomial power = GrassmannPolynomial::scalar(p.pairs(), Rat(1));
  Rat kfact(1);
  for (std::size_t k = 1; k <= p.pairs() + 1; ++k) {
    power = power * p;
    if (power.is_zero()) break;
    kfact *= Rat(k);
    result = result + power * (Rat(1) / kfact);
  }
  return result;
}

GrassmannPolynomial berezin_integrate_one(const GrassmannPolynomial& p, std::size_t gen_id) {
  if (gen_id >= p.generators()) throw std::out_of_range("berezin_integrate_one: bad generator");
  GrassmannPolynomial out(p.pairs());
  const std::uint32_t bit = std::uint32_t(1) << gen_id;
  for (const auto& [mask, coeff] : p.terms()) {
    if (!(mask & bit)) continue;  // int 1 dg = 0
    const int after = std::popcount(mask >> (gen_id + 1));
    Rat c = coeff;
    if (after % 2 != 0) c = -c;
    out.add_term(mask & ~bit, c);
  }
  return out;
}

Rat berezin_integral(const GrassmannPolynomial& p) {
  GrassmannPolynomial cur(p);
  // dc^l dcbar^l .. dc^1 dcbar^1, innermost first; this iteration order is
  // the one pinned by the det identity.
  for (std::size_t i = p.pairs(); i >= 1; --i) {
    cur = berezin_integrate_one(cur, i - 1);              // c^i
    cur = berezin_integrate_one(cur, p.pairs() + i - 1);  // cbar^i
  }
  return cur.coefficient(0);
}

}  // namespace feynkit
