#pragma once

#include "feynkit/matrix.hpp"
#include "feynkit/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>

namespace feynkit {

/// Element of the Grassmann algebra over 2l anticommuting generators
/// c^1..c^l, cbar^1..cbar^l. Generator ids: c^i -> i-1, cbar^i -> l+i-1.
/// Terms are stored against the bitmask of their generator subset, with
/// the coefficient normalized to the ascending-id monomial order; squares
/// of generators vanish by construction.
class GrassmannPolynomial {
 public:
  explicit GrassmannPolynomial(std::size_t l) : l_(l) {
    if (l > 16) throw std::invalid_argument("GrassmannPolynomial: at most 16 ghost pairs");
  }

  static GrassmannPolynomial scalar(std::size_t l, const Rat& value);
  /// The generator c^i (1-based i).
  static GrassmannPolynomial c(std::size_t l, std::size_t i);
  /// The generator cbar^i (1-based i).
  static GrassmannPolynomial cbar(std::size_t l, std::size_t i);
  /// sum_{i,j} Lambda_{ij} cbar^i c^j for an l x l matrix.
  static GrassmannPolynomial ghost_quadratic(const RatMatrix& lambda);

  std::size_t pairs() const { return l_; }
  std::size_t generators() const { return 2 * l_; }
  const std::map<std::uint32_t, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the monomial with the given generator set, in
  /// ascending-id order.
  Rat coefficient(std::uint32_t mask) const;

  GrassmannPolynomial operator+(const GrassmannPolynomial& o) const;
  GrassmannPolynomial operator-(const GrassmannPolynomial& o) const;
  GrassmannPolynomial operator*(const GrassmannPolynomial& o) const;
  GrassmannPolynomial operator*(const Rat& s) const;
  bool operator==(const GrassmannPolynomial& o) const = default;

  void add_term(std::uint32_t mask, const Rat& coeff);

 private:
  std::size_t l_;
  std::map<std::uint32_t, Rat> terms_;
};

/// exp(p) = sum p^k / k! for an even-degree polynomial with no constant
/// term; terminates by nilpotency. Throws std::invalid_argument otherwise.
GrassmannPolynomial grassmann_exp(const GrassmannPolynomial& p);

/// Berezin integral over all generators, int p dc dcbar, with the
/// iterated single-variable integrations ordered so that
/// int e^{<cbar, Lambda c>} dc dcbar = det Lambda. Equivalently: the
/// coefficient of the monomial cbar^1 c^1 cbar^2 c^2 .. cbar^l c^l.
Rat berezin_integral(const GrassmannPolynomial& p);

/// Single Berezin integration over one generator id (0-based), acting
/// from the right: int (X g) dg = X.
GrassmannPolynomial berezin_integrate_one(const GrassmannPolynomial& p, std::size_t gen_id);

}  // namespace feynkit
