#pragma once

#include "feynkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace feynkit {

/// Truncated power series in hbar with exact rational coefficients,
/// indexed 0..order. All arithmetic truncates at the common order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Rat(0)) {}
  static PowerSeries constant(const Rat& c, std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  Rat& operator[](std::size_t k) { return coeffs_.at(k); }
  const Rat& operator[](std::size_t k) const { return coeffs_.at(k); }

  bool operator==(const PowerSeries& o) const = default;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  /// Quotient; the divisor must have a nonzero constant term.
  PowerSeries operator/(const PowerSeries& o) const;

  /// log of a series with constant term 1.
  PowerSeries log() const;
  /// exp of a series with constant term 0.
  PowerSeries exp() const;

  std::string str() const;

 private:
  std::vector<Rat> coeffs_;
};

}  // namespace feynkit
