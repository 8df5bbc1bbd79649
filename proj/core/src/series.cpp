#include "feynkit/series.hpp"

#include <stdexcept>

namespace feynkit {

namespace {

std::size_t common_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("PowerSeries: order mismatch");
  return a.order();
}

}  // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const std::size_t n = common_order(*this, o);
  PowerSeries out(n);
  for (std::size_t k = 0; k <= n; ++k) out[k] = coeffs_[k] + o[k];
  return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  const std::size_t n = common_order(*this, o);
  PowerSeries out(n);
  for (std::size_t k = 0; k <= n; ++k) out[k] = coeffs_[k] - o[k];
  return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const std::size_t n = common_order(*this, o);
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += coeffs_[i] * o[j];
  }
  return out;
}

PowerSeries PowerSeries::operator/(const PowerSeries& o) const {
  const std::size_t n = common_order(*this, o);
  if (o[0] == 0) throw std::domain_error("PowerSeries: division by series with zero constant term");
  PowerSeries q(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat acc = coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= o[j] * q[k - j];
    q[k] = acc / o[0];
  }
  return q;
}

PowerSeries PowerSeries::log() const {
  const std::size_t n = order();
  if (coeffs_[0] != 1) throw std::domain_error("PowerSeries::log: constant term must be 1");
  PowerSeries t(*this);
  t[0] = 0;
  PowerSeries out(n);
  PowerSeries power = PowerSeries::constant(1, n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * t;
    const Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
    for (std::size_t j = 0; j <= n; ++j) out[j] += sign * power[j] / Rat(k);
  }
  return out;
}

PowerSeries PowerSeries::exp() const {
  const std::size_t n = order();
  if (coeffs_[0] != 0) throw std::domain_error("PowerSeries::exp: constant term must be 0");
  PowerSeries out = PowerSeries::constant(1, n);
  PowerSeries power = PowerSeries::constant(1, n);
  Rat kfact(1);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * (*this);
    kfact *= Rat(k);
    for (std::size_t j = 0; j <= n; ++j) out[j] += power[j] / kfact;
  }
  return out;
}

std::string PowerSeries::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ", ";
    s += to_string(coeffs_[k]);
  }
  return s + "]";
}

}  // namespace feynkit
