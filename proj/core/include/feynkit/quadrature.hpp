#pragma once

#include <functional>
#include <vector>

namespace feynkit {

/// Recursive adaptive Simpson on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 32);

/// Adaptive Simpson seeded with a fixed initial partition; robust for
/// integrands supported on a small part of [a, b].
double adaptive_simpson_panels(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int panels = 32, int max_depth = 28);

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);
  double integrate(const std::function<double(double)>& f, double a, double b) const;
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_, weights_;
};

}  // namespace feynkit
