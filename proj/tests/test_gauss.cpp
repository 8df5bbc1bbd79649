#include "doctest.h"

#include "feynkit/gauss.hpp"
#include "feynkit/symmetric_form.hpp"

#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace feynkit;

namespace {

RatMatrix mat(const std::vector<std::vector<int>>& rows) {
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST_CASE("gaussian_partition closed forms") {
  CHECK(gaussian_partition(SymmetricForm(mat({{1}}))) == doctest::Approx(std::sqrt(kTwoPi)));
  CHECK(gaussian_partition(SymmetricForm::identity(2)) == doctest::Approx(kTwoPi));
  // diag(2,3): product of two one-dimensional Gauss integrals.
  const SymmetricForm a23(mat({{2, 0}, {0, 3}}));
  CHECK(gaussian_partition(a23) == doctest::Approx(kTwoPi / std::sqrt(6.0)));
  const double quad = oracles::box_gauss_quadrature(oracles::to_double_matrix(a23.entries()),
                                                    {0.0, 0.0});
  CHECK(gaussian_partition(a23) == doctest::Approx(quad).epsilon(1e-6));
}

TEST_CASE("SymmetricForm construction guards") {
  CHECK_THROWS_AS(SymmetricForm(mat({{1, 2}, {3, 1}})), std::invalid_argument);  // not symmetric
  CHECK_THROWS_AS(SymmetricForm(mat({{0}})), std::domain_error);                 // not PD
  CHECK_THROWS_AS(SymmetricForm(mat({{1, 2}, {2, 1}})), std::domain_error);      // minor < 0
  CHECK_THROWS_AS(SymmetricForm(mat({{-1}})), std::domain_error);
}

TEST_CASE("shifted_partition") {
  const SymmetricForm a1(mat({{1}}));
  SUBCASE("zero source reduces to Z_0 exactly") {
    CHECK(shifted_partition(a1, LinearSource::zero(1)) == gaussian_partition(a1));
  }
  SUBCASE("scalar example") {
    const LinearSource b({Rat(1)});
    CHECK(shifted_partition(a1, b) == doctest::Approx(std::sqrt(kTwoPi) * std::exp(0.5)));
  }
  SUBCASE("diag(1,2) with b=(1,1): exponent 3/4") {
    const SymmetricForm a(mat({{1, 0}, {0, 2}}));
    const LinearSource b({Rat(1), Rat(1)});
    CHECK(shifted_exponent(a, b) == Rat(3, 4));
    CHECK(shifted_partition(a, b) ==
          doctest::Approx(kTwoPi / std::sqrt(2.0) * std::exp(0.75)));
    // Quadrature oracle of the defining integral.
    const double quad =
        oracles::box_gauss_quadrature(oracles::to_double_matrix(a.entries()), {1.0, 1.0});
    CHECK(shifted_partition(a, b) == doctest::Approx(quad).epsilon(1e-6));
    // Monte Carlo oracle: Z_b / Z_0 = E[exp(<b, x>)] under the Gaussian.
    const auto est = oracles::shifted_ratio_mc(a, {1.0, 1.0}, 400000, 77);
    const double ratio = shifted_partition(a, b) / gaussian_partition(a);
    CHECK(std::abs(est.value - ratio) < 3.0 * est.std_error);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(shifted_partition(a1, LinearSource::zero(2)), std::invalid_argument);
  }
}

TEST_CASE("propagator entries") {
  SUBCASE("identity") {
    const SymmetricForm a = SymmetricForm::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(propagator_entry(a, i, j) == (i == j ? Rat(1) : Rat(0)));
  }
  SUBCASE("scalar inverse") {
    CHECK(propagator_entry(SymmetricForm(mat({{2}})), 0, 0) == Rat(1, 2));
  }
  SUBCASE("2x2 cofactor inversion") {
    const SymmetricForm a(mat({{2, 1}, {1, 1}}));
    CHECK(propagator_entry(a, 0, 0) == Rat(1));
    CHECK(propagator_entry(a, 0, 1) == Rat(-1));
    CHECK(propagator_entry(a, 1, 0) == Rat(-1));
    CHECK(propagator_entry(a, 1, 1) == Rat(2));
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(propagator_entry(SymmetricForm::identity(2), 0, 2), std::out_of_range);
  }
}

TEST_CASE("random forms: exactness and quadrature agreement") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const SymmetricForm a(oracles::random_pd_matrix(rng, d));

    // A * A^{-1} == I exactly.
    CHECK(a.entries() * a.inverse() == RatMatrix::identity(d));
    // Propagator matrix is exactly symmetric.
    CHECK(a.inverse() == a.inverse().transposed());
    // Exact det equals the cofactor oracle.
    CHECK(a.determinant() == oracles::cofactor_det(a.entries()));

    const auto b = oracles::random_rationals(rng, d, 2);
    std::vector<double> bd(d);
    for (std::size_t i = 0; i < d; ++i) bd[i] = to_double(b[i]);
    const double quad =
        oracles::box_gauss_quadrature(oracles::to_double_matrix(a.entries()), bd, 48, 12.0);
    CHECK(shifted_partition(a, LinearSource(b)) == doctest::Approx(quad).epsilon(0.01));
  }
}
