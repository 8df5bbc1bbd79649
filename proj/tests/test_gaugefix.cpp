#include "doctest.h"

#include "feynkit/gaugefix.hpp"

#include <cmath>
#include <numbers>

using namespace feynkit;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("fp_jacobian_rotation") {
  CHECK(fp_jacobian_rotation({1.0, 0.0}) == doctest::Approx(2.0 * kPi));
  CHECK(fp_jacobian_rotation({0.0, 2.0}) == doctest::Approx(4.0 * kPi));
  CHECK_THROWS_AS(fp_jacobian_rotation({0.0, 0.0}), std::domain_error);

  SUBCASE("matches the regularized orbit integral within 1%") {
    const std::array<double, 2> x{0.8, 0.6};
    const double numeric = fp_orbit_delta_numeric(x, 0.01);
    CHECK(fp_jacobian_rotation(x) * numeric == doctest::Approx(1.0).epsilon(0.01));
  }
  SUBCASE("J * orbit integral decreases monotonically to 1") {
    const std::array<double, 2> x{1.0, 0.0};
    const double j = fp_jacobian_rotation(x);
    const double q1 = j * fp_orbit_delta_numeric(x, 0.1);
    const double q2 = j * fp_orbit_delta_numeric(x, 0.05);
    const double q3 = j * fp_orbit_delta_numeric(x, 0.025);
    CHECK(q1 > q2);
    CHECK(q2 > q3);
    CHECK(q3 > 1.0);
    CHECK(q3 == doctest::Approx(1.0).epsilon(0.01));
  }
}

TEST_CASE("gauge_fixed_integral_rotation matches the polar formula") {
  SUBCASE("Gaussian: 2 pi") {
    auto f = [](double r) { return std::exp(-0.5 * r * r); };
    const double gf = gauge_fixed_integral_rotation(f);
    CHECK(gf == doctest::Approx(2.0 * kPi).epsilon(5e-3));
    CHECK(gf == doctest::Approx(polar_radial_integral(f)).epsilon(5e-3));
  }
  SUBCASE("unit disk indicator: pi") {
    auto f = [](double r) { return r < 1.0 ? 1.0 : 0.0; };
    const double gf = gauge_fixed_integral_rotation(f);
    CHECK(gf == doctest::Approx(kPi).epsilon(5e-3));
  }
  SUBCASE("r^2 e^{-r^2}: pi") {
    auto f = [](double r) { return r * r * std::exp(-r * r); };
    const double gf = gauge_fixed_integral_rotation(f);
    CHECK(gf == doctest::Approx(kPi / 2.0 * 2.0 * 0.5 * 2.0).epsilon(5e-3));
    // 2 pi * int r^3 e^{-r^2} dr = 2 pi * (1/2) Gamma(2)/2 = pi.
    CHECK(gf == doctest::Approx(kPi).epsilon(5e-3));
    CHECK(gf == doctest::Approx(polar_radial_integral(f)).epsilon(5e-3));
  }
  SUBCASE("divergence guard") {
    auto bad = [](double r) { return r; };
    CHECK_THROWS_AS(gauge_fixed_integral_rotation(bad), std::domain_error);
  }
}

TEST_CASE("C* gauge fixing on C^2") {
  SUBCASE("alpha independence and direct agreement (gaussian integrand)") {
    CstarConfig cfg;
    const auto z1 = cstar_gauge_fixed(1, cfg);
    const auto z2 = cstar_gauge_fixed(2, cfg);
    const double direct = cstar_direct(CstarIntegrand::gaussian);
    CHECK(std::abs(z1.value - z2.value) / std::abs(z1.value) < 5e-3);
    CHECK(z1.value == doctest::Approx(direct).epsilon(5e-3));
    CHECK(z2.value == doctest::Approx(direct).epsilon(5e-3));
    CHECK(z1.epsilon_trace.size() == 2);
  }
  SUBCASE("unit-disk indicator integrand") {
    CstarConfig cfg;
    cfg.integrand = CstarIntegrand::unit_disk;
    const auto z1 = cstar_gauge_fixed(1, cfg);
    const double direct = cstar_direct(CstarIntegrand::unit_disk);
    CHECK(z1.value == doctest::Approx(direct).epsilon(1e-2));
  }
  SUBCASE("alpha must be positive") {
    CHECK_THROWS_AS(cstar_gauge_fixed(0), std::invalid_argument);
  }
}

TEST_CASE("quadratic form check") {
  const auto rep = quadratic_form_check();
  CHECK(rep.rank_a == 2);
  CHECK(std::abs(rep.det_af) > 0.5);
  CHECK(rep.det_af.real() == doctest::Approx(-1.0));
  CHECK(rep.det_af.imag() == doctest::Approx(0.0));
  CHECK(rep.top_block_is_swap);
}
