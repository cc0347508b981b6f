#include <doctest.h>

#include <cmath>

#include "eoslab/arith.hpp"
#include "eoslab/buchstab.hpp"
#include "eoslab/errors.hpp"

using namespace eoslab;

namespace {

// e^{-gamma}, the limit of omega(u).
constexpr double kOmegaLimit = 0.5614594835668851;

double omega_segment2(double u) { return (1.0 + std::log(u - 1.0)) / u; }

const BuchstabTable& table() {
  static const BuchstabTable t = solve_buchstab(16.0, 1e-4);
  return t;
}

}  // namespace

TEST_CASE("first segments") {
  const auto& t = table();
  CHECK(omega(t, 1.0) == 1.0);
  CHECK(omega(t, 1.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(omega(t, 2.0) == 0.5);
  CHECK(std::abs(omega(t, 3.0) - (1 + std::log(2.0)) / 3) < 1e-8);
  CHECK(std::abs(omega(t, 2.5) - omega_segment2(2.5)) < 2 * t.step() * t.step());
  const double h = t.step();
  for (std::size_t i = t.steps_per_unit(); i <= 2 * t.steps_per_unit(); i += 37) {
    const double u = 1.0 + static_cast<double>(i) * h;
    REQUIRE(std::abs(t.grid()[i] - omega_segment2(u)) < 10 * h * h);
  }
}

TEST_CASE("limit and envelope") {
  const auto& t = table();
  CHECK(std::abs(omega(t, 10.0) - kOmegaLimit) < 1e-5);
  const double h = t.step();
  for (std::size_t i = 0; i < t.grid().size(); ++i) {
    const double v = t.grid()[i];
    REQUIRE(v >= 0.5 - 1e-15);
    REQUIRE(v <= 1.0);
    if (i > 0) REQUIRE(std::abs(v - t.grid()[i - 1]) < 10 * h);
    const double u = 1.0 + static_cast<double>(i) * h;
    if (u >= 8 && u <= 15) REQUIRE(std::abs(v - kOmegaLimit) < 1e-5);
  }
  // Oscillation about the limit shrinks segment by segment.
  double prev = 1.0;
  for (int n = 2; n < 15; ++n) {
    double mx = 0;
    for (double u = n; u <= n + 1; u += 0.001) mx = std::max(mx, std::abs(omega(t, u) - kOmegaLimit));
    CHECK(mx <= prev + 1e-6);
    prev = mx;
  }
}

TEST_CASE("second-order convergence") {
  const double h = 1e-3;
  std::vector<double> pts;
  for (double u = 2.0; u <= 10.0; u += 0.25) pts.push_back(u);
  for (const auto& s : richardson_check(10.0, h, pts)) {
    CAPTURE(s.u);
    REQUIRE(std::abs(s.difference) < 4 * h * h);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(solve_buchstab(10.0, 0.0), DomainError);
  CHECK_THROWS_AS(solve_buchstab(10.0, -1e-3), DomainError);
  CHECK_THROWS_AS(solve_buchstab(1.5, 1e-3), DomainError);
  CHECK_THROWS_AS(omega(table(), 0.9), DomainError);
  CHECK_THROWS_AS(omega(table(), 16.5), DomainError);
}

TEST_CASE("phi asymptotic") {
  const auto& t = table();
  CHECK(phi_asymptotic(1e6, 0.5, t) == doctest::Approx(1e6 / std::log(1e6)));
  CHECK(phi_asymptotic(1e6, 0.5, t) == doctest::Approx(72382.4).epsilon(1e-5));
  CHECK(phi_asymptotic(1e6, 2.0 / 3.0, t) == doctest::Approx((2.0 / 3.0) * 1e6 / ((2.0 / 3.0) * std::log(1e6))));
  const FactorSieve s(1'000'000);
  const double ratio = static_cast<double>(rough_count({1e6, 1e3, std::nullopt}, s)) / phi_asymptotic(1e6, 0.5, t);
  CHECK(ratio == doctest::Approx(1.082).epsilon(1e-3));
  CHECK_THROWS_AS(phi_asymptotic(1e6, 0.01, t), DomainError);
  CHECK_THROWS_AS(phi_asymptotic(1.0, 0.5, t), DomainError);
}
