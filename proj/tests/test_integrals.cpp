#include <doctest.h>

#include <cmath>

#include "eoslab/errors.hpp"
#include "eoslab/integrals.hpp"
#include "eoslab/quadrature.hpp"

using namespace eoslab;

namespace {

const BuchstabTable& table() {
  static const BuchstabTable t = solve_buchstab(10.0, 1e-4);
  return t;
}

// Midpoint-rule double integral of 1/(a2^2 a1) over a polygonal region, the
// omega <= 1 relaxation: an oracle independent of the adaptive rule.
double relaxed_midpoint(double a2_lo, double a2_hi, double (*lo)(double), double (*hi)(double), int n) {
  double sum = 0;
  const double h2 = (a2_hi - a2_lo) / n;
  for (int i = 0; i < n; ++i) {
    const double a2 = a2_lo + (i + 0.5) * h2;
    const double l = lo(a2), u = hi(a2);
    if (u <= l) continue;
    // inner integral of 1/a1 is exact
    sum += h2 * std::log(u / l) / (a2 * a2);
  }
  return sum;
}

}  // namespace

TEST_CASE("integrand values") {
  const auto& t = table();
  CHECK(integrand(1.0 / 3, 1.0 / 3, t) == doctest::Approx(27.0));
  CHECK(integrand(0.6, 0.3, t) == 0.0);
  CHECK(integrand(0.4, 0.25, t) == doctest::Approx(1.0 / (0.0625 * 0.4) / 1.4));
  CHECK(integrand(0.4, 0.25, t) == doctest::Approx(28.5714).epsilon(1e-5));
  const auto short_table = solve_buchstab(2.0, 1e-3);
  CHECK_THROWS_AS(integrand(0.1, 0.2, short_table), CapacityError);
}

TEST_CASE("closed form bounds") {
  const auto [b1, b2] = closed_form_bounds();
  // (1/3)(log(256/81) - 1) evaluates to 0.0502428...
  CHECK(b1 == doctest::Approx(0.0502428).epsilon(1e-6));
  CHECK(b2 == doctest::Approx(0.1963048).epsilon(1e-6));
  CHECK(b1 < 0.0503);
  CHECK(b2 < 0.1964);
  CHECK(1.0 - 0.0503 - 0.1964 == doctest::Approx(0.7533));
  // The relaxed integrals over the widened ranges reproduce the closed forms.
  const double r1 = relaxed_midpoint(0.3, 1.0 / 3, [](double a2) { return a2; }, [](double a2) { return 1 - 2 * a2; }, 200000);
  const double r2 = relaxed_midpoint(0.2, 0.3, [](double a2) { return 0.6 - a2; }, [](double) { return 0.4; }, 200000);
  CHECK(r1 == doctest::Approx(b1).epsilon(1e-8));
  CHECK(r2 == doctest::Approx(b2).epsilon(1e-8));
}

TEST_CASE("adaptive simpson") {
  const auto r = adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1)) < 1e-11);
  CHECK(adaptive_simpson([](double) { return 1.0; }, 1.0, 1.0, 1e-9).value == 0.0);
}

TEST_CASE("I(delta) bounds on a delta grid") {
  const auto [b1, b2] = closed_form_bounds();
  for (double delta : {0.34, 0.35, 0.36, 0.38, 0.399}) {
    CAPTURE(delta);
    const auto r = compute_I(delta, table());
    CHECK(r.I1 >= 0);
    CHECK(r.I2 >= 0);
    CHECK(r.I == doctest::Approx(r.I1 + r.I2));
    CHECK(r.I1 <= 0.0503 + 1e-6);
    CHECK(r.I2 <= b2 + 1e-6);
    CHECK(r.lower_bound_constant >= 0.7533);
    CHECK(r.lower_bound_constant <= 1.0);
    CHECK(r.error_estimate < 1e-6);
  }
  CHECK_THROWS_AS(compute_I(0.3, table()), DomainError);
  CHECK_THROWS_AS(compute_I(0.4, table()), DomainError);
}

TEST_CASE("I(delta) against an independent midpoint oracle") {
  // omega = 1/u on the whole region, so the integrand is 1/(a1 a2 (1 - a1 - a2)).
  for (double delta : {0.35, 0.38}) {
    const int n = 2000;
    double ref = 0;
    const double lo2 = 1 - 2 * delta, hi2 = std::min(delta, 1.0 / 3);
    const double h2 = (hi2 - lo2) / n;
    for (int i = 0; i < n; ++i) {
      const double a2 = lo2 + (i + 0.5) * h2;
      const double lo = std::max(a2, 1 - delta - a2), hi = std::min(delta, 1 - 2 * a2);
      if (hi <= lo) continue;
      const double h1 = (hi - lo) / n;
      for (int j = 0; j < n; ++j) {
        const double a1 = lo + (j + 0.5) * h1;
        ref += h2 * h1 / (a1 * a2 * (1 - a1 - a2));
      }
    }
    CHECK(compute_I(delta, table()).I == doctest::Approx(ref).epsilon(1e-4));
  }
}

TEST_CASE("I(delta) convergence and the empty upper region") {
  const auto coarse = compute_I(0.37, table(), 1e-7);
  const auto fine = compute_I(0.37, table(), 1e-10);
  CHECK(std::abs(coarse.I - fine.I) <= std::max(coarse.error_estimate, 1e-12));
  // Near delta = 1/3 the I1 strip (1-delta)/2 < a2 <= 1/3 collapses.
  const auto edge = compute_I(1.0 / 3 + 1e-6, table());
  CHECK(edge.I1 < 1e-9);
}
