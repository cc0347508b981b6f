#include <doctest.h>

#include <cmath>

#include "eoslab/buchstab.hpp"
#include "eoslab/integrals.hpp"
#include "eoslab/sievelab.hpp"
#include "oracles.hpp"

using namespace eoslab;

namespace {

const FactorSieve& sieve_1e6() {
  static const FactorSieve s(1'000'000);
  return s;
}

// Sigma_7^* by its definition: pairs z <= q < p < T, x^{1-delta}/q < p < x/q^2,
// of #{r <= x/(pq) : r = 1 or every prime factor of r is >= q}.
std::int64_t sigma7_star_oracle(std::uint64_t x, double delta) {
  const double z = std::pow(static_cast<double>(x), 1 - 2 * delta), T = std::pow(static_cast<double>(x), delta);
  const double cut = std::pow(static_cast<double>(x), 1 - delta);
  const auto ps = oracle::primes_to(static_cast<std::uint64_t>(T) + 1);
  std::int64_t total = 0;
  for (const auto q : ps) {
    if (static_cast<double>(q) < z || static_cast<double>(q) >= T) continue;
    for (const auto p : ps) {
      if (p <= q || static_cast<double>(p) >= T) continue;
      if (!(static_cast<double>(p * q) > cut && p * q * q < x)) continue;
      for (std::uint64_t r = 1; r <= x / (p * q); ++r) total += oracle::rough(r, q);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("harman decomposition identities") {
  const auto& s = sieve_1e6();
  for (double x : {1e3, 1e4}) {
    for (double delta : {0.27, 0.30, 1.0 / 3.0, 0.35, 0.39}) {
      CAPTURE(x);
      CAPTURE(delta);
      const auto h = harman_decompose(QueryParams::with_beta(7, 3, x, 500, 0.5), delta, s);
      CHECK(h.five_term == (delta > 1.0 / 3.0));
      CHECK(h.a.residual_top(h.five_term) == 0);
      CHECK(h.b.residual_top(h.five_term) == 0);
      if (h.five_term) {
        CHECK(h.a.residual_sigma2() == 0);
        CHECK(h.a.residual_sigma5() == 0);
        CHECK(h.b.residual_sigma2() == 0);
        CHECK(h.b.residual_sigma5() == 0);
      }
      CHECK(h.identities_hold());
      CHECK(h.b.sifted == static_cast<std::int64_t>(rough_count({x, std::sqrt(x), std::nullopt}, s)));
    }
  }
}

TEST_CASE("two-term branch") {
  const auto h = harman_decompose(QueryParams::with_beta(5, 2, 1e4, 100, 0.5), 0.3, sieve_1e6());
  CHECK_FALSE(h.five_term);
  for (int j = 3; j <= 7; ++j) CHECK(h.a.sigma[j] == 0);
  CHECK(h.a.sifted == h.a.sigma[1] - h.a.sigma[2]);
  CHECK_THROWS_AS(harman_decompose(QueryParams::with_beta(5, 2, 1e4, 100, 0.5), 0.45, sieve_1e6()), DomainError);
  CHECK_THROWS_AS(harman_decompose(QueryParams::with_beta(5, 2, 1e4, 100, 0.5), 0.25, sieve_1e6()), DomainError);
}

TEST_CASE("sigma 7 truncation") {
  const auto& s = sieve_1e6();
  // x = 10^3, delta = 0.35: z ~ 7.9, T ~ 11.2, the only pair is (q, p) = (11?, ...) -- none with q < p < T.
  const auto small = harman_components(build_sequence_B(1000), 1000, 0.35, s);
  CHECK(small.sigma7_truncated == 0);
  for (double x : {1e4, 1e5, 1e6}) {
    const auto b = harman_components(build_sequence_B(x), x, 0.35, s);
    CHECK(b.sigma7_truncated == sigma7_star_oracle(static_cast<std::uint64_t>(x), 0.35));
    CHECK(b.sigma7_truncated <= b.sigma[7]);
  }
}

TEST_CASE("sigma 7 star tracks the integral I") {
  const auto& s = sieve_1e6();
  const auto table = solve_buchstab(10.0, 1e-4);
  const double I = compute_I(0.35, table).I;
  double prev = 0;
  for (double x : {1e4, 1e5, 1e6}) {
    const auto b = harman_components(build_sequence_B(x), x, 0.35, s);
    const double ratio = static_cast<double>(b.sigma7_truncated) / (x / std::log(x));
    MESSAGE("x=" << x << " Sigma7*/(x/log x)=" << ratio << " I=" << I);
    CHECK(ratio > prev);
    CHECK(ratio < I);
    prev = ratio;
  }
}

TEST_CASE("sigma 7 star within 25% of I at x = 10^6" * doctest::may_fail()) {
  // Convergence in x is logarithmic; at 10^6 the ratio is still far below I.
  const auto b = harman_components(build_sequence_B(1e6), 1e6, 0.35, sieve_1e6());
  const double ratio = static_cast<double>(b.sigma7_truncated) / (1e6 / std::log(1e6));
  const double I = compute_I(0.35, solve_buchstab(10.0, 1e-4)).I;
  CHECK(std::abs(ratio / I - 1.0) < 0.25);
}
