#include <doctest.h>

#include <cmath>
#include <random>

#include "eoslab/arith.hpp"
#include "eoslab/charsums.hpp"
#include "eoslab/errors.hpp"

using namespace eoslab;

namespace {

// The quadratic character (Legendre symbol) modulo an odd prime.
DirichletCharacter quadratic(const CharacterGroup& g) {
  REQUIRE(g.components().size() == 1);
  return g.character({g.components()[0].order / 2});
}

double brute_window_max(const DirichletCharacter& chi) {
  const auto k = static_cast<std::int64_t>(chi.modulus());
  double best = 0;
  for (std::int64_t m = 0; m < k; ++m) {
    std::complex<double> s{0, 0};
    for (std::int64_t n = m + 1; n <= m + 3 * k; ++n) {
      s += chi(n).to_complex();
      best = std::max(best, std::abs(s));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("interval sums") {
  const CharacterGroup g5(5), g7(7);
  CHECK(std::abs(interval_sum(g5.principal(), 0, 5) - 4.0) < 1e-12);
  const auto q7 = quadratic(g7);
  CHECK(std::abs(interval_sum(q7, 0, 6)) < 1e-12);
  CHECK(interval_sum_exact(q7, 0, 6).is_zero());
  CHECK(interval_sum_exact(q7, 0, 2).as_integer() == 2);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const CharacterGroup g(3 + rng() % 60);
    const auto chars = g.characters();
    const auto& chi = chars[rng() % chars.size()];
    const std::uint64_t M = rng() % 500, N = 1 + rng() % 500;
    CyclotomicInt direct(g.exponent());
    for (std::uint64_t n = M + 1; n <= M + N; ++n) direct.add(chi(static_cast<std::int64_t>(n)));
    direct -= interval_sum_exact(chi, M, N);
    REQUIRE(direct.is_zero());
  }
}

TEST_CASE("full period sums vanish for non-principal characters") {
  for (std::uint64_t k = 3; k <= 120; ++k) {
    const CharacterGroup g(k);
    for (const auto& chi : g.characters()) {
      if (!chi.is_principal()) REQUIRE(interval_sum_exact(chi, 17, k).is_zero());
    }
  }
}

TEST_CASE("pv_extremal") {
  CHECK(pv_extremal(quadratic(CharacterGroup(7))) == doctest::Approx(2.0));
  // 1, -1, -1, 1: the window n = 2, 3 sums to -2.
  CHECK(pv_extremal(quadratic(CharacterGroup(5))) == doctest::Approx(2.0));
  CHECK_THROWS_AS(pv_extremal(CharacterGroup(7).principal()), DomainError);
  for (std::uint64_t k = 3; k <= 40; ++k) {
    const CharacterGroup g(k);
    for (const auto& chi : g.characters()) {
      if (!chi.is_principal()) REQUIRE(pv_extremal(chi) == doctest::Approx(brute_window_max(chi)).epsilon(1e-12));
    }
  }
}

TEST_CASE("prime sums") {
  const CharacterGroup g3(3), g5(5);
  CHECK(std::abs(prime_sum(g3.principal(), 10) - 3.0) < 1e-12);
  CHECK(prime_sum_exact(quadratic(g5), PrimeResidueCounts(10, 5)).as_integer() == -3);
  for (const auto& chi : g5.characters()) CHECK(std::abs(prime_sum(chi, 1.9)) == 0.0);

  for (std::uint64_t k = 3; k <= 60; ++k) {
    const CharacterGroup g(k);
    for (double y : {2.0, 10.0, 1000.5}) {
      REQUIRE(prime_sum_exact(g.principal(), PrimeResidueCounts(y, k)).as_integer() ==
              static_cast<std::int64_t>(primes_coprime_count(y, k)));
    }
  }
}

TEST_CASE("check_bound examples") {
  const CharacterGroup g5(5);
  BoundRequest grh{BoundLabel::prime_sum_grh, 10};
  const auto prof = check_bound(grh, g5);
  CHECK(prof.measured == doctest::Approx(3.0));
  CHECK(prof.bound == doctest::Approx(std::sqrt(10.0) * std::log(50.0)));
  CHECK(prof.bound == doctest::Approx(12.37).epsilon(1e-3));
  CHECK(prof.ratio == doctest::Approx(3.0 / prof.bound));
  CHECK(prof.within_bound());

  BoundRequest mv{BoundLabel::mean_value};
  mv.weights.assign(10, {1.0, 0.0});
  const auto mprof = check_bound(mv, g5);
  CHECK(mprof.within_bound());
  CHECK(mprof.measured == doctest::Approx(mprof.measured_parseval));
  // phi(k) (N/k + 1) sum |a|^2 = 4 * 3 * 10
  CHECK(mprof.bound == doctest::Approx(120.0));

  mv.weights.assign(10, {0.0, 0.0});
  const auto zero = check_bound(mv, g5);
  CHECK(zero.measured == 0.0);
  CHECK(zero.bound == 0.0);
  CHECK(zero.within_bound());

  CHECK_THROWS_AS(parse_bound_label("nope"), DomainError);
  CHECK(parse_bound_label("grh") == BoundLabel::prime_sum_grh);
  BoundRequest low{BoundLabel::prime_sum_grh, 2};
  CHECK_THROWS_AS(check_bound(low, g5), DomainError);

  BoundRequest unc{BoundLabel::prime_sum_unconditional, 1000};
  const auto u = check_bound(unc, g5);
  CHECK(u.bound == doctest::Approx(std::sqrt(5.0) * 1000 / std::log(1000.0)));
}

TEST_CASE("mean value inequality with integer weights") {
  std::mt19937_64 rng(99);
  for (std::uint64_t k = 3; k <= 60; ++k) {
    const CharacterGroup g(k);
    for (int trial = 0; trial < 10; ++trial) {
      BoundRequest req{BoundLabel::mean_value};
      const std::size_t n = 1 + rng() % 150;
      std::int64_t mass = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto re = static_cast<std::int64_t>(rng() % 21) - 10, im = static_cast<std::int64_t>(rng() % 21) - 10;
        req.weights.emplace_back(static_cast<double>(re), static_cast<double>(im));
        mass += re * re + im * im;
      }
      const auto prof = check_bound(req, g);
      // Exact: k * phi * sum_r |W_r|^2 <= phi * (N + k) * mass, all integers.
      const auto lhs_k = static_cast<std::int64_t>(std::llround(prof.measured_parseval)) * static_cast<std::int64_t>(k);
      REQUIRE(lhs_k <= static_cast<std::int64_t>(g.size()) * static_cast<std::int64_t>(n + k) * mass);
      REQUIRE(prof.measured == doctest::Approx(prof.measured_parseval).epsilon(1e-9));
      REQUIRE(prof.within_bound());
    }
  }
}
