#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "eoslab/arith.hpp"
#include "eoslab/dirichlet.hpp"
#include "eoslab/errors.hpp"

using namespace eoslab;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (std::uint32_t n = 1; n <= 60; ++n) CHECK(cyclotomic_polynomial(n).size() - 1 == euler_phi(n));
}

TEST_CASE("cyclotomic integers reduce exactly") {
  // 1 + zeta_3 + zeta_3^2 = 0
  CyclotomicInt s(3);
  for (int j = 0; j < 3; ++j) s.add_power(j);
  CHECK(s.is_zero());
  // zeta_12^3 = i, i^2 = -1
  CyclotomicInt i(12);
  i.add_power(3);
  CHECK((i * i).as_integer() == -1);
  CHECK((i * i.conj()).as_integer() == 1);
  CyclotomicInt sum_roots(12);
  for (int j = 0; j < 12; ++j) sum_roots.add_power(j, 5);
  CHECK(sum_roots.is_zero());
  CHECK(CyclotomicInt(7, 4).as_integer() == 4);
}

TEST_CASE("character values are exact turns") {
  const CharValue q = CharValue::root(3, 12);
  CHECK(q == CharValue::root(1, 4));
  CHECK(q * q == CharValue::root(1, 2));
  CHECK(q * q.conj() == CharValue::one());
  CHECK((q * CharValue::zero()).is_zero);
}

TEST_CASE("group structure for small moduli") {
  const CharacterGroup g5 = build_character_group(5);
  REQUIRE(g5.components().size() == 1);
  CHECK(g5.components()[0].generator == 2);
  CHECK(g5.components()[0].order == 4);

  const CharacterGroup g8(8);
  REQUIRE(g8.components().size() == 2);
  CHECK(g8.components()[0].order == 2);
  CHECK(g8.components()[1].order == 2);

  const CharacterGroup g15(15);
  std::multiset<std::uint32_t> orders;
  for (const auto& c : g15.components()) orders.insert(c.order);
  CHECK(orders == std::multiset<std::uint32_t>{2, 4});
  CHECK(g15.characters().size() == 8);

  CHECK_THROWS_AS(CharacterGroup(2), DomainError);
  CHECK_THROWS_AS(CharacterGroup(1), DomainError);
}

TEST_CASE("group invariants for k <= 500") {
  for (std::uint64_t k = 3; k <= 500; ++k) {
    CAPTURE(k);
    const CharacterGroup g(k);
    std::uint64_t product = 1;
    for (const auto& c : g.components()) {
      product *= c.order;
      // exact order
      REQUIRE(pow_mod(c.generator, c.order, c.modulus) == 1);
      for (const auto& [r, e] : factorize(c.order)) REQUIRE(pow_mod(c.generator, c.order / r, c.modulus) != 1);
    }
    REQUIRE(product == euler_phi(k));
    // logs are a bijection from units onto the exponent box, inverted by from_logs
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t n = 1; n < k; ++n) {
      const auto logs = g.logs(static_cast<std::int64_t>(n));
      if (std::gcd(n, k) != 1) {
        REQUIRE(logs.empty());
        continue;
      }
      REQUIRE(seen.insert(logs).second);
      REQUIRE(g.from_logs(logs) == n);
    }
    REQUIRE(seen.size() == euler_phi(k));
  }
}

TEST_CASE("distinct characters number phi(k)") {
  for (std::uint64_t k = 3; k <= 500; ++k) {
    const CharacterGroup g(k);
    const auto chars = g.characters();
    REQUIRE(chars.size() == euler_phi(k));
    std::set<std::vector<std::int64_t>> tables;
    for (const auto& chi : chars) {
      std::vector<std::int64_t> t(k);
      for (std::uint64_t n = 0; n < k; ++n) t[n] = chi.power(static_cast<std::int64_t>(n));
      tables.insert(std::move(t));
    }
    REQUIRE(tables.size() == euler_phi(k));
    REQUIRE(chars.front().is_principal());
  }
}

TEST_CASE("evaluate") {
  const CharacterGroup g(5);
  const auto chi0 = g.principal();
  for (int n = 1; n < 20; ++n) CHECK(evaluate(chi0, n) == (n % 5 == 0 ? CharValue::zero() : CharValue::one()));
  const auto chi = g.character({1});
  CHECK(evaluate(chi, 2) == CharValue::root(1, 4));
  for (const auto& c : g.characters()) CHECK(evaluate(c, 10).is_zero);
  CHECK(evaluate(chi, -3) == evaluate(chi, 2));
}

TEST_CASE("multiplicativity, periodicity and closure") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10'000; ++trial) {
    const std::uint64_t k = 3 + rng() % 300;
    const CharacterGroup g(k);
    std::vector<std::uint32_t> t1, t2;
    for (const auto& c : g.components()) {
      t1.push_back(static_cast<std::uint32_t>(rng() % c.order));
      t2.push_back(static_cast<std::uint32_t>(rng() % c.order));
    }
    const auto chi = g.character(t1);
    const auto psi = g.character(t2);
    const auto m = static_cast<std::int64_t>(rng() % 100'000);
    const auto n = static_cast<std::int64_t>(rng() % 100'000);
    REQUIRE(chi(m * n) == chi(m) * chi(n));
    REQUIRE(chi(m + static_cast<std::int64_t>(k)) == chi(m));
    REQUIRE(chi(m).is_zero == (std::gcd(static_cast<std::uint64_t>(m), k) != 1));
    const auto prod = chi * psi;
    REQUIRE(prod(n) == chi(n) * psi(n));
    REQUIRE((chi * chi.conj()).is_principal());
  }
}

TEST_CASE("column orthogonality is exact for k <= 200") {
  for (std::uint64_t k = 3; k <= 200; ++k) {
    const CharacterGroup g(k);
    for (const auto& chi : g.characters()) {
      CyclotomicInt s(g.exponent());
      for (std::uint64_t n = 0; n < k; ++n) s.add(chi(static_cast<std::int64_t>(n)));
      if (chi.is_principal()) {
        REQUIRE(s.as_integer() == static_cast<std::int64_t>(euler_phi(k)));
      } else {
        REQUIRE(s.is_zero());
      }
    }
  }
}

TEST_CASE("orthogonality_sum") {
  const CharacterGroup g5(5);
  CHECK(orthogonality_sum(g5, 2, 7) == Rational{1, 1});
  CHECK(orthogonality_sum(g5, 2, 3) == Rational{0, 1});
  CHECK(orthogonality_sum(g5, 2, 10) == Rational{0, 1});
  CHECK(orthogonality_sum(CharacterGroup(12), 5, 5) == Rational{1, 1});
  CHECK_THROWS_AS(orthogonality_sum(g5, 5, 1), DomainError);
}
