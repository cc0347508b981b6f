#pragma once

// The group X_k of Dirichlet characters modulo k, built from the CRT
// decomposition of (Z/kZ)^* into cyclic components.
//
// A character is an exponent vector t with 0 <= t_i < d_i; its value at a
// unit n is e(sum_i t_i * log_i(n) / d_i). Values are kept as exact rational
// turns (CharValue), with the common denominator L = lcm(d_i).

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "eoslab/cyclotomic.hpp"

namespace eoslab {

struct GroupComponent {
  std::uint64_t modulus;    // prime power q_i dividing k
  std::uint64_t generator;  // residue mod q_i of exact order `order`
  std::uint32_t order;      // d_i
};

struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  bool operator==(const Rational&) const = default;
};

class DirichletCharacter;

class CharacterGroup {
 public:
  // Throws DomainError for k <= 2.
  explicit CharacterGroup(std::uint64_t k);

  std::uint64_t modulus() const noexcept { return data_->k; }
  std::uint64_t size() const noexcept { return data_->phi; }
  // L = lcm of component orders; every character value is an L-th root of unity.
  std::uint32_t exponent() const noexcept { return data_->exponent; }
  std::span<const GroupComponent> components() const noexcept { return data_->components; }

  // Discrete logs of n with respect to each component generator; empty when gcd(n, k) > 1.
  std::vector<std::uint32_t> logs(std::int64_t n) const;
  // Inverse of logs(): the unit in [1, k) with the given component logs.
  std::uint64_t from_logs(std::span<const std::uint32_t> logs) const;

  DirichletCharacter character(std::vector<std::uint32_t> exponents) const;
  DirichletCharacter principal() const;
  // All phi(k) characters, principal first, in lexicographic exponent order.
  std::vector<DirichletCharacter> characters() const;

  struct Data {
    std::uint64_t k = 0;
    std::uint64_t phi = 0;
    std::uint32_t exponent = 1;
    std::vector<GroupComponent> components;
    // Per residue r mod k: components.size() logs, or kNoLog in slot 0 for non-units.
    std::vector<std::uint32_t> residue_logs;
  };

 private:
  std::shared_ptr<const Data> data_;
};

CharacterGroup build_character_group(std::uint64_t k);

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const CharacterGroup::Data> group, std::vector<std::uint32_t> exponents);

  std::uint64_t modulus() const noexcept { return group_->k; }
  std::uint32_t exponent() const noexcept { return group_->exponent; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  bool is_principal() const noexcept;

  // chi(n) = zeta_L^power(n); power(n) < 0 when gcd(n, k) > 1.
  std::int64_t power(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(group_->k);
    if (r < 0) r += static_cast<std::int64_t>(group_->k);
    return table_[static_cast<std::size_t>(r)];
  }
  CharValue operator()(std::int64_t n) const;

  // Pointwise product; exponent vectors add modulo the component orders.
  DirichletCharacter operator*(const DirichletCharacter& other) const;
  DirichletCharacter conj() const;

  bool operator==(const DirichletCharacter& other) const { return table_ == other.table_; }

 private:
  std::shared_ptr<const CharacterGroup::Data> group_;
  std::vector<std::uint32_t> exponents_;
  std::vector<std::int32_t> table_;  // power by residue, -1 for non-units
};

inline CharValue evaluate(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

// (1/phi(k)) sum_chi conj(chi(a)) chi(r), computed exactly in Z[zeta_L].
// Throws DomainError when gcd(a, k) != 1.
Rational orthogonality_sum(const CharacterGroup& group, std::int64_t a, std::int64_t r);

}  // namespace eoslab
