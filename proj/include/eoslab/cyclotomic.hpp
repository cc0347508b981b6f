#pragma once

// Exact values of Dirichlet characters.
//
// A character value is 0 or a root of unity e(num/den); sums of values live
// in Z[zeta_L] and are stored as multiplicity counts per power of zeta_L.
// Zero tests reduce modulo the L-th cyclotomic polynomial, so no floating
// tolerance is involved.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace eoslab {

// 0, or the root of unity exp(2 pi i * numerator / denominator) in lowest terms.
struct CharValue {
  std::uint32_t numerator = 0;
  std::uint32_t denominator = 1;
  bool is_zero = false;

  static CharValue zero() noexcept { return CharValue{0, 1, true}; }
  static CharValue one() noexcept { return CharValue{}; }
  static CharValue root(std::uint64_t numerator, std::uint64_t denominator);

  CharValue operator*(const CharValue& other) const;
  CharValue conj() const;
  std::complex<double> to_complex() const;

  bool operator==(const CharValue&) const = default;
};

// Integer coefficients of the L-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t order);

// Element of Z[zeta_L], L = order(), as sum_j coeff[j] * zeta_L^j.
// The representation is not unique; equality and zero tests reduce first.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(std::uint32_t order = 1, std::int64_t constant = 0);

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(coeff_.size()); }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeff_; }

  // Adds multiplicity * zeta_L^power.
  void add_power(std::uint64_t power, std::int64_t multiplicity = 1);
  // Adds multiplicity * value; value.denominator must divide L.
  void add(const CharValue& value, std::int64_t multiplicity = 1);

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  CyclotomicInt operator*(const CyclotomicInt& other) const;
  CyclotomicInt conj() const;

  // Canonical remainder modulo Phi_L, degree < phi(L).
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  // The integer this element equals, if it is rational.
  std::optional<std::int64_t> as_integer() const;
  std::complex<double> to_complex() const;

 private:
  std::vector<std::int64_t> coeff_;
};

}  // namespace eoslab
