#pragma once

// Prime sieving, modular arithmetic and exact rough-number counting.
//
// Real-valued cutoffs (x, y, z) are mapped onto integers once, through
// floor_cutoff() and ceil_threshold(), so that every module compares
// "n <= x" and "p >= z" the same way.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace eoslab {

// P^-(1) = infinity.
inline constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();

// Largest integer n with n <= x. Values within 1e-9 (relative) of an
// integer snap to it, so pow(1000, 1.0/3) behaves as 10.
std::uint64_t floor_cutoff(double x);

// Smallest integer t such that an integer n satisfies n >= z iff n >= t.
// Same snapping rule as floor_cutoff(). Negative z maps to 0.
std::uint64_t ceil_threshold(double z);

class FactorSieve {
 public:
  // Smallest-prime-factor table on [2, limit], filled segment by segment.
  // Throws DomainError for limit < 2 and CapacityError above 2^32 - 1.
  explicit FactorSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  // Raw table lookup, n in [2, limit]. No range check.
  std::uint32_t spf(std::uint64_t n) const noexcept { return spf_[n]; }

  bool is_prime(std::uint64_t n) const noexcept { return n >= 2 && n <= limit_ && spf_[n] == n; }

  // All primes <= limit in increasing order.
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  // Number of primes <= n, n <= limit.
  std::uint64_t prime_pi(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

FactorSieve build_factor_sieve(std::uint64_t limit);

// P^-(n) for 1 <= n <= sieve.limit(); kInfinity for n = 1.
std::uint64_t smallest_prime_factor(std::uint64_t n, const FactorSieve& sieve);

// n is z-rough: P^-(n) >= threshold, where threshold comes from ceil_threshold().
inline bool is_rough(std::uint64_t n, std::uint64_t threshold, const FactorSieve& sieve) noexcept {
  return n == 1 || sieve.spf(n) >= threshold;
}

// Plain segmented Eratosthenes, independent of FactorSieve.
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

// Unique u in [0, m) with u*n = 1 (mod m). Throws NotInvertibleError.
std::uint64_t mod_inverse(std::int64_t n, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

// Trial-division factorization, ascending primes with exponents.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t k);

// Number of positive divisors.
std::uint64_t divisor_count(std::uint64_t n);

struct RoughCountQuery {
  double x = 1;
  double z = 0;
  std::optional<double> beta;

  static RoughCountQuery with_beta(double x, double beta);

  // Throws DomainError when x < 1, z < 0 or z disagrees with x^beta.
  void validate() const;
};

// Phi(x, z) = #{1 <= n <= x : P^-(n) >= z}, counting n = 1.
// Throws CapacityError when floor(x) exceeds the sieve.
std::uint64_t rough_count(const RoughCountQuery& query, const FactorSieve& sieve);

// Same count without a factor table: crosses off multiples of the primes
// below z over fixed-size segments. Segments are split across `threads`
// workers and the integer partial counts summed.
std::uint64_t rough_count_segmented(std::uint64_t x, double z, unsigned threads = 1);

// #{p <= y prime : gcd(p, k) = 1}.
std::uint64_t primes_coprime_count(double y, std::uint64_t k);

}  // namespace eoslab
