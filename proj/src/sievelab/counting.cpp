#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eoslab/sievelab.hpp"

namespace eoslab {

QueryParams QueryParams::with_beta(std::uint64_t k, std::int64_t a, double x, double y, double beta, unsigned min_u) {
  QueryParams p;
  p.k = k;
  p.a = a;
  p.x = x;
  p.y = y;
  p.z = std::pow(x, beta);
  p.beta = beta;
  p.min_u = min_u;
  return p;
}

std::uint64_t QueryParams::residue() const {
  const auto kk = static_cast<std::int64_t>(k);
  return static_cast<std::uint64_t>(((a % kk) + kk) % kk);
}

void QueryParams::validate() const {
  if (k <= 2) throw DomainError("modulus k must exceed 2, got " + std::to_string(k));
  if (std::gcd(residue(), k) != 1) {
    throw DomainError("residue a=" + std::to_string(a) + " is not coprime to k=" + std::to_string(k));
  }
  if (!(x >= 1)) throw DomainError("x must be >= 1");
  if (!(y >= 0)) throw DomainError("y must be >= 0");
  if (!(z >= 0)) throw DomainError("z must be >= 0");
  if (min_u != 1 && min_u != 2) throw DomainError("min_u must be 1 or 2");
  if (beta) {
    if (!(*beta > 0 && *beta <= 0.5)) throw DomainError("beta must lie in (0, 1/2]");
    const double expect = std::pow(x, *beta);
    if (std::abs(expect - z) > 1e-12 * std::max(1.0, expect)) throw DomainError("z does not equal x^beta");
  }
}

SiftingSequence<> build_sequence_A(const QueryParams& params) {
  params.validate();
  return build_sequence_A(params, PrimeResidueCounts(params.y, params.k));
}

SiftingSequence<> build_sequence_A(const QueryParams& params, const PrimeResidueCounts& primes) {
  params.validate();
  const std::uint64_t k = params.k;
  if (primes.modulus() != k) throw DomainError("prime residue counts use a different modulus");
  // c_r depends only on r mod k: c_r = #{p : p = a * inv(r)} for units r, else 0.
  std::vector<std::int64_t> by_class(k, 0);
  const std::uint64_t a = params.residue();
  for (std::uint64_t r = 1; r < k; ++r) {
    if (std::gcd(r, k) != 1) continue;
    by_class[r] = static_cast<std::int64_t>(primes[mul_mod(a, mod_inverse(static_cast<std::int64_t>(r), k), k)]);
  }
  SiftingSequence<> seq;
  seq.cutoff = params.x;
  const std::uint64_t n = params.x_floor();
  seq.weights.assign(n + 1, 0);
  for (std::uint64_t r = 1; r <= n; ++r) seq.weights[r] = by_class[r % k];
  return seq;
}

std::uint64_t count_Nk(const QueryParams& params, const FactorSieve& sieve) {
  params.validate();
  return count_Nk(params, sieve, PrimeResidueCounts(params.y, params.k));
}

std::uint64_t count_Nk(const QueryParams& params, const FactorSieve& sieve, const PrimeResidueCounts& primes) {
  params.validate();
  const std::uint64_t k = params.k;
  if (primes.modulus() != k) throw DomainError("prime residue counts use a different modulus");
  const std::uint64_t n = params.x_floor();
  if (n > sieve.limit()) throw CapacityError("count_Nk: x exceeds sieve limit " + std::to_string(sieve.limit()));
  const std::uint64_t t = ceil_threshold(params.z);
  std::vector<std::uint64_t> rough_by_class(k, 0);
  for (std::uint64_t u = params.min_u; u <= n; ++u) {
    if (is_rough(u, t, sieve)) ++rough_by_class[u % k];
  }
  // v must be a unit (else uv cannot be the unit a), and then u = a * inv(v).
  const std::uint64_t a = params.residue();
  unsigned __int128 total = 0;
  for (std::uint64_t v = 1; v < k; ++v) {
    if (primes[v] == 0 || std::gcd(v, k) != 1) continue;
    const std::uint64_t u = mul_mod(a, mod_inverse(static_cast<std::int64_t>(v), k), k);
    total += static_cast<unsigned __int128>(rough_by_class[u]) * primes[v];
  }
  if (total > std::numeric_limits<std::uint64_t>::max()) throw CapacityError("count_Nk overflows 64 bits");
  return static_cast<std::uint64_t>(total);
}

double lambda(const QueryParams& params) {
  params.validate();
  return static_cast<double>(primes_coprime_count(params.y, params.k)) / static_cast<double>(euler_phi(params.k));
}

double main_term(const QueryParams& params, const FactorSieve& sieve) {
  const double lam = lambda(params);
  if (lam == 0) return 0;
  return lam * static_cast<double>(rough_count(RoughCountQuery{params.x, params.z, std::nullopt}, sieve));
}

}  // namespace eoslab
