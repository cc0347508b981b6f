#include <cmath>
#include <string>

#include "eoslab/sievelab.hpp"

namespace eoslab {

SieveComponents harman_components(const SiftingSequence<>& seq, double x, double delta, const FactorSieve& sieve) {
  if (!(delta > 0.25 && delta < 0.4)) throw DomainError("harman decomposition requires delta in (1/4, 2/5)");
  if (seq.length() > sieve.limit()) throw CapacityError("harman decomposition: x exceeds sieve limit");
  const bool five_term = delta > 1.0 / 3.0;
  const std::uint64_t t_X = ceil_threshold(std::sqrt(x));
  const std::uint64_t t_z = ceil_threshold(std::pow(x, 1.0 - 2.0 * delta));
  const std::uint64_t t_T = ceil_threshold(std::pow(x, delta));
  const std::uint64_t pq_max_sigma6 = floor_cutoff(std::pow(x, 1.0 - delta));  // pq <= x^{1-delta}
  const std::uint64_t x_strict = ceil_threshold(x);                            // n < x  <=>  n < x_strict

  SieveComponents out;
  out.sifted = sift(seq, std::sqrt(x), sieve);
  out.sigma[1] = sift(seq, std::pow(x, 1.0 - 2.0 * delta), sieve);

  const auto primes = sieve.primes();
  if (!five_term) {
    for (const std::uint32_t p : primes) {
      if (p >= t_X) break;
      if (p >= t_z) out.sigma[2] += sift_multiple(seq, p, p, sieve);
    }
    return out;
  }

  std::vector<std::uint32_t> middle;  // z <= p < T
  for (const std::uint32_t p : primes) {
    if (p >= t_X) break;
    if (p < t_z) continue;
    if (p < t_T) {
      middle.push_back(p);
      out.sigma[2] += sift_multiple(seq, p, p, sieve);
      out.sigma[4] += sift_multiple(seq, p, t_z, sieve);
    } else {
      out.sigma[3] += sift_multiple(seq, p, p, sieve);
    }
  }
  for (std::size_t j = 0; j < middle.size(); ++j) {
    const std::uint64_t q = middle[j];
    for (std::size_t i = j + 1; i < middle.size(); ++i) {
      const std::uint64_t p = middle[i];
      const std::uint64_t pq = p * q;
      if (pq > seq.length()) break;
      const std::int64_t s = sift_multiple(seq, pq, q, sieve);
      out.sigma[5] += s;
      if (pq <= pq_max_sigma6) {
        out.sigma[6] += s;
      } else {
        out.sigma[7] += s;
        if (pq * q < x_strict) out.sigma7_truncated += s;
      }
    }
  }
  return out;
}

bool HarmanDecomposition::identities_hold() const noexcept {
  for (const SieveComponents* side : {&a, &b}) {
    if (side->residual_top(five_term) != 0) return false;
    if (five_term && (side->residual_sigma2() != 0 || side->residual_sigma5() != 0)) return false;
  }
  return true;
}

HarmanDecomposition harman_decompose(const QueryParams& params, double delta, const FactorSieve& sieve) {
  params.validate();
  if (!(delta > 0.25 && delta < 0.4)) throw DomainError("harman decomposition requires delta in (1/4, 2/5)");
  HarmanDecomposition out;
  out.delta = delta;
  out.x = params.x;
  out.X = std::sqrt(params.x);
  out.z = std::pow(params.x, 1.0 - 2.0 * delta);
  out.T = std::pow(params.x, delta);
  out.five_term = delta > 1.0 / 3.0;
  out.a = harman_components(build_sequence_A(params), params.x, delta, sieve);
  out.b = harman_components(build_sequence_B(params.x), params.x, delta, sieve);
  return out;
}

}  // namespace eoslab
