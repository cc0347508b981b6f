#include "eoslab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eoslab/errors.hpp"
#include "eoslab/parallel.hpp"

namespace eoslab {

namespace {

constexpr std::uint64_t kSegment = 1u << 18;
constexpr double kSnap = 1e-9;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<double> snapped(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) <= kSnap * std::max(1.0, std::abs(v))) return r;
  return std::nullopt;
}

}  // namespace

std::uint64_t floor_cutoff(double x) {
  if (!(x >= 0)) return 0;
  if (auto r = snapped(x)) return static_cast<std::uint64_t>(*r);
  return static_cast<std::uint64_t>(std::floor(x));
}

std::uint64_t ceil_threshold(double z) {
  if (!(z > 0)) return 0;
  if (auto r = snapped(z)) return static_cast<std::uint64_t>(*r);
  return static_cast<std::uint64_t>(std::ceil(z));
}

FactorSieve::FactorSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("factor sieve limit must be >= 2");
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError("factor sieve limit exceeds 2^32 - 1");
  }
  spf_.assign(limit + 1, 0);
  const std::uint64_t root = isqrt(limit);
  const std::vector<std::uint32_t> base = primes_up_to(root);

  // Base primes visited in increasing order: the first prime to touch n is P^-(n).
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    for (const std::uint32_t p : base) {
      const std::uint64_t pp = std::uint64_t{p} * p;
      if (pp > hi) break;
      std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m <= hi; m += p) {
        if (spf_[m] == 0) spf_[m] = p;
      }
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (spf_[n] == 0) {
        spf_[n] = static_cast<std::uint32_t>(n);
        primes_.push_back(static_cast<std::uint32_t>(n));
      }
    }
  }
}

std::uint64_t FactorSieve::prime_pi(std::uint64_t n) const {
  if (n > limit_) throw CapacityError("prime_pi argument exceeds sieve limit");
  return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

FactorSieve build_factor_sieve(std::uint64_t limit) { return FactorSieve(limit); }

std::uint64_t smallest_prime_factor(std::uint64_t n, const FactorSieve& sieve) {
  if (n < 1 || n > sieve.limit()) {
    throw DomainError("smallest_prime_factor: n=" + std::to_string(n) + " outside [1, " +
                      std::to_string(sieve.limit()) + "]");
  }
  if (n == 1) return kInfinity;
  return sieve.spf(n);
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  const std::uint64_t root = isqrt(n);
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint32_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= n; lo += kSegment) {
    const std::uint64_t hi = std::min(n, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (const std::uint32_t p : base) {
      const std::uint64_t pp = std::uint64_t{p} * p;
      if (pp > hi) break;
      for (std::uint64_t m = std::max(pp, (lo + p - 1) / p * p); m <= hi; m += p) seg[m - lo] = 0;
    }
    for (std::uint64_t v = lo; v <= hi; ++v) {
      if (seg[v - lo]) out.push_back(static_cast<std::uint32_t>(v));
    }
  }
  return out;
}

std::uint64_t mod_inverse(std::int64_t n, std::uint64_t m) {
  if (m < 2) throw DomainError("mod_inverse: modulus must be >= 2");
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t a = n % mm;
  if (a < 0) a += mm;
  // Extended Euclid on (a, m).
  std::int64_t old_r = a, r = mm, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw NotInvertibleError("mod_inverse: gcd(" + std::to_string(n) + ", " + std::to_string(m) + ") != 1");
  }
  old_s %= mm;
  if (old_s < 0) old_s += mm;
  return static_cast<std::uint64_t>(old_s);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t k) {
  if (k == 0) throw DomainError("euler_phi: k must be >= 1");
  std::uint64_t phi = k;
  for (const auto& [p, e] : factorize(k)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t tau = 1;
  for (const auto& [p, e] : factorize(n)) tau *= e + 1;
  return tau;
}

RoughCountQuery RoughCountQuery::with_beta(double x, double beta) {
  return RoughCountQuery{x, std::pow(x, beta), beta};
}

void RoughCountQuery::validate() const {
  if (!(x >= 1)) throw DomainError("rough count: x must be >= 1");
  if (!(z >= 0)) throw DomainError("rough count: z must be >= 0");
  if (beta) {
    const double expect = std::pow(x, *beta);
    if (std::abs(expect - z) > 1e-12 * std::max(1.0, std::abs(expect))) {
      throw DomainError("rough count: z does not equal x^beta");
    }
  }
}

std::uint64_t rough_count(const RoughCountQuery& query, const FactorSieve& sieve) {
  query.validate();
  const std::uint64_t n_max = floor_cutoff(query.x);
  if (n_max > sieve.limit()) {
    throw CapacityError("rough_count: x=" + std::to_string(n_max) + " exceeds sieve limit " +
                        std::to_string(sieve.limit()));
  }
  const std::uint64_t t = ceil_threshold(query.z);
  std::uint64_t count = n_max >= 1 ? 1 : 0;
  for (std::uint64_t n = 2; n <= n_max; ++n) count += sieve.spf(n) >= t;
  return count;
}

std::uint64_t rough_count_segmented(std::uint64_t x, double z, unsigned threads) {
  if (x == 0) return 0;
  const std::uint64_t t = ceil_threshold(z);
  // Only primes < t are crossed off; primes below min(t, sqrt(x)) suffice
  // for composites, the rest remove themselves individually.
  const std::vector<std::uint32_t> small = primes_up_to(t > 0 ? t - 1 : 0);
  const std::uint64_t segments = (x + kSegment - 1) / kSegment;
  std::vector<std::uint64_t> partial(segments, 0);
  parallel_for(segments, resolve_threads(threads), [&](std::size_t s) {
    const std::uint64_t lo = 1 + s * kSegment;
    const std::uint64_t hi = std::min(x, lo + kSegment - 1);
    std::vector<char> alive(hi - lo + 1, 1);
    for (const std::uint32_t p : small) {
      for (std::uint64_t m = (lo + p - 1) / p * p; m <= hi; m += p) alive[m - lo] = 0;
    }
    partial[s] = static_cast<std::uint64_t>(std::count(alive.begin(), alive.end(), 1));
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::uint64_t primes_coprime_count(double y, std::uint64_t k) {
  if (k == 0) throw DomainError("primes_coprime_count: k must be >= 1");
  const std::uint64_t n = floor_cutoff(y);
  std::uint64_t count = 0;
  for (const std::uint32_t p : primes_up_to(n)) count += (k % p != 0);
  return count;
}

}  // namespace eoslab
