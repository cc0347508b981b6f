#include <numeric>
#include <string>

#include "eoslab/parallel.hpp"
#include "eoslab/sievelab.hpp"

namespace eoslab {

std::vector<EoscRecord> eosc_scan(std::uint64_t k_min, std::uint64_t k_max, unsigned threads) {
  if (k_min < 3) throw DomainError("eosc_scan: k_min must be >= 3");
  if (k_max < k_min) return {};
  const std::vector<std::uint32_t> primes = primes_up_to(k_max);
  std::vector<EoscRecord> out(k_max - k_min + 1);
  parallel_for(out.size(), resolve_threads(threads), [&](std::size_t i) {
    const std::uint64_t k = k_min + i;
    // Distinct residues of the primes p <= k coprime to k. Two residues r, s are
    // realized by p1 <= p2 whenever r != s (distinct primes) or r == s (p1 = p2).
    std::vector<char> seen(k, 0);
    std::vector<std::uint64_t> residues;
    for (const std::uint32_t p : primes) {
      if (p > k) break;
      if (k % p == 0) continue;
      const std::uint64_t r = p % k;
      if (!seen[r]) {
        seen[r] = 1;
        residues.push_back(r);
      }
    }
    std::vector<char> covered(k, 0);
    const std::uint64_t units = euler_phi(k);
    std::uint64_t hit = 0;
    for (std::size_t s = 0; s < residues.size() && hit < units; ++s) {
      for (std::size_t t = s; t < residues.size(); ++t) {
        const std::uint64_t v = residues[s] * residues[t] % k;
        if (!covered[v]) {
          covered[v] = 1;
          ++hit;
        }
      }
    }
    EoscRecord rec;
    rec.k = k;
    for (std::uint64_t a = 1; a < k; ++a) {
      if (!covered[a] && std::gcd(a, k) == 1) rec.uncovered.push_back(a);
    }
    out[i] = std::move(rec);
  });
  return out;
}

}  // namespace eoslab
