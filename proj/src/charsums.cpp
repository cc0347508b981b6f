#include "eoslab/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eoslab/arith.hpp"
#include "eoslab/errors.hpp"
#include "eoslab/parallel.hpp"

namespace eoslab {

PrimeResidueCounts::PrimeResidueCounts(double y, std::uint64_t k)
    : PrimeResidueCounts(primes_up_to(floor_cutoff(y)), k) {}

PrimeResidueCounts::PrimeResidueCounts(std::span<const std::uint32_t> primes_upto_y, std::uint64_t k)
    : counts_(k, 0) {
  if (k == 0) throw DomainError("prime residue counts: modulus must be >= 1");
  for (const std::uint32_t p : primes_upto_y) {
    ++counts_[p % k];
    coprime_total_ += (k % p != 0);
  }
}

CyclotomicInt interval_sum_exact(const DirichletCharacter& chi, std::uint64_t M, std::uint64_t N) {
  const std::uint64_t k = chi.modulus();
  CyclotomicInt sum(chi.exponent());
  // n runs over (M, M+N]; class r receives floor((M+N-r)/k) - floor((M-r)/k) terms.
  const std::uint64_t full = N / k;
  const std::uint64_t rest = N % k;
  for (std::uint64_t r = 0; r < k; ++r) {
    const std::int64_t power = chi.power(static_cast<std::int64_t>(r));
    if (power < 0) continue;
    // Classes hit by the partial tail (M+full*k, M+N]: offsets 1..rest past M.
    const std::uint64_t offset = (r + k - M % k) % k;  // n = M + offset is in class r
    const std::uint64_t hits = full + ((offset >= 1 && offset <= rest) ? 1 : 0);
    if (hits) sum.add_power(static_cast<std::uint64_t>(power), static_cast<std::int64_t>(hits));
  }
  return sum;
}

std::complex<double> interval_sum(const DirichletCharacter& chi, std::uint64_t M, std::uint64_t N) {
  return interval_sum_exact(chi, M, N).to_complex();
}

double pv_extremal(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw DomainError("pv_extremal: character must be non-principal");
  const std::uint64_t k = chi.modulus();
  // Prefix sums are k-periodic because a full period sums to zero.
  std::vector<std::complex<double>> prefix(k);
  std::vector<std::complex<double>> roots(chi.exponent());
  for (std::uint32_t j = 0; j < roots.size(); ++j) roots[j] = CharValue::root(j, roots.size()).to_complex();
  std::complex<double> s{0, 0};
  for (std::uint64_t n = 1; n <= k; ++n) {
    const std::int64_t p = chi.power(static_cast<std::int64_t>(n));
    if (p >= 0) s += roots[static_cast<std::size_t>(p)];
    prefix[n % k] = s;
  }
  double best = 0;
  for (std::uint64_t a = 0; a < k; ++a) {
    for (std::uint64_t b = a + 1; b < k; ++b) best = std::max(best, std::abs(prefix[b] - prefix[a]));
  }
  return best;
}

CyclotomicInt prime_sum_exact(const DirichletCharacter& chi, const PrimeResidueCounts& counts) {
  if (counts.modulus() != chi.modulus()) throw DomainError("prime_sum: residue counts use a different modulus");
  CyclotomicInt sum(chi.exponent());
  for (std::uint64_t r = 0; r < counts.modulus(); ++r) {
    const std::int64_t p = chi.power(static_cast<std::int64_t>(r));
    if (p >= 0 && counts[r] > 0) sum.add_power(static_cast<std::uint64_t>(p), static_cast<std::int64_t>(counts[r]));
  }
  return sum;
}

std::complex<double> prime_sum(const DirichletCharacter& chi, double y) {
  return prime_sum_exact(chi, PrimeResidueCounts(y, chi.modulus())).to_complex();
}

std::string to_string(BoundLabel label) {
  switch (label) {
    case BoundLabel::polya_vinogradov: return "polya_vinogradov";
    case BoundLabel::prime_sum_unconditional: return "prime_sum_unconditional";
    case BoundLabel::prime_sum_grh: return "prime_sum_grh";
    case BoundLabel::mean_value: return "mean_value";
  }
  return "unknown";
}

BoundLabel parse_bound_label(const std::string& text) {
  if (text == "polya_vinogradov" || text == "pv") return BoundLabel::polya_vinogradov;
  if (text == "prime_sum_unconditional" || text == "prime-sum") return BoundLabel::prime_sum_unconditional;
  if (text == "prime_sum_grh" || text == "grh" || text == "grh-check") return BoundLabel::prime_sum_grh;
  if (text == "mean_value" || text == "mean-value") return BoundLabel::mean_value;
  throw DomainError("unknown bound label: " + text);
}

namespace {

struct Extremum {
  double value = 0;
  std::uint64_t index = 0;
};

// Max of f over the non-principal characters, deterministic in the presence of ties.
template <typename F>
Extremum max_over_nonprincipal(const std::vector<DirichletCharacter>& chars, unsigned threads, F&& f) {
  std::vector<double> values(chars.size(), -1.0);
  parallel_for(chars.size(), threads, [&](std::size_t i) {
    if (!chars[i].is_principal()) values[i] = f(chars[i]);
  });
  Extremum best{-1.0, 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > best.value) best = {values[i], i};
  }
  best.value = std::max(best.value, 0.0);
  return best;
}

}  // namespace

BoundProfile check_bound(const BoundRequest& request, const CharacterGroup& group) {
  BoundProfile out;
  out.label = request.label;
  out.k = group.modulus();
  const double k = static_cast<double>(group.modulus());
  const auto chars = group.characters();
  const unsigned threads = std::max(1u, request.threads);

  switch (request.label) {
    case BoundLabel::polya_vinogradov: {
      const auto best = max_over_nonprincipal(chars, threads, [](const DirichletCharacter& chi) { return pv_extremal(chi); });
      out.measured = best.value;
      out.extremal_character = best.index;
      out.bound = std::sqrt(k) * std::log(k);
      break;
    }
    case BoundLabel::prime_sum_unconditional:
    case BoundLabel::prime_sum_grh: {
      if (!(request.y >= 3)) throw DomainError("prime-sum bound check requires y >= 3");
      out.y = request.y;
      const PrimeResidueCounts counts(request.y, group.modulus());
      const auto best = max_over_nonprincipal(chars, threads, [&](const DirichletCharacter& chi) {
        return std::abs(prime_sum_exact(chi, counts).to_complex());
      });
      out.measured = best.value;
      out.extremal_character = best.index;
      if (request.label == BoundLabel::prime_sum_grh) {
        out.bound = std::sqrt(request.y) * std::log(k * request.y);
      } else {
        out.log_power = request.log_power;
        out.bound = std::sqrt(k) * request.y * std::pow(std::log(request.y), -request.log_power);
      }
      break;
    }
    case BoundLabel::mean_value: {
      const auto& a = request.weights;
      out.length = a.size();
      const std::uint64_t kk = group.modulus();
      double lhs = 0;
      for (const auto& chi : chars) {
        std::complex<double> s{0, 0};
        for (std::size_t n = 1; n <= a.size(); ++n) s += a[n - 1] * chi(static_cast<std::int64_t>(n)).to_complex();
        lhs += std::norm(s);
      }
      std::vector<std::complex<double>> by_class(kk, {0, 0});
      double mass = 0;
      for (std::size_t n = 1; n <= a.size(); ++n) {
        by_class[n % kk] += a[n - 1];
        mass += std::norm(a[n - 1]);
      }
      double parseval = 0;
      for (std::uint64_t r = 0; r < kk; ++r) {
        if (std::gcd(r, kk) == 1) parseval += std::norm(by_class[r]);
      }
      const double phi = static_cast<double>(group.size());
      out.measured = lhs;
      out.measured_parseval = phi * parseval;
      out.bound = phi * (static_cast<double>(a.size()) / k + 1.0) * mass;
      break;
    }
  }
  if (out.bound > 0) {
    out.ratio = out.measured / out.bound;
  } else {
    out.ratio = out.measured > 0 ? INFINITY : 0.0;
  }
  return out;
}

}  // namespace eoslab
