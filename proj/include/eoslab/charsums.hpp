#pragma once

// Interval and prime character sums, and empirical checks of the classical
// bounds they obey (Polya-Vinogradov, Siegel-Walfisz type, GRH, mean value).

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eoslab/cyclotomic.hpp"
#include "eoslab/dirichlet.hpp"

namespace eoslab {

// Number of primes p <= y in each residue class modulo k.
class PrimeResidueCounts {
 public:
  PrimeResidueCounts(double y, std::uint64_t k);
  PrimeResidueCounts(std::span<const std::uint32_t> primes_upto_y, std::uint64_t k);

  std::uint64_t modulus() const noexcept { return counts_.size(); }
  std::uint64_t operator[](std::uint64_t residue) const noexcept { return counts_[residue]; }
  // #P_k(y): primes not dividing k.
  std::uint64_t coprime_total() const noexcept { return coprime_total_; }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t coprime_total_ = 0;
};

// sum_{M < n <= M+N} chi(n), exactly.
CyclotomicInt interval_sum_exact(const DirichletCharacter& chi, std::uint64_t M, std::uint64_t N);
std::complex<double> interval_sum(const DirichletCharacter& chi, std::uint64_t M, std::uint64_t N);

// max over all windows of |sum_{M < n <= M+N} chi(n)|. Throws DomainError for chi_0.
double pv_extremal(const DirichletCharacter& chi);

// sum_{p <= y} chi(p), exactly.
CyclotomicInt prime_sum_exact(const DirichletCharacter& chi, const PrimeResidueCounts& counts);
std::complex<double> prime_sum(const DirichletCharacter& chi, double y);

enum class BoundLabel { polya_vinogradov, prime_sum_unconditional, prime_sum_grh, mean_value };

std::string to_string(BoundLabel label);
// Throws DomainError for an unknown label.
BoundLabel parse_bound_label(const std::string& text);

struct BoundRequest {
  BoundLabel label = BoundLabel::polya_vinogradov;
  double y = 0;          // prime-sum labels
  double log_power = 1;  // exponent A of the unconditional prime-sum bound
  // mean_value: weights a_1..a_N (index 0 holds a_1)
  std::vector<std::complex<double>> weights;
  unsigned threads = 1;
};

struct BoundProfile {
  BoundLabel label = BoundLabel::polya_vinogradov;
  std::uint64_t k = 0;
  double y = 0;
  std::uint64_t length = 0;  // N for mean_value
  double log_power = 0;
  double measured = 0;
  double bound = 0;
  double ratio = 0;
  // Index (into CharacterGroup::characters()) of the extremal character, when applicable.
  std::uint64_t extremal_character = 0;
  // mean_value: left side recomputed from residue-class sums (Parseval).
  double measured_parseval = 0;

  bool within_bound() const noexcept { return ratio <= 1.0; }
};

BoundProfile check_bound(const BoundRequest& request, const CharacterGroup& group);

}  // namespace eoslab
