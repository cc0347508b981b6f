#pragma once

// Counting pairs (u, v), u rough and v prime, with uv = a (mod k), and the
// sieve machinery that compares the sequence
//
//     A = (c_r),  c_r = #{p <= y : (p, k) = 1, r = a * inv(p) (mod k)}
//
// with the constant sequence B = (1_r), both supported on [1, x].
// All sums here are exact integers; only lambda-scaled main terms are floating.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eoslab/arith.hpp"
#include "eoslab/charsums.hpp"
#include "eoslab/dirichlet.hpp"
#include "eoslab/errors.hpp"

namespace eoslab {

struct QueryParams {
  std::uint64_t k = 3;
  std::int64_t a = 1;
  double x = 2;
  double y = 2;
  double z = 0;
  std::optional<double> beta;
  unsigned min_u = 1;  // 1: u in [1, x] (sequence support); 2: u in [2, x]

  // z = x^beta.
  static QueryParams with_beta(std::uint64_t k, std::int64_t a, double x, double y, double beta, unsigned min_u = 1);

  // Throws DomainError on k <= 2, gcd(a, k) != 1, x or y < 0, bad beta or min_u.
  void validate() const;
  std::uint64_t x_floor() const { return floor_cutoff(x); }
  std::uint64_t residue() const;  // a mod k in [0, k)
};

// Weights xi_r for r in [1, floor(cutoff)], stored at index r (index 0 unused).
template <typename Weight = std::int64_t>
struct SiftingSequence {
  double cutoff = 0;
  std::vector<Weight> weights{Weight{}};

  std::uint64_t length() const noexcept { return weights.size() - 1; }
  const Weight& operator[](std::uint64_t r) const noexcept { return weights[r]; }

  static SiftingSequence constant(double cutoff, Weight value = Weight{1}) {
    SiftingSequence s;
    s.cutoff = cutoff;
    s.weights.assign(floor_cutoff(cutoff) + 1, value);
    s.weights[0] = Weight{};
    return s;
  }

  Weight total() const {
    Weight sum{};
    for (std::uint64_t r = 1; r <= length(); ++r) sum += weights[r];
    return sum;
  }
};

// The sequence B = (1_r) on [1, x].
inline SiftingSequence<> build_sequence_B(double x) { return SiftingSequence<>::constant(x); }

// The sequence A = (c_r) on [1, x]. Throws DomainError when gcd(a, k) != 1.
SiftingSequence<> build_sequence_A(const QueryParams& params);
SiftingSequence<> build_sequence_A(const QueryParams& params, const PrimeResidueCounts& primes);

// S(A, z) = sum of xi_r over r <= x with P^-(r) >= z (r = 1 always included).
template <typename Weight>
Weight sift(const SiftingSequence<Weight>& seq, double z, const FactorSieve& sieve) {
  if (seq.length() > sieve.limit()) throw CapacityError("sift: sequence longer than the factor sieve");
  const std::uint64_t t = ceil_threshold(z);
  Weight sum{};
  for (std::uint64_t r = 1; r <= seq.length(); ++r) {
    if (is_rough(r, t, sieve)) sum += seq[r];
  }
  return sum;
}

// A_s = (xi_{rs}) supported on r <= x / s.
template <typename Weight>
SiftingSequence<Weight> subsequence(const SiftingSequence<Weight>& seq, std::uint64_t s) {
  if (s == 0) throw DomainError("subsequence: s must be >= 1");
  SiftingSequence<Weight> out;
  out.cutoff = seq.cutoff / static_cast<double>(s);
  const std::uint64_t n = seq.length() / s;
  out.weights.assign(n + 1, Weight{});
  for (std::uint64_t r = 1; r <= n; ++r) out.weights[r] = seq[r * s];
  return out;
}

// S(A_s, w) computed in place, without materializing A_s.
template <typename Weight>
Weight sift_multiple(const SiftingSequence<Weight>& seq, std::uint64_t s, std::uint64_t threshold,
                     const FactorSieve& sieve) {
  Weight sum{};
  const std::uint64_t n = seq.length() / s;
  for (std::uint64_t r = 1; r <= n; ++r) {
    if (is_rough(r, threshold, sieve)) sum += seq[r * s];
  }
  return sum;
}

// S(A, z1) - S(A, z2) + sum_{z2 <= p < z1} S(A_p, p); zero for every sequence.
template <typename Weight>
Weight buchstab_identity_residual(const SiftingSequence<Weight>& seq, double z1, double z2, const FactorSieve& sieve) {
  if (!(z2 > 0) || z2 > z1) throw DomainError("buchstab identity requires 0 < z2 <= z1");
  if (seq.length() > sieve.limit()) throw CapacityError("buchstab identity: sequence longer than the factor sieve");
  const std::uint64_t lo = ceil_threshold(z2), hi = ceil_threshold(z1);
  Weight residual = sift(seq, z1, sieve) - sift(seq, z2, sieve);
  for (const std::uint32_t p : sieve.primes()) {
    if (p >= hi) break;
    if (p >= lo) residual += sift_multiple(seq, p, p, sieve);
  }
  return residual;
}

// N_k(a; x, y, z): #{(u, v) : min_u <= u <= x, P^-(u) >= z, v <= y prime, uv = a (mod k)}.
std::uint64_t count_Nk(const QueryParams& params, const FactorSieve& sieve);
std::uint64_t count_Nk(const QueryParams& params, const FactorSieve& sieve, const PrimeResidueCounts& primes);

// lambda = #P_k(y) / phi(k).
double lambda(const QueryParams& params);

// lambda * Phi(x, z).
double main_term(const QueryParams& params, const FactorSieve& sieve);

struct DecompositionReport {
  double exact_sum = 0;
  double main_term = 0;
  double remainder = 0;
  double lambda = 0;
  std::optional<double> bound_prediction;
  std::string prediction_label;
};

enum class RangeMode { up_to, dyadic };  // m <= M, or M < m <= 2M

// Type I (b absent) or Type II bilinear form. a[m] and b[n] are indexed
// directly by m and n; missing entries count as zero.
struct WeightedBilinearForm {
  std::uint64_t M = 1;
  RangeMode mode = RangeMode::up_to;
  std::vector<std::int64_t> a;
  std::optional<std::vector<std::int64_t>> b;

  bool contains(std::uint64_t m) const noexcept {
    return mode == RangeMode::up_to ? (m >= 1 && m <= M) : (m > M && m <= 2 * M);
  }
  std::int64_t a_at(std::uint64_t m) const noexcept { return m < a.size() ? a[m] : 0; }
  std::int64_t b_at(std::uint64_t n) const noexcept {
    if (!b) return 1;
    return n < b->size() ? (*b)[n] : 0;
  }
  // Throws ValidationError when |a_m| > tau(m) or |b_n| > tau(n).
  void validate() const;
};

struct TypeDecomposition {
  DecompositionReport report;
  std::int64_t exact_sum = 0;       // sum a_m b_n c_{mn}
  std::int64_t weight_sum = 0;      // sum a_m b_n over mn <= x
  std::int64_t nonunit_weight = 0;  // part of weight_sum with gcd(mn, k) > 1
  std::uint64_t phi = 1;
  std::uint64_t coprime_primes = 0;  // #P_k(y)
  // phi(k) * (exact - main): the direct remainder, scaled to an integer.
  std::int64_t remainder_scaled = 0;
  // sum_{chi != chi_0} conj(chi(a)) (sum a_m b_n chi(mn)) (sum_p chi(p)), reduced in Z[zeta_L].
  std::optional<std::int64_t> character_remainder_scaled;
  // #P_k(y) * nonunit_weight: the part of the main term chi_0 does not see.
  std::int64_t nonunit_correction_scaled = 0;

  // Direct remainder equals the character route plus the non-unit correction, exactly.
  bool routes_agree() const noexcept {
    return character_remainder_scaled && *character_remainder_scaled - nonunit_correction_scaled == remainder_scaled;
  }
};

TypeDecomposition type_decomposition(const QueryParams& params, const WeightedBilinearForm& form,
                                     const CharacterGroup& group);

// sum_{R <= r < 2R} c_r S(A_r, x^beta) against lambda * sum c_r S(B_r, x^beta).
// c[i] is the weight of r = R + i. Throws ValidationError when |c_r| > 1.
DecompositionReport harman_compare(const QueryParams& params, std::uint64_t R, std::span<const double> c,
                                   double beta, const FactorSieve& sieve);

struct SieveComponents {
  std::int64_t sifted = 0;  // S(seq, X)
  // sigma[j] for j = 1..7; unused entries stay zero (the 2-term branch fills 1 and 2).
  std::int64_t sigma[8] = {};
  // Sigma_7 restricted to x^{1-delta}/q < p < x/q^2.
  std::int64_t sigma7_truncated = 0;

  // S(X) - (S1 - S2 - S3), S2 - (S4 - S5), S5 - (S6 + S7); the 2-term branch uses S(X) - (S1 - S2).
  std::int64_t residual_top(bool five_term) const noexcept {
    return five_term ? sifted - (sigma[1] - sigma[2] - sigma[3]) : sifted - (sigma[1] - sigma[2]);
  }
  std::int64_t residual_sigma2() const noexcept { return sigma[2] - (sigma[4] - sigma[5]); }
  std::int64_t residual_sigma5() const noexcept { return sigma[5] - (sigma[6] + sigma[7]); }
};

struct HarmanDecomposition {
  double delta = 0;
  double x = 0;
  double X = 0;  // x^{1/2}
  double z = 0;  // x^{1 - 2 delta}
  double T = 0;  // x^{delta}
  bool five_term = false;
  SieveComponents a;  // sequence A
  SieveComponents b;  // sequence B (starred sums)

  bool identities_hold() const noexcept;
};

// Throws DomainError for delta outside (1/4, 2/5).
HarmanDecomposition harman_decompose(const QueryParams& params, double delta, const FactorSieve& sieve);

// Generic form, usable with any pair of integer sequences on [1, x].
SieveComponents harman_components(const SiftingSequence<>& seq, double x, double delta, const FactorSieve& sieve);

enum class Theorem { T1, T2, T3 };

std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& text);

struct RegimeConfig {
  Theorem theorem = Theorem::T1;
  double B = 1, C = 1;                // T1
  double theta1 = 1, theta2 = 0.5;    // T2
  double delta = 0.3;                 // T3
  double epsilon = 0.01;              // T2, T3
  double beta = 0.5;
};

struct ConstraintCheck {
  std::string name;
  std::string detail;
  bool satisfied = false;
};

struct RegimeVerdict {
  bool valid = true;
  std::vector<ConstraintCheck> constraints;
  std::optional<double> type1_exponent;                // Type I admissible for M << x^{exponent}
  std::optional<std::pair<double, double>> type2_window;  // Type II admissible for x^{lo} << M << x^{hi}
  std::optional<int> branch;                           // T3: 1 for delta <= 1/3, 2 above

  std::vector<std::string> violated() const;
};

RegimeVerdict validate_regime(const RegimeConfig& config);

struct TheoremReport {
  DecompositionReport decomposition;
  std::uint64_t exact = 0;
  double relative_error = 0;  // |exact / main - 1|, 0 when both vanish
  RegimeVerdict regime;
  // T3 branch 2: 0.7533 x y / (phi(k) log x log y).
  std::optional<double> lower_bound_prediction;
};

TheoremReport theorem_report(const QueryParams& params, const RegimeConfig& config, const FactorSieve& sieve);
TheoremReport theorem_report(const QueryParams& params, const RegimeConfig& config, const FactorSieve& sieve,
                             const PrimeResidueCounts& primes);

struct EoscRecord {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> uncovered;  // reduced residues not of the form p1 p2, p1 <= p2 <= k
};

// One record per k in [k_min, k_max]. Throws DomainError for k_min < 3.
std::vector<EoscRecord> eosc_scan(std::uint64_t k_min, std::uint64_t k_max, unsigned threads = 1);

}  // namespace eoslab
