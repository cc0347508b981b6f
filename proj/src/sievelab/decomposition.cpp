#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "eoslab/sievelab.hpp"

namespace eoslab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("exact sum overflows 64 bits");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw CapacityError("exact sum overflows 64 bits");
  return out;
}

// max over non-principal chi of |sum_{p <= y} chi(p)|: the measured Delta(k, y).
double measured_delta(const std::vector<DirichletCharacter>& chars, const PrimeResidueCounts& primes) {
  double best = 0;
  for (const auto& chi : chars) {
    if (!chi.is_principal()) best = std::max(best, std::abs(prime_sum_exact(chi, primes).to_complex()));
  }
  return best;
}

double type2_shape(double x, double M, double k) {
  return x / k + std::sqrt(M * x / k) + x / std::sqrt(M * k) + std::sqrt(x);
}

}  // namespace

void WeightedBilinearForm::validate() const {
  if (M < 1 && mode == RangeMode::up_to) throw ValidationError("bilinear form: M must be >= 1");
  for (std::uint64_t m = 1; m < a.size(); ++m) {
    if (static_cast<std::uint64_t>(std::llabs(a[m])) > divisor_count(m)) {
      throw ValidationError("weight a_" + std::to_string(m) + " violates |a_m| <= tau(m)");
    }
  }
  if (b) {
    for (std::uint64_t n = 1; n < b->size(); ++n) {
      if (static_cast<std::uint64_t>(std::llabs((*b)[n])) > divisor_count(n)) {
        throw ValidationError("weight b_" + std::to_string(n) + " violates |b_n| <= tau(n)");
      }
    }
  }
}

TypeDecomposition type_decomposition(const QueryParams& params, const WeightedBilinearForm& form,
                                     const CharacterGroup& group) {
  params.validate();
  form.validate();
  const std::uint64_t k = params.k;
  if (group.modulus() != k) throw DomainError("character group modulus differs from k");
  const PrimeResidueCounts primes(params.y, k);
  const SiftingSequence<> seq = build_sequence_A(params, primes);
  const std::uint64_t n_max = params.x_floor();

  // w_r = sum_{mn = r, m in range} a_m b_n
  std::vector<std::int64_t> w(n_max + 1, 0);
  const std::uint64_t m_hi = std::min<std::uint64_t>(n_max, form.mode == RangeMode::up_to ? form.M : 2 * form.M);
  for (std::uint64_t m = 1; m <= m_hi; ++m) {
    if (!form.contains(m) || form.a_at(m) == 0) continue;
    const std::int64_t am = form.a_at(m);
    for (std::uint64_t n = 1; n <= n_max / m; ++n) {
      const std::int64_t bn = form.b_at(n);
      if (bn != 0) w[m * n] = checked_add(w[m * n], checked_mul(am, bn));
    }
  }

  TypeDecomposition out;
  out.phi = group.size();
  out.coprime_primes = primes.coprime_total();
  std::vector<std::int64_t> by_class(k, 0);
  for (std::uint64_t r = 1; r <= n_max; ++r) {
    if (w[r] == 0) continue;
    out.exact_sum = checked_add(out.exact_sum, checked_mul(w[r], seq[r]));
    out.weight_sum = checked_add(out.weight_sum, w[r]);
    if (std::gcd(r, k) != 1) out.nonunit_weight = checked_add(out.nonunit_weight, w[r]);
    by_class[r % k] = checked_add(by_class[r % k], w[r]);
  }
  const auto phi = static_cast<std::int64_t>(out.phi);
  const auto np = static_cast<std::int64_t>(out.coprime_primes);
  out.remainder_scaled = checked_add(checked_mul(phi, out.exact_sum), -checked_mul(np, out.weight_sum));
  out.nonunit_correction_scaled = checked_mul(np, out.nonunit_weight);

  // Character route: sum over chi != chi_0 of conj(chi(a)) * S_chi * P_chi in Z[zeta_L].
  const std::uint32_t l = group.exponent();
  const auto chars = group.characters();
  CyclotomicInt total(l);
  for (const auto& chi : chars) {
    if (chi.is_principal()) continue;
    CyclotomicInt s(l);
    for (std::uint64_t r = 0; r < k; ++r) {
      const std::int64_t p = chi.power(static_cast<std::int64_t>(r));
      if (p >= 0 && by_class[r] != 0) s.add_power(static_cast<std::uint64_t>(p), by_class[r]);
    }
    CyclotomicInt a_conj(l);
    a_conj.add(chi(params.a).conj());
    total += a_conj * s * prime_sum_exact(chi, primes);
  }
  out.character_remainder_scaled = total.as_integer();

  const double lam = static_cast<double>(np) / static_cast<double>(phi);
  out.report.lambda = lam;
  out.report.exact_sum = static_cast<double>(out.exact_sum);
  out.report.main_term = lam * static_cast<double>(out.weight_sum);
  out.report.remainder = static_cast<double>(out.remainder_scaled) / static_cast<double>(phi);

  const double delta = measured_delta(chars, primes);
  const double kd = static_cast<double>(k);
  const double M = static_cast<double>(form.M);
  if (form.mode == RangeMode::up_to) {
    out.report.bound_prediction = delta * M * std::sqrt(kd);
    out.report.prediction_label = "type I: Delta(k,y) M k^{1/2}, measured Delta, o(1)->0";
  } else {
    out.report.bound_prediction = delta * type2_shape(params.x, M, kd);
    out.report.prediction_label = "type II: Delta(k,y)(x/k + (Mx/k)^{1/2} + x/(Mk)^{1/2} + x^{1/2}), measured Delta, o(1)->0";
  }
  return out;
}

DecompositionReport harman_compare(const QueryParams& params, std::uint64_t R, std::span<const double> c,
                                   double beta, const FactorSieve& sieve) {
  params.validate();
  if (R < 1) throw DomainError("harman_compare: R must be >= 1");
  if (c.size() != R) throw ValidationError("harman_compare: expected one weight per r in [R, 2R)");
  for (const double w : c) {
    if (!(std::abs(w) <= 1.0)) throw ValidationError("harman_compare: weights must satisfy |c_r| <= 1");
  }
  if (!(beta > 0 && beta <= 0.5)) throw DomainError("harman_compare: beta must lie in (0, 1/2]");
  const PrimeResidueCounts primes(params.y, params.k);
  const SiftingSequence<> a_seq = build_sequence_A(params, primes);
  const SiftingSequence<> b_seq = build_sequence_B(params.x);
  if (a_seq.length() > sieve.limit()) throw CapacityError("harman_compare: x exceeds sieve limit");
  const std::uint64_t t = ceil_threshold(std::pow(params.x, beta));

  DecompositionReport out;
  out.lambda = static_cast<double>(primes.coprime_total()) / static_cast<double>(euler_phi(params.k));
  double lhs = 0, rhs = 0;
  for (std::uint64_t i = 0; i < R; ++i) {
    if (c[i] == 0) continue;
    const std::uint64_t r = R + i;
    lhs += c[i] * static_cast<double>(sift_multiple(a_seq, r, t, sieve));
    rhs += c[i] * static_cast<double>(sift_multiple(b_seq, r, t, sieve));
  }
  out.exact_sum = lhs;
  out.main_term = out.lambda * rhs;
  out.remainder = out.exact_sum - out.main_term;

  const CharacterGroup group(params.k);
  const double delta = measured_delta(group.characters(), primes);
  const double logx = std::log(std::max(params.x, 2.0));
  out.bound_prediction = delta * type2_shape(params.x, std::sqrt(params.x), static_cast<double>(params.k)) * logx * logx * logx;
  out.prediction_label = "Y log^3 x with Y from the type II shape at M = x^{1/2}, measured Delta, o(1)->0";
  return out;
}

}  // namespace eoslab
