#include "eoslab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "eoslab/errors.hpp"

namespace eoslab {

CharValue CharValue::root(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw DomainError("root of unity with zero denominator");
  numerator %= denominator;
  const std::uint64_t g = std::gcd(numerator, denominator);
  if (numerator == 0) return one();
  return CharValue{static_cast<std::uint32_t>(numerator / g), static_cast<std::uint32_t>(denominator / g), false};
}

CharValue CharValue::operator*(const CharValue& other) const {
  if (is_zero || other.is_zero) return zero();
  const std::uint64_t den = std::lcm<std::uint64_t>(denominator, other.denominator);
  const std::uint64_t num = numerator * (den / denominator) + other.numerator * (den / other.denominator);
  return root(num, den);
}

CharValue CharValue::conj() const {
  if (is_zero) return zero();
  return root(denominator - numerator, denominator);
}

std::complex<double> CharValue::to_complex() const {
  if (is_zero) return {0.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * numerator / denominator);
}

namespace {

// a / b for integer polynomials with monic b, exact.
std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t order) {
  if (order == 0) throw DomainError("cyclotomic polynomial of order 0");
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::int64_t> p(order + 1, 0);
  p[0] = -1;
  p[order] = 1;
  for (std::uint32_t d = 1; d < order; ++d) {
    if (order % d == 0) p = poly_divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(order, std::move(p)).first->second;
}

CyclotomicInt::CyclotomicInt(std::uint32_t order, std::int64_t constant) : coeff_(order == 0 ? 1 : order, 0) {
  coeff_[0] = constant;
}

void CyclotomicInt::add_power(std::uint64_t power, std::int64_t multiplicity) {
  coeff_[power % coeff_.size()] += multiplicity;
}

void CyclotomicInt::add(const CharValue& value, std::int64_t multiplicity) {
  if (value.is_zero) return;
  const std::uint32_t l = order();
  if (l % value.denominator != 0) throw DomainError("character value does not lie in Q(zeta_L)");
  add_power(std::uint64_t{value.numerator} * (l / value.denominator), multiplicity);
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (other.order() != order()) throw DomainError("cyclotomic orders differ");
  for (std::size_t j = 0; j < coeff_.size(); ++j) coeff_[j] += other.coeff_[j];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  if (other.order() != order()) throw DomainError("cyclotomic orders differ");
  for (std::size_t j = 0; j < coeff_.size(); ++j) coeff_[j] -= other.coeff_[j];
  return *this;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& other) const {
  if (other.order() != order()) throw DomainError("cyclotomic orders differ");
  const std::size_t l = coeff_.size();
  CyclotomicInt out(order());
  for (std::size_t i = 0; i < l; ++i) {
    if (coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (other.coeff_[j] != 0) out.coeff_[(i + j) % l] += coeff_[i] * other.coeff_[j];
    }
  }
  return out;
}

CyclotomicInt CyclotomicInt::conj() const {
  const std::size_t l = coeff_.size();
  CyclotomicInt out(order());
  for (std::size_t j = 0; j < l; ++j) out.coeff_[(l - j) % l] += coeff_[j];
  return out;
}

std::vector<std::int64_t> CyclotomicInt::reduced() const {
  const auto& phi = cyclotomic_polynomial(order());
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r = coeff_;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool CyclotomicInt::is_zero() const {
  for (const std::int64_t c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> CyclotomicInt::as_integer() const {
  const auto r = reduced();
  for (std::size_t j = 1; j < r.size(); ++j) {
    if (r[j] != 0) return std::nullopt;
  }
  return r.empty() ? 0 : r[0];
}

std::complex<double> CyclotomicInt::to_complex() const {
  const std::size_t l = coeff_.size();
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < l; ++j) {
    if (coeff_[j] != 0) sum += static_cast<double>(coeff_[j]) * std::polar(1.0, 2.0 * std::numbers::pi * j / l);
  }
  return sum;
}

}  // namespace eoslab
