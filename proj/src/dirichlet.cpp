#include "eoslab/dirichlet.hpp"

#include <numeric>
#include <string>

#include "eoslab/arith.hpp"
#include "eoslab/errors.hpp"

namespace eoslab {

namespace {

constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

std::uint64_t multiplicative_order_divides(std::uint64_t g, std::uint64_t n, std::uint64_t q) {
  return pow_mod(g, n, q) == 1 % q;
}

// Smallest generator of the cyclic group (Z/qZ)^*, q an odd prime power or 4.
std::uint64_t find_generator(std::uint64_t q, std::uint64_t p, std::uint64_t order) {
  const auto order_primes = factorize(order);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (const auto& [r, e] : order_primes) {
      if (multiplicative_order_divides(g, order / r, q)) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw DomainError("no generator found modulo " + std::to_string(q));
}

struct ComponentLogs {
  GroupComponent component;
  std::vector<std::uint32_t> log;  // indexed by residue mod component.modulus
};

std::vector<std::uint32_t> power_table(std::uint64_t g, std::uint32_t order, std::uint64_t q) {
  std::vector<std::uint32_t> log(q, kNoLog);
  std::uint64_t v = 1;
  for (std::uint32_t j = 0; j < order; ++j) {
    log[v] = j;
    v = mul_mod(v, g, q);
  }
  return log;
}

std::vector<ComponentLogs> decompose(std::uint64_t k) {
  std::vector<ComponentLogs> out;
  for (const auto& [p, e] : factorize(k)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        out.push_back({{4, 3, 2}, power_table(3, 2, 4)});
        continue;
      }
      // (Z/2^e)^* = <-1> x <5>
      const auto order5 = static_cast<std::uint32_t>(q / 4);
      const auto pow5 = power_table(5, order5, q);
      std::vector<std::uint32_t> log_minus(q, kNoLog), log_five(q, kNoLog);
      for (std::uint64_t n = 1; n < q; n += 2) {
        const bool neg = n % 4 == 3;
        log_minus[n] = neg ? 1 : 0;
        log_five[n] = pow5[neg ? q - n : n];
      }
      out.push_back({{q, q - 1, 2}, std::move(log_minus)});
      out.push_back({{q, 5, order5}, std::move(log_five)});
      continue;
    }
    const auto order = static_cast<std::uint32_t>(q / p * (p - 1));
    const std::uint64_t g = find_generator(q, p, order);
    out.push_back({{q, g, order}, power_table(g, order, q)});
  }
  return out;
}

}  // namespace

CharacterGroup::CharacterGroup(std::uint64_t k) {
  if (k <= 2) throw DomainError("character group modulus must exceed 2, got " + std::to_string(k));
  auto data = std::make_shared<Data>();
  data->k = k;
  data->phi = euler_phi(k);
  const auto parts = decompose(k);
  for (const auto& part : parts) {
    data->components.push_back(part.component);
    data->exponent = std::lcm(data->exponent, part.component.order);
  }
  const std::size_t width = std::max<std::size_t>(parts.size(), 1);
  data->residue_logs.assign(k * width, 0);
  for (std::uint64_t r = 0; r < k; ++r) {
    std::uint32_t* slot = &data->residue_logs[r * width];
    if (std::gcd(r, k) != 1) {
      slot[0] = kNoLog;
      continue;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) slot[i] = parts[i].log[r % parts[i].component.modulus];
  }
  data_ = std::move(data);
}

CharacterGroup build_character_group(std::uint64_t k) { return CharacterGroup(k); }

std::vector<std::uint32_t> CharacterGroup::logs(std::int64_t n) const {
  const auto k = static_cast<std::int64_t>(data_->k);
  std::int64_t r = n % k;
  if (r < 0) r += k;
  const std::size_t width = std::max<std::size_t>(data_->components.size(), 1);
  const std::uint32_t* slot = &data_->residue_logs[static_cast<std::size_t>(r) * width];
  if (slot[0] == kNoLog) return {};
  return std::vector<std::uint32_t>(slot, slot + data_->components.size());
}

std::uint64_t CharacterGroup::from_logs(std::span<const std::uint32_t> logs) const {
  const auto& comps = data_->components;
  if (logs.size() != comps.size()) throw DomainError("from_logs: wrong number of component logs");
  // Residue per distinct prime-power modulus, then CRT.
  std::uint64_t result = 0, modulus = 1;
  for (std::size_t i = 0; i < comps.size();) {
    const std::uint64_t q = comps[i].modulus;
    std::uint64_t residue = 1;
    for (; i < comps.size() && comps[i].modulus == q; ++i) {
      residue = mul_mod(residue, pow_mod(comps[i].generator, logs[i], q), q);
    }
    // result' = result (mod modulus), residue (mod q)
    const std::uint64_t t = mul_mod((residue + q - result % q) % q, mod_inverse(static_cast<std::int64_t>(modulus % q), q), q);
    result += modulus * t;
    modulus *= q;
  }
  // Leftover factor 2 (k = 2 * odd) imposes only oddness.
  const std::uint64_t k = data_->k;
  while (std::gcd(result, k) != 1) result += modulus;
  return result % k;
}

DirichletCharacter CharacterGroup::character(std::vector<std::uint32_t> exponents) const {
  return DirichletCharacter(data_, std::move(exponents));
}

DirichletCharacter CharacterGroup::principal() const {
  return character(std::vector<std::uint32_t>(data_->components.size(), 0));
}

std::vector<DirichletCharacter> CharacterGroup::characters() const {
  std::vector<DirichletCharacter> out;
  out.reserve(data_->phi);
  const auto& comps = data_->components;
  std::vector<std::uint32_t> t(comps.size(), 0);
  while (true) {
    out.push_back(character(t));
    std::size_t i = comps.size();
    while (i > 0) {
      --i;
      if (++t[i] < comps[i].order) break;
      t[i] = 0;
      if (i == 0) return out;
    }
    if (comps.empty()) return out;
  }
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup::Data> group,
                                       std::vector<std::uint32_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& comps = group_->components;
  if (exponents_.size() != comps.size()) throw DomainError("character exponent vector has wrong length");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (exponents_[i] >= comps[i].order) throw DomainError("character exponent out of range");
  }
  const std::uint64_t k = group_->k;
  const std::uint32_t l = group_->exponent;
  const std::size_t width = std::max<std::size_t>(comps.size(), 1);
  table_.assign(k, -1);
  for (std::uint64_t r = 0; r < k; ++r) {
    const std::uint32_t* slot = &group_->residue_logs[r * width];
    if (slot[0] == kNoLog) continue;
    std::uint64_t power = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      power += std::uint64_t{exponents_[i]} * slot[i] % comps[i].order * (l / comps[i].order);
    }
    table_[r] = static_cast<std::int32_t>(power % l);
  }
}

bool DirichletCharacter::is_principal() const noexcept {
  for (const auto t : exponents_) {
    if (t != 0) return false;
  }
  return true;
}

CharValue DirichletCharacter::operator()(std::int64_t n) const {
  const std::int64_t p = power(n);
  if (p < 0) return CharValue::zero();
  return CharValue::root(static_cast<std::uint64_t>(p), group_->exponent);
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& other) const {
  if (other.group_->k != group_->k) throw DomainError("characters have different moduli");
  std::vector<std::uint32_t> t(exponents_.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = (exponents_[i] + other.exponents_[i]) % group_->components[i].order;
  }
  return DirichletCharacter(group_, std::move(t));
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<std::uint32_t> t(exponents_.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::uint32_t d = group_->components[i].order;
    t[i] = (d - exponents_[i]) % d;
  }
  return DirichletCharacter(group_, std::move(t));
}

Rational orthogonality_sum(const CharacterGroup& group, std::int64_t a, std::int64_t r) {
  const std::uint64_t k = group.modulus();
  if (std::gcd(static_cast<std::uint64_t>((a % static_cast<std::int64_t>(k) + static_cast<std::int64_t>(k)) % static_cast<std::int64_t>(k)), k) != 1) {
    throw DomainError("orthogonality_sum: gcd(a, k) != 1");
  }
  const auto log_a = group.logs(a);
  const auto log_r = group.logs(r);
  const std::uint32_t l = group.exponent();
  const auto comps = group.components();
  CyclotomicInt total(l);
  if (!log_r.empty()) {
    // Walk every exponent vector t, accumulating t . (log r - log a) in units of 1/L.
    std::vector<std::uint32_t> t(comps.size(), 0);
    std::vector<std::uint64_t> step(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::uint32_t d = comps[i].order;
      step[i] = (log_r[i] + d - log_a[i]) % d * (l / d);
    }
    std::uint64_t power = 0;
    for (std::uint64_t count = 0; count < group.size(); ++count) {
      total.add_power(power);
      std::size_t i = comps.size();
      while (i > 0) {
        --i;
        power += step[i];
        if (++t[i] < comps[i].order) break;
        power -= step[i] * comps[i].order;
        t[i] = 0;
      }
    }
  }
  const auto value = total.as_integer();
  if (!value) throw std::logic_error("orthogonality sum is not rational");
  const auto phi = static_cast<std::int64_t>(group.size());
  const std::int64_t g = std::gcd(*value, phi);
  return Rational{*value / g, phi / g};
}

}  // namespace eoslab
