#include "eoslab/buchstab.hpp"

#include <cmath>
#include <string>

#include "eoslab/errors.hpp"

namespace eoslab {

BuchstabTable solve_buchstab(double u_max, double h) {
  if (!(h > 0)) throw DomainError("buchstab: step must be positive");
  if (h > 0.01) throw DomainError("buchstab: step must not exceed 0.01");
  if (!(u_max >= 2)) throw DomainError("buchstab: u_max must be >= 2");

  BuchstabTable t;
  t.per_unit_ = static_cast<std::size_t>(std::llround(1.0 / h));
  t.h_ = 1.0 / static_cast<double>(t.per_unit_);
  t.u_max_ = u_max;
  const std::size_t n = t.per_unit_;
  const auto last = static_cast<std::size_t>(std::ceil((u_max - 1.0) * static_cast<double>(n) - 1e-9));
  auto& w = t.values_;
  w.resize(last + 1);

  for (std::size_t i = 0; i <= std::min(last, n); ++i) w[i] = 1.0 / (1.0 + static_cast<double>(i) * t.h_);

  // On each step [u_{i-1}, u_i]:  u_i w_i = u_{i-1} w_{i-1} + h (w(u_{i-1}-1) + w(u_i - 1)) / 2.
  double uw = 2.0 * w[n];
  for (std::size_t i = n + 1; i <= last; ++i) {
    uw += 0.5 * t.h_ * (w[i - 1 - n] + w[i - n]);
    w[i] = uw / (1.0 + static_cast<double>(i) * t.h_);
  }
  return t;
}

double BuchstabTable::omega(double u) const {
  if (!(u >= 1.0)) throw DomainError("omega: u must be >= 1");
  if (u > u_max_ + 1e-12) throw DomainError("omega: u=" + std::to_string(u) + " beyond table range " + std::to_string(u_max_));
  if (u <= 2.0) return 1.0 / u;
  const double pos = (u - 1.0) * static_cast<double>(per_unit_);
  auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= values_.size()) return values_.back();
  const double frac = pos - static_cast<double>(i);
  return values_[i] + frac * (values_[i + 1] - values_[i]);
}

double phi_asymptotic(double x, double beta, const BuchstabTable& table) {
  if (!(x > 1)) throw DomainError("phi_asymptotic: x must exceed 1");
  if (!(beta > 0 && beta < 1)) throw DomainError("phi_asymptotic: beta must lie in (0, 1)");
  if (1.0 / beta > table.u_max() + 1e-12) throw DomainError("phi_asymptotic: 1/beta beyond table range");
  const double u = std::max(1.0, 1.0 / beta);
  return table.omega(u) * x / (beta * std::log(x));
}

std::vector<RichardsonSample> richardson_check(double u_max, double h, const std::vector<double>& points) {
  const BuchstabTable coarse = solve_buchstab(u_max, h);
  const BuchstabTable fine = solve_buchstab(u_max, h / 2);
  std::vector<RichardsonSample> out;
  out.reserve(points.size());
  for (const double u : points) {
    const double c = coarse.omega(u), f = fine.omega(u);
    out.push_back({u, c, f, c - f});
  }
  return out;
}

}  // namespace eoslab
