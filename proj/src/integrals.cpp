#include "eoslab/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "eoslab/errors.hpp"
#include "eoslab/quadrature.hpp"

namespace eoslab {

namespace {

constexpr double kArgSnap = 1e-12;

struct Piecewise {
  double value = 0;
  double error = 0;
};

// Integrates f over [a, b], restarting the adaptive rule at every interior breakpoint.
template <typename F>
Piecewise integrate_pieces(F&& f, double a, double b, std::vector<double> cuts, double tol) {
  Piecewise out;
  if (!(b > a)) return out;
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double prev = a;
  for (const double c : cuts) {
    if (c <= prev || c > b) continue;
    const auto r = adaptive_simpson(f, prev, c, tol * (c - prev) / (b - a));
    out.value += r.value;
    out.error += r.error;
    prev = c;
  }
  return out;
}

}  // namespace

double integrand(double alpha1, double alpha2, const BuchstabTable& table) {
  if (!(alpha1 > 0 && alpha2 > 0)) throw DomainError("integrand: alpha1 and alpha2 must be positive");
  double u = (1.0 - alpha1 - alpha2) / alpha2;
  if (u < 1.0 - kArgSnap) return 0.0;
  u = std::max(u, 1.0);
  if (u > table.u_max()) throw CapacityError("integrand: omega argument beyond the Buchstab table");
  return table.omega(u) / (alpha2 * alpha2 * alpha1);
}

IntegralResult compute_I(double delta, const BuchstabTable& table, double tolerance) {
  if (!(delta > 1.0 / 3.0 && delta < 0.4)) throw DomainError("compute_I: delta must lie in (1/3, 2/5)");
  IntegralResult out;
  out.delta = delta;
  const double inner_tol = tolerance * 1e-2;
  double inner_error = 0;

  // Inner integral over alpha1, with the region clip min{delta, 1-2a2} >= max{a2, 1-delta-a2}.
  auto inner = [&](double a2) {
    const double lo = std::max(a2, 1.0 - delta - a2);
    const double hi = std::min(delta, 1.0 - 2.0 * a2);
    if (!(hi > lo)) return 0.0;
    // omega's argument crosses 2 at a1 = 1 - 3 a2.
    const auto r = integrate_pieces([&](double a1) { return integrand(a1, a2, table); }, lo, hi, {1.0 - 3.0 * a2},
                                    inner_tol);
    inner_error = std::max(inner_error, r.error);
    return r.value;
  };

  const double split = (1.0 - delta) / 2.0;
  const std::vector<double> kinks = {delta / 2.0, 0.25, (1.0 - delta) / 3.0, 1.0 / 3.0};

  const double i2_lo = 1.0 - 2.0 * delta;
  const auto i2 = integrate_pieces(inner, i2_lo, split, kinks, tolerance);
  // Beyond a2 = 1/3 the inner range is empty.
  const double i1_hi = std::min(delta, 1.0 / 3.0);
  const auto i1 = integrate_pieces(inner, split, i1_hi, kinks, tolerance);

  out.I1 = i1.value;
  out.I2 = i2.value;
  out.I = out.I1 + out.I2;
  out.lower_bound_constant = 1.0 - out.I;
  out.I1_region_empty = !(i1_hi > split);
  out.I2_region_empty = !(split > i2_lo);
  out.error_estimate = i1.error + i2.error + inner_error * (delta - i2_lo);
  return out;
}

std::pair<double, double> closed_form_bounds() {
  return {(std::log(256.0 / 81.0) - 1.0) / 3.0, 5.0 / 3.0 * std::log(9.0 / 8.0)};
}

}  // namespace eoslab
