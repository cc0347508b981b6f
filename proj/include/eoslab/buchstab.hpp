#pragma once

// Buchstab's function: omega(u) = 1/u on [1, 2], (u omega(u))' = omega(u - 1) for u > 2.

#include <cstdint>
#include <vector>

namespace eoslab {

class BuchstabTable {
 public:
  double u_max() const noexcept { return u_max_; }
  double step() const noexcept { return h_; }
  std::size_t steps_per_unit() const noexcept { return per_unit_; }
  // omega(1 + i h)
  const std::vector<double>& grid() const noexcept { return values_; }

  // Exact 1/u on [1, 2], linear interpolation of the grid above.
  // Throws DomainError outside [1, u_max].
  double omega(double u) const;

 private:
  friend BuchstabTable solve_buchstab(double u_max, double h);
  double u_max_ = 2;
  double h_ = 1e-4;
  std::size_t per_unit_ = 10000;
  std::vector<double> values_;
};

// Method of steps with the composite trapezoid rule. h is rounded to 1/round(1/h)
// so that unit shifts land on grid points. Requires u_max >= 2 and 0 < h <= 0.01.
BuchstabTable solve_buchstab(double u_max, double h = 1e-4);

inline double omega(const BuchstabTable& table, double u) { return table.omega(u); }

// omega(1/beta) x / (beta log x): the density of x^beta-rough numbers up to x.
double phi_asymptotic(double x, double beta, const BuchstabTable& table);

struct RichardsonSample {
  double u;
  double coarse;  // step h
  double fine;    // step h/2
  double difference;
};

// Compares solutions at h and h/2 on the given points.
std::vector<RichardsonSample> richardson_check(double u_max, double h, const std::vector<double>& points);

}  // namespace eoslab
