#pragma once

// The double integral that measures the dropped Sigma_7^* term in the
// lower-bound sieve:
//
//   I(delta) = int_{1-2 delta}^{delta} int_{max(a2, 1-delta-a2)}^{min(delta, 1-2 a2)}
//                omega((1 - a1 - a2) / a2) / (a2^2 a1)  d a1 d a2,
//
// split at a2 = (1 - delta)/2 into I1 (upper part) and I2 (lower part).

#include <utility>

#include "eoslab/buchstab.hpp"

namespace eoslab {

struct IntegralResult {
  double delta = 0;
  double I1 = 0;
  double I2 = 0;
  double I = 0;
  double lower_bound_constant = 1;  // 1 - I
  double error_estimate = 0;
  bool I1_region_empty = false;
  bool I2_region_empty = false;
};

// omega((1 - a1 - a2)/a2) / (a2^2 a1); zero where the omega argument is below 1.
// Throws CapacityError when the argument exceeds the table.
double integrand(double alpha1, double alpha2, const BuchstabTable& table);

// Throws DomainError unless 1/3 < delta < 2/5.
IntegralResult compute_I(double delta, const BuchstabTable& table, double tolerance = 1e-9);

// Upper bounds from omega <= 1 and the widened delta ranges:
// ((1/3)(log(256/81) - 1), (5/3) log(9/8)).
std::pair<double, double> closed_form_bounds();

}  // namespace eoslab
