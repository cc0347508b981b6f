#pragma once

#include <cmath>
#include <functional>

namespace eoslab {

struct QuadratureResult {
  double value = 0;
  double error = 0;  // estimated absolute error
  long evaluations = 0;
};

namespace detail {

template <typename F>
void simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol, int depth,
                  QuadratureResult& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  acc.evaluations += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    acc.value += left + right + delta / 15.0;
    acc.error += std::abs(delta) / 15.0;
    return;
  }
  simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1, acc);
  simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1, acc);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction on [a, b].
template <typename F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 40) {
  QuadratureResult acc;
  if (!(b > a)) return acc;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  acc.evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth, acc);
  return acc;
}

}  // namespace eoslab
