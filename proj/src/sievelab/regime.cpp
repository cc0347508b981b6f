#include <cmath>
#include <sstream>
#include <string>

#include "eoslab/sievelab.hpp"

namespace eoslab {

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
  }
  return "?";
}

Theorem parse_theorem(const std::string& text) {
  if (text == "T1" || text == "t1" || text == "1") return Theorem::T1;
  if (text == "T2" || text == "t2" || text == "2") return Theorem::T2;
  if (text == "T3" || text == "t3" || text == "3") return Theorem::T3;
  throw DomainError("unknown theorem: " + text);
}

std::vector<std::string> RegimeVerdict::violated() const {
  std::vector<std::string> out;
  for (const auto& c : constraints) {
    if (!c.satisfied) out.push_back(c.name);
  }
  return out;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void check(RegimeVerdict& v, std::string name, bool ok, std::string detail) {
  v.constraints.push_back({std::move(name), std::move(detail), ok});
  v.valid = v.valid && ok;
}

}  // namespace

RegimeVerdict validate_regime(const RegimeConfig& c) {
  RegimeVerdict v;
  switch (c.theorem) {
    case Theorem::T1:
      check(v, "B > 0", c.B > 0, "B = " + fmt(c.B));
      check(v, "C > 0", c.C > 0, "C = " + fmt(c.C));
      check(v, "beta in (0, 1/2]", c.beta > 0 && c.beta <= 0.5, "beta = " + fmt(c.beta));
      break;
    case Theorem::T2: {
      const double t1 = c.theta1, t2 = c.theta2;
      check(v, "theta1 > 0", t1 > 0, "theta1 = " + fmt(t1));
      check(v, "theta2 > 0", t2 > 0, "theta2 = " + fmt(t2));
      check(v, "theta2 < (1 + theta1)/2", t2 < (1 + t1) / 2, fmt(t2) + " < " + fmt((1 + t1) / 2));
      check(v, "theta2 < (2 + 3 theta1)/5", t2 < (2 + 3 * t1) / 5, fmt(t2) + " < " + fmt((2 + 3 * t1) / 5));
      check(v, "beta in (0, 1/2]", c.beta > 0 && c.beta <= 0.5, "beta = " + fmt(c.beta));
      check(v, "beta < 1 + 2(theta1 - theta2)", c.beta < 1 + 2 * (t1 - t2),
            fmt(c.beta) + " < " + fmt(1 + 2 * (t1 - t2)));
      check(v, "epsilon > 0", c.epsilon > 0, "epsilon = " + fmt(c.epsilon));
      v.type1_exponent = 1 + (t1 - 3 * t2) / 2;
      v.type2_window = std::make_pair(t2 - t1, 1 + t1 - t2);
      break;
    }
    case Theorem::T3: {
      const double d = c.delta;
      check(v, "delta in (1/4, 2/5)", d > 0.25 && d < 0.4, "delta = " + fmt(d));
      check(v, "epsilon > 0", c.epsilon > 0, "epsilon = " + fmt(c.epsilon));
      if (d > 0.25 && d < 0.4) v.branch = d <= 1.0 / 3.0 ? 1 : 2;
      v.type1_exponent = 1 - 1.5 * d;
      v.type2_window = std::make_pair(d, 1 - d);
      break;
    }
  }
  return v;
}

TheoremReport theorem_report(const QueryParams& params, const RegimeConfig& config, const FactorSieve& sieve) {
  params.validate();
  return theorem_report(params, config, sieve, PrimeResidueCounts(params.y, params.k));
}

TheoremReport theorem_report(const QueryParams& params, const RegimeConfig& config, const FactorSieve& sieve,
                             const PrimeResidueCounts& primes) {
  params.validate();
  TheoremReport out;
  out.regime = validate_regime(config);
  out.exact = count_Nk(params, sieve, primes);
  const double phi = static_cast<double>(euler_phi(params.k));
  const double lam = static_cast<double>(primes.coprime_total()) / phi;
  const double main =
      lam == 0 ? 0.0 : lam * static_cast<double>(rough_count(RoughCountQuery{params.x, params.z, std::nullopt}, sieve));
  auto& d = out.decomposition;
  d.lambda = lam;
  d.exact_sum = static_cast<double>(out.exact);
  d.main_term = main;
  d.remainder = d.exact_sum - main;
  if (main > 0) {
    out.relative_error = std::abs(d.exact_sum / main - 1.0);
  } else {
    out.relative_error = out.exact == 0 ? 0.0 : INFINITY;
  }

  const double x = params.x, y = params.y, k = static_cast<double>(params.k);
  switch (config.theorem) {
    case Theorem::T1:
      if (y > 1) {
        d.bound_prediction = x * y / (phi * std::pow(std::log(y), config.C));
        d.prediction_label = "x y / (phi(k) log^C y)";
      }
      break;
    case Theorem::T2:
    case Theorem::T3:
      d.bound_prediction = std::pow(x, 1 - config.epsilon) * y / k;
      d.prediction_label = "x^{1-epsilon} y / k, prediction (o(1)->0)";
      if (out.regime.branch == 2 && x > 1 && y > 1) {
        out.lower_bound_prediction = 0.7533 * x * y / (phi * std::log(x) * std::log(y));
      }
      break;
  }
  return out;
}

}  // namespace eoslab
