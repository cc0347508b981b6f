#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eoslab/arith.hpp"
#include "eoslab/buchstab.hpp"
#include "eoslab/charsums.hpp"
#include "eoslab/dirichlet.hpp"
#include "eoslab/errors.hpp"
#include "eoslab/integrals.hpp"
#include "eoslab/parallel.hpp"
#include "eoslab/sievelab.hpp"

namespace eoslab::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

struct Settings {
  // global
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  // query
  std::uint64_t k = 5;
  std::int64_t a = 1;
  double x = 100;
  double y = 100;
  std::optional<double> z;
  std::optional<double> beta;
  unsigned min_u = 1;
  // per subcommand
  std::string mode = "pv";
  double log_power = 1;
  std::uint64_t length = 100;
  std::uint64_t M = 1;
  std::string range = "dyadic";
  std::string weights = "unit";
  std::vector<double> deltas;
  double h = 1e-4;
  double u_max = 10;
  double sample_step = 0.5;
  double tolerance = 1e-9;
  std::uint64_t k_min = 3;
  std::uint64_t k_max = 100;
  std::string theorem = "T1";
  double B = 1, C = 1, theta1 = 1, theta2 = 0.5, delta = 0.35, epsilon = 0.01;
};

// Flattens nested objects into dotted keys; arrays become JSON text.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& cells) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, cells);
    } else if (value.is_string()) {
      cells.emplace_back(name, value.get<std::string>());
    } else {
      cells.emplace_back(name, value.dump());
    }
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

class Writer {
 public:
  Writer(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const Json& record) {
    if (format_ == Format::json) {
      out_ << record.dump() << '\n';
      return;
    }
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(record, "", cells);
    if (format_ == Format::csv) {
      if (!header_written_) {
        for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_escape(cells[i].first);
        out_ << '\n';
        header_written_ = true;
      }
      for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_escape(cells[i].second);
      out_ << '\n';
      return;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? " " : "") << cells[i].first << '=' << cells[i].second;
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  Format format_;
  bool header_written_ = false;
};

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

QueryParams query(const Settings& s) {
  if (s.beta) return QueryParams::with_beta(s.k, s.a, s.x, s.y, *s.beta, s.min_u);
  QueryParams p;
  p.k = s.k;
  p.a = s.a;
  p.x = s.x;
  p.y = s.y;
  p.z = s.z.value_or(0.0);
  p.min_u = s.min_u;
  return p;
}

Json query_json(const Settings& s) {
  Json j;
  j["k"] = s.k;
  j["a"] = s.a;
  j["x"] = s.x;
  j["y"] = s.y;
  j["z"] = optional_json(s.z);
  j["beta"] = optional_json(s.beta);
  j["min_u"] = s.min_u;
  return j;
}

FactorSieve sieve_for(double x) { return FactorSieve(std::max<std::uint64_t>(2, floor_cutoff(x))); }

RegimeConfig regime_config(const Settings& s) {
  RegimeConfig c;
  c.theorem = parse_theorem(s.theorem);
  c.B = s.B;
  c.C = s.C;
  c.theta1 = s.theta1;
  c.theta2 = s.theta2;
  c.delta = s.delta;
  c.epsilon = s.epsilon;
  c.beta = s.beta.value_or(0.5);
  return c;
}

Json regime_params(const Settings& s) {
  return Json{{"theorem", s.theorem}, {"B", s.B},       {"C", s.C},
              {"theta1", s.theta1},   {"theta2", s.theta2}, {"delta", s.delta},
              {"epsilon", s.epsilon}};
}

Json verdict_json(const RegimeVerdict& v) {
  Json constraints = Json::array();
  for (const auto& c : v.constraints) {
    constraints.push_back(Json{{"name", c.name}, {"detail", c.detail}, {"satisfied", c.satisfied}});
  }
  Json window = nullptr;
  if (v.type2_window) window = Json::array({v.type2_window->first, v.type2_window->second});
  return Json{{"valid", v.valid},
              {"violated", v.violated()},
              {"type1_exponent", optional_json(v.type1_exponent)},
              {"type2_window", window},
              {"branch", optional_json(v.branch)},
              {"constraints", constraints}};
}

Json report_json(const DecompositionReport& r) {
  return Json{{"exact_sum", r.exact_sum},
              {"main_term", r.main_term},
              {"remainder", r.remainder},
              {"lambda", r.lambda},
              {"bound_prediction", optional_json(r.bound_prediction)},
              {"prediction_label", r.prediction_label}};
}

void cmd_count(const Settings& s, Writer& w, std::ostream&) {
  const QueryParams p = query(s);
  p.validate();
  const auto sieve = sieve_for(p.x);
  const auto t = theorem_report(p, regime_config(s), sieve);
  Json params = query_json(s);
  params.update(regime_params(s));
  w.write(Json{{"command", "count"},
               {"params", params},
               {"exact", t.exact},
               {"main_term", t.decomposition.main_term},
               {"remainder", t.decomposition.remainder},
               {"lambda", t.decomposition.lambda},
               {"relative_error", t.relative_error},
               {"prediction", optional_json(t.decomposition.bound_prediction)},
               {"prediction_label", t.decomposition.prediction_label},
               {"lower_bound_prediction", optional_json(t.lower_bound_prediction)},
               {"regime", verdict_json(t.regime)}});
}

void cmd_sequence(const Settings& s, Writer& w, std::ostream&) {
  const auto seq = build_sequence_A(query(s));
  const Json params = query_json(s);
  for (std::uint64_t r = 1; r <= seq.length(); ++r) {
    w.write(Json{{"command", "sequence"}, {"params", params}, {"r", r}, {"c", seq[r]}});
  }
}

std::vector<std::complex<double>> random_weights(std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-10, 10);
  std::vector<std::complex<double>> w(n);
  for (auto& v : w) v = {static_cast<double>(dist(rng)), static_cast<double>(dist(rng))};
  return w;
}

void cmd_charsum(const Settings& s, Writer& w, std::ostream&) {
  BoundRequest req;
  req.label = parse_bound_label(s.mode);
  req.y = s.y;
  req.log_power = s.log_power;
  req.threads = resolve_threads(s.threads);
  if (req.label == BoundLabel::mean_value) {
    if (s.length < 1) throw ValidationError("--length must be >= 1");
    req.weights = s.weights == "random" ? random_weights(s.length, s.seed)
                                        : std::vector<std::complex<double>>(s.length, {1.0, 0.0});
  }
  const CharacterGroup g(s.k);
  const auto prof = check_bound(req, g);
  Json params{{"mode", to_string(req.label)}, {"k", s.k}, {"y", s.y}, {"log_power", s.log_power}};
  if (req.label == BoundLabel::mean_value) {
    params["length"] = s.length;
    params["weights"] = s.weights;
    params["seed"] = s.seed;
  }
  w.write(Json{{"command", "charsum"},
               {"params", params},
               {"label", to_string(prof.label)},
               {"measured", prof.measured},
               {"bound", prof.bound},
               {"ratio", prof.ratio},
               {"within_bound", prof.within_bound()},
               {"extremal_character", prof.extremal_character},
               {"measured_parseval", prof.measured_parseval}});
}

std::vector<std::int64_t> weight_vector(std::uint64_t n, const std::string& kind, std::mt19937_64& rng) {
  std::vector<std::int64_t> v(n + 1, 0);
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (kind == "unit") {
      v[m] = 1;
    } else {
      const auto tau = static_cast<std::int64_t>(divisor_count(m));
      v[m] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * tau + 1)) - tau;
    }
  }
  return v;
}

void cmd_type(const Settings& s, Writer& w, std::ostream&, bool type2) {
  if (s.weights != "unit" && s.weights != "random") throw ValidationError("--weights must be unit or random");
  const QueryParams p = query(s);
  p.validate();
  std::mt19937_64 rng(s.seed);
  WeightedBilinearForm form;
  form.M = s.M;
  const std::uint64_t xf = p.x_floor();
  if (type2) {
    if (s.range != "dyadic" && s.range != "up-to") throw ValidationError("--range must be dyadic or up-to");
    form.mode = s.range == "dyadic" ? RangeMode::dyadic : RangeMode::up_to;
    form.a = weight_vector(std::min(2 * s.M, xf), s.weights, rng);
    form.b = weight_vector(xf, s.weights, rng);
  } else {
    form.a = weight_vector(std::min(s.M, xf), s.weights, rng);
  }
  const auto d = type_decomposition(p, form, CharacterGroup(p.k));
  Json params = query_json(s);
  params["M"] = s.M;
  params["weights"] = s.weights;
  params["seed"] = s.seed;
  if (type2) params["range"] = s.range;
  Json rec{{"command", type2 ? "type2" : "type1"}, {"params", params}};
  rec.update(report_json(d.report));
  rec["exact_sum_int"] = d.exact_sum;
  rec["remainder_scaled"] = d.remainder_scaled;
  rec["character_remainder_scaled"] = optional_json(d.character_remainder_scaled);
  rec["nonunit_correction_scaled"] = d.nonunit_correction_scaled;
  rec["routes_agree"] = d.routes_agree();
  w.write(rec);
}

void cmd_buchstab(const Settings& s, Writer& w, std::ostream&) {
  if (!(s.sample_step > 0)) throw ValidationError("--sample-step must be positive");
  const auto table = solve_buchstab(s.u_max, s.h);
  const Json params{{"u_max", s.u_max}, {"h", s.h}, {"sample_step", s.sample_step}};
  const auto n = static_cast<std::uint64_t>(std::floor((s.u_max - 1.0) / s.sample_step + 1e-9));
  for (std::uint64_t i = 0; i <= n; ++i) {
    const double u = 1.0 + static_cast<double>(i) * s.sample_step;
    w.write(Json{{"command", "buchstab"}, {"params", params}, {"step", table.step()}, {"u", u}, {"omega", table.omega(u)}});
  }
}

Json components_json(const SieveComponents& c) {
  Json sigma = Json::array();
  for (int j = 1; j <= 7; ++j) sigma.push_back(c.sigma[j]);
  return Json{{"sifted", c.sifted}, {"sigma", sigma}, {"sigma7_truncated", c.sigma7_truncated}};
}

void cmd_harman(const Settings& s, Writer& w, std::ostream&) {
  Settings t = s;
  if (!t.beta) t.beta = 0.5;
  t.z.reset();
  const QueryParams p = query(t);
  p.validate();
  const auto sieve = sieve_for(p.x);
  const auto h = harman_decompose(p, s.delta, sieve);
  Json params = query_json(t);
  params["delta"] = s.delta;
  w.write(Json{{"command", "harman"},
               {"params", params},
               {"X", h.X},
               {"z_harman", h.z},
               {"T", h.T},
               {"five_term", h.five_term},
               {"A", components_json(h.a)},
               {"B", components_json(h.b)},
               {"residual_top_A", h.a.residual_top(h.five_term)},
               {"residual_top_B", h.b.residual_top(h.five_term)},
               {"residual_sigma2_A", h.five_term ? h.a.residual_sigma2() : 0},
               {"residual_sigma5_A", h.five_term ? h.a.residual_sigma5() : 0},
               {"residual_sigma2_B", h.five_term ? h.b.residual_sigma2() : 0},
               {"residual_sigma5_B", h.five_term ? h.b.residual_sigma5() : 0},
               {"identities_hold", h.identities_hold()}});
}

void cmd_integrals(const Settings& s, Writer& w, std::ostream&) {
  std::vector<double> grid = s.deltas;
  if (grid.empty()) grid = {0.34, 0.35, 0.36, 0.38, 0.39};
  const auto table = solve_buchstab(s.u_max, s.h);
  const auto [b1, b2] = closed_form_bounds();
  for (const double delta : grid) {
    const auto r = compute_I(delta, table, s.tolerance);
    w.write(Json{{"command", "integrals"},
                 {"params", {{"delta", delta}, {"h", s.h}, {"u_max", s.u_max}, {"tolerance", s.tolerance}}},
                 {"I1", r.I1},
                 {"I2", r.I2},
                 {"I", r.I},
                 {"constant", r.lower_bound_constant},
                 {"error_estimate", r.error_estimate},
                 {"I1_region_empty", r.I1_region_empty},
                 {"I2_region_empty", r.I2_region_empty},
                 {"closed_form_I1", b1},
                 {"closed_form_I2", b2}});
  }
}

void cmd_eosc(const Settings& s, Writer& w, std::ostream& err) {
  if (s.k_min < 3) throw DomainError("--k-min must be >= 3");
  if (s.k_max < s.k_min) throw ValidationError("--k-max must be >= --k-min");
  const unsigned threads = resolve_threads(s.threads);
  const Json params{{"k_min", s.k_min}, {"k_max", s.k_max}};
  constexpr std::uint64_t kBlock = 250;
  std::uint64_t exceptions = 0;
  for (std::uint64_t lo = s.k_min; lo <= s.k_max; lo += kBlock) {
    const std::uint64_t hi = std::min(s.k_max, lo + kBlock - 1);
    for (const auto& rec : eosc_scan(lo, hi, threads)) {
      if (!rec.uncovered.empty()) ++exceptions;
      w.write(Json{{"command", "eosc"}, {"params", params}, {"k", rec.k}, {"uncovered", rec.uncovered}});
    }
    err << Json{{"progress", "eosc"}, {"done", hi}, {"k_max", s.k_max}, {"exceptions", exceptions}}.dump() << '\n';
  }
}

void cmd_regime(const Settings& s, Writer& w, std::ostream&) {
  const auto v = validate_regime(regime_config(s));
  Json params = regime_params(s);
  params["beta"] = s.beta.value_or(0.5);
  Json rec{{"command", "regime"}, {"params", params}};
  rec.update(verdict_json(v));
  w.write(rec);
}

void add_query_options(CLI::App* sub, Settings& s, bool with_z) {
  sub->add_option("--k", s.k, "modulus k >= 3")->capture_default_str();
  sub->add_option("--a", s.a, "residue class a, coprime to k")->capture_default_str();
  sub->add_option("--x", s.x, "range of u")->capture_default_str();
  sub->add_option("--y", s.y, "range of the primes v")->capture_default_str();
  sub->add_option("--beta", s.beta, "z = x^beta, beta in (0, 1/2]");
  if (with_z) sub->add_option("--z", s.z, "roughness threshold")->excludes("--beta");
  sub->add_option("--min-u", s.min_u, "lower end of u: 1 or 2")->capture_default_str();
}

void add_regime_options(CLI::App* sub, Settings& s) {
  sub->add_option("--theorem", s.theorem, "T1 | T2 | T3")->capture_default_str();
  sub->add_option("--B", s.B)->capture_default_str();
  sub->add_option("--C", s.C)->capture_default_str();
  sub->add_option("--theta1", s.theta1)->capture_default_str();
  sub->add_option("--theta2", s.theta2)->capture_default_str();
  sub->add_option("--delta", s.delta)->capture_default_str();
  sub->add_option("--epsilon", s.epsilon)->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact sieve and character-sum experiments on primes in residue classes", "eoslab"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", s.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", s.output, "write records to this file instead of stdout");
  app.add_option("--threads", s.threads, "worker threads (0: THREADS env or hardware)")->capture_default_str();
  app.add_option("--seed", s.seed, "seed for random weights")->capture_default_str();

  std::vector<std::pair<CLI::App*, std::function<void(Writer&)>>> commands;
  auto add = [&](const char* name, const char* help, std::function<void(Writer&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  auto* count = add("count", "N_k(a; x, y, z) with main term and regime verdict",
                    [&](Writer& w) { cmd_count(s, w, err); });
  add_query_options(count, s, true);
  add_regime_options(count, s);

  add_query_options(add("sequence", "dump c_r for r <= x", [&](Writer& w) { cmd_sequence(s, w, err); }), s, true);

  auto* charsum = add("charsum", "character-sum bound profiles", [&](Writer& w) { cmd_charsum(s, w, err); });
  charsum->add_option("--mode", s.mode, "pv | prime-sum | grh-check | mean-value")->capture_default_str();
  charsum->add_option("--k", s.k)->capture_default_str();
  charsum->add_option("--y", s.y)->capture_default_str();
  charsum->add_option("--log-power", s.log_power, "exponent A of the unconditional bound")->capture_default_str();
  charsum->add_option("--length", s.length, "N for mean-value")->capture_default_str();
  charsum->add_option("--weights", s.weights, "unit | random")
      ->check(CLI::IsMember({"unit", "random"}))
      ->capture_default_str();

  for (const bool type2 : {false, true}) {
    auto* sub = add(type2 ? "type2" : "type1", type2 ? "Type II bilinear decomposition" : "Type I decomposition",
                    [&, type2](Writer& w) { cmd_type(s, w, err, type2); });
    add_query_options(sub, s, true);
    sub->add_option("--M", s.M)->capture_default_str();
    sub->add_option("--weights", s.weights, "unit | random (divisor-bounded)")->capture_default_str();
    if (type2) sub->add_option("--range", s.range, "dyadic | up-to")->capture_default_str();
  }

  auto* buch = add("buchstab", "solve omega and sample it", [&](Writer& w) { cmd_buchstab(s, w, err); });
  buch->add_option("--h", s.h)->capture_default_str();
  buch->add_option("--u-max", s.u_max)->capture_default_str();
  buch->add_option("--sample-step", s.sample_step)->capture_default_str();

  auto* harman = add("harman", "Sigma_1..Sigma_7 decomposition residuals", [&](Writer& w) { cmd_harman(s, w, err); });
  add_query_options(harman, s, false);
  harman->add_option("--delta", s.delta)->capture_default_str();

  auto* integ = add("integrals", "I(delta) = I1 + I2 over a delta grid", [&](Writer& w) { cmd_integrals(s, w, err); });
  integ->add_option("--delta", s.deltas, "delta values in (1/3, 2/5); repeatable");
  integ->add_option("--h", s.h)->capture_default_str();
  integ->add_option("--u-max", s.u_max)->capture_default_str();
  integ->add_option("--tolerance", s.tolerance)->capture_default_str();

  auto* eosc = add("eosc", "uncovered residues per modulus", [&](Writer& w) { cmd_eosc(s, w, err); });
  eosc->add_option("--k-min", s.k_min)->capture_default_str();
  eosc->add_option("--k-max", s.k_max)->capture_default_str();

  auto* regime = add("regime", "parameter-regime constraints", [&](Writer& w) { cmd_regime(s, w, err); });
  add_regime_options(regime, s);
  regime->add_option("--beta", s.beta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!s.output.empty()) {
    file.open(s.output);
    if (!file) {
      err << "error: cannot open " << s.output << '\n';
      return kExitValidation;
    }
    sink = &file;
  }
  const Format format = s.format == "csv" ? Format::csv : s.format == "text" ? Format::text : Format::json;
  Writer writer(*sink, format);
  try {
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) fn(writer);
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::length_error& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::bad_alloc&) {
    err << "capacity error: out of memory\n";
    return kExitCapacity;
  }
  return kExitOk;
}

}  // namespace eoslab::cli
