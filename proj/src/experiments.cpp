#include "wdlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wdlab/greedy_dodgson.hpp"

namespace wdlab {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InvalidArgument("config: " + field + ": " + what);
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) bad(key, "missing");
  return j.at(key);
}

std::int64_t get_int(const json& j, const char* key, std::int64_t lo) {
  const auto& v = require(j, key);
  if (!v.is_number_integer()) bad(key, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < lo) bad(key, "must be >= " + std::to_string(lo));
  return x;
}

Rational get_rational(const json& v, const char* key) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad(key, "expected an integer or a \"p/q\" string");
}

Claim parse_claim(const std::string& s) {
  if (s == "greedy_success") return Claim::GreedySuccess;
  if (s == "concentration") return Claim::Concentration;
  if (s == "top_block") return Claim::TopBlock;
  if (s == "randomized_x3c") return Claim::RandomizedX3C;
  bad("claim", "unknown claim '" + s + "'");
}

ModelSpec parse_model(const json& j) {
  if (!j.is_object()) bad("model", "expected an object");
  const auto& kind = require(j, "kind");
  if (!kind.is_string()) bad("model.kind", "expected a string");
  ModelSpec spec;
  const auto k = kind.get<std::string>();
  if (k == "alpha_ic") {
    spec.kind = ModelSpec::Kind::AlphaIc;
    spec.alpha = get_rational(require(j, "alpha"), "model.alpha");
    if (spec.alpha < 0 || spec.alpha > 1) bad("model.alpha", "must lie in [0, 1]");
  } else if (k == "partial_alt") {
    spec.kind = ModelSpec::Kind::PartialAlt;
    spec.K = static_cast<int>(get_int(j, "K", 1));
  } else if (k == "synthetic_topk") {
    spec.kind = ModelSpec::Kind::SyntheticTopK;
  } else {
    bad("model.kind", "unknown model '" + k + "'");
  }
  return spec;
}

json model_to_json(const ModelSpec& s) {
  switch (s.kind) {
    case ModelSpec::Kind::AlphaIc:
      return {{"kind", "alpha_ic"}, {"alpha", to_string(s.alpha)}};
    case ModelSpec::Kind::PartialAlt:
      return {{"kind", "partial_alt"}, {"K", s.K}};
    case ModelSpec::Kind::SyntheticTopK:
      return {{"kind", "synthetic_topk"}};
  }
  return {};
}

X3CInstance parse_instance(const json& j) {
  if (!j.is_object()) bad("instances", "each instance must be an object");
  const auto q = static_cast<int>(get_int(j, "q", 1));
  const auto& subsets = require(j, "subsets");
  if (!subsets.is_array()) bad("instances.subsets", "expected an array");
  std::vector<X3CInstance::Triple> triples;
  for (const auto& t : subsets) {
    if (!t.is_array() || t.size() != 3) bad("instances.subsets", "each subset must have three elements");
    X3CInstance::Triple triple{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t[i].is_number_integer()) bad("instances.subsets", "elements must be integers");
      triple[i] = t[i].get<int>();
    }
    triples.push_back(triple);
  }
  return X3CInstance(q, std::move(triples));
}

bool concentration_claim(Claim c) { return c == Claim::GreedySuccess || c == Claim::Concentration; }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// Running rate sampled at about 200 evenly spaced points plus the last trial.
void add_plot_point(TrialReport& rep, std::int64_t done, std::int64_t hits, std::int64_t total) {
  const std::int64_t step = std::max<std::int64_t>(1, total / 200);
  if (done % step == 0 || done == total) {
    rep.plot.emplace_back(done, static_cast<double>(hits) / static_cast<double>(done));
  }
}

}  // namespace

// --- config -------------------------------------------------------------------

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("config: expected a JSON object");
  static const std::vector<std::string> known{"claim", "m",         "n",         "trials", "seed",
                                              "model", "parameters", "instances", "m_total", "output"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) bad(key, "unknown field");
  }

  ExperimentConfig c;
  const auto& claim = require(j, "claim");
  if (!claim.is_string()) bad("claim", "expected a string");
  c.claim = parse_claim(claim.get<std::string>());
  c.trials = get_int(j, "trials", 1);
  const auto& seed = require(j, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    bad("seed", "expected a non-negative integer");
  }
  c.seed = seed.get<std::uint64_t>();
  c.model = parse_model(require(j, "model"));
  if (j.contains("output")) {
    if (!j["output"].is_string()) bad("output", "expected a string");
    c.output = j["output"].get<std::string>();
  }

  if (concentration_claim(c.claim)) {
    c.m = static_cast<int>(get_int(j, "m", 3));
    c.n = static_cast<int>(get_int(j, "n", 1));
    if (c.model.kind != ModelSpec::Kind::AlphaIc) bad("model", "greedy_success and concentration need alpha_ic");
    if (c.model.alpha < 1 - Rational(1, c.m)) bad("model.alpha", "must be >= 1 - 1/m");
    if (j.contains("parameters")) {
      const auto& p = j["parameters"];
      if (p == "random") {
        c.random_parameters = true;
      } else if (p != "adversarial") {
        bad("parameters", "expected \"adversarial\" or \"random\"");
      }
    }
    if (j.contains("instances") || j.contains("m_total")) bad("instances", "only for top_block and randomized_x3c");
  } else {
    const auto& inst = require(j, "instances");
    if (!inst.is_array() || inst.empty()) bad("instances", "expected a non-empty array");
    for (const auto& i : inst) c.instances.push_back(parse_instance(i));
    c.m_total = static_cast<int>(get_int(j, "m_total", 1));
    for (const auto& i : c.instances) {
      const int m1 = 2 * i.q() + i.s() + 1;
      if (c.m_total < m1) bad("m_total", "smaller than the reduction's " + std::to_string(m1) + " alternatives");
      if (c.model.kind == ModelSpec::Kind::PartialAlt && (c.model.K < m1 || c.model.K > c.m_total)) {
        bad("model.K", "must lie in [m1, m_total] = [" + std::to_string(m1) + ", " + std::to_string(c.m_total) + "]");
      }
    }
    if (j.contains("m") || j.contains("n") || j.contains("parameters")) {
      bad("m", "m, n and parameters apply only to greedy_success and concentration");
    }
  }
  return c;
}

json ExperimentConfig::to_json() const {
  json j{{"claim", to_string(claim)}, {"trials", trials}, {"seed", seed}, {"model", model_to_json(model)}};
  if (concentration_claim(claim)) {
    j["m"] = m;
    j["n"] = n;
    j["parameters"] = random_parameters ? "random" : "adversarial";
  } else {
    j["m_total"] = m_total;
    auto arr = json::array();
    for (const auto& i : instances) {
      auto subsets = json::array();
      for (const auto& t : i.subsets()) subsets.push_back({t[0], t[1], t[2]});
      arr.push_back({{"q", i.q()}, {"subsets", subsets}});
    }
    j["instances"] = arr;
  }
  return j;
}

std::string ExperimentConfig::hash() const {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a(to_json().dump());
  return os.str();
}

// --- reports ------------------------------------------------------------------

double binomial_se(double p, std::int64_t trials) {
  p = std::clamp(p, 0.0, 1.0);
  return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

Check make_check(std::string name, double empirical, double bound, std::string bound_expr, std::int64_t trials,
                 bool lower) {
  Check c;
  c.name = std::move(name);
  c.empirical = empirical;
  c.bound = bound;
  c.bound_expr = std::move(bound_expr);
  c.standard_error = binomial_se(bound, trials);
  c.lower = lower;
  const double slack = 3 * c.standard_error;
  if (lower && bound <= 0) {
    c.verdict = Verdict::Vacuous;
  } else if (!lower && bound >= 1) {
    c.verdict = Verdict::Vacuous;
  } else if (lower) {
    c.verdict = empirical >= bound - slack ? Verdict::Pass : Verdict::Fail;
  } else {
    c.verdict = empirical <= bound + slack ? Verdict::Pass : Verdict::Fail;
  }
  return c;
}

bool TrialReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.gating && c.verdict == Verdict::Fail; });
}

std::string TrialReport::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  return os.str();
}

json TrialReport::summary() const {
  auto arr = json::array();
  bool any_vacuous = false;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"empirical", c.empirical},
                   {"bound", c.bound},
                   {"bound_expr", c.bound_expr},
                   {"standard_error", c.standard_error},
                   {"slack", 3 * c.standard_error},
                   {"direction", c.lower ? "at_least" : "at_most"},
                   {"gating", c.gating},
                   {"verdict", to_string(c.verdict)}});
    if (c.gating && c.verdict == Verdict::Vacuous) any_vacuous = true;
  }
  // a vacuous bound is never reported as an overall pass
  const auto overall = !passed() ? Verdict::Fail : any_vacuous ? Verdict::Vacuous : Verdict::Pass;
  return {{"claim", to_string(config.claim)},
          {"config", config.to_json()},
          {"config_hash", config.hash()},
          {"seed", config.seed},
          {"trials", config.trials},
          {"checks", arr},
          {"aggregates", aggregates},
          {"verdict", to_string(overall)}};
}

std::string TrialReport::plot_data() const {
  std::ostringstream os;
  os.precision(17);
  os << "# trials " << plot_label << '\n';
  for (const auto& [x, y] : plot) os << x << ' ' << y << '\n';
  return os.str();
}

void TrialReport::write() const {
  if (config.output.empty()) return;
  const auto put = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + path);
    f << text;
    if (!f) throw InvalidArgument("cannot write " + path);
  };
  put(config.output + ".csv", csv());
  put(config.output + ".json", summary().dump(2) + "\n");
  put(config.output + ".dat", plot_data());
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  const auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
  const auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(trial), hi(trial), lo(stream), hi(stream)};
  return Rng(seq);
}

// --- greedy_success / concentration ---------------------------------------------------

namespace {

PreferenceModel alpha_model(const ExperimentConfig& cfg, int m) {
  return PreferenceModel::alpha_ic(m, cfg.model.alpha);
}

// Stream 1 holds the shared random parameters; trials use stream 0.
ParameterProfile concentration_parameters(const ExperimentConfig& cfg) {
  const auto model = alpha_model(cfg, cfg.m);
  std::vector<Ranking> params;
  params.reserve(static_cast<std::size_t>(cfg.n));
  if (cfg.random_parameters) {
    auto rng = trial_rng(cfg.seed, 0, 1);
    for (int i = 0; i < cfg.n; ++i) params.push_back(uniform_ranking(cfg.m, rng));
  } else {
    params.assign(static_cast<std::size_t>(cfg.n), Ranking::identity(cfg.m));
  }
  return ParameterProfile(model, params);
}

void require_concentration(const ExperimentConfig& cfg) {
  if (!concentration_claim(cfg.claim)) throw InvalidArgument("experiment: not a greedy_success/concentration config");
}

struct Tails {
  std::vector<std::int64_t> above;     // #{i : b above a}, per b
  std::vector<std::int64_t> adjacent;  // #{i : b immediately above a}, per b
};

Tails tail_counts(const Profile& p, Alternative a) {
  const int m = p.num_alternatives();
  Tails t{std::vector<std::int64_t>(static_cast<std::size_t>(m), 0),
          std::vector<std::int64_t>(static_cast<std::size_t>(m), 0)};
  for (const auto& r : p) {
    const int pa = r.position(a);
    for (int k = 0; k < pa; ++k) ++t.above[static_cast<std::size_t>(r[static_cast<std::size_t>(k)])];
    if (pa > 0) ++t.adjacent[static_cast<std::size_t>(r[static_cast<std::size_t>(pa - 1)])];
  }
  return t;
}

// Exact comparisons against n/2 + beta and beta.
bool above_tail(std::int64_t count, int n, const Rational& beta) { return Rational(count) > Rational(n, 2) + beta; }
bool adjacent_tail(std::int64_t count, const Rational& beta) { return Rational(count) < beta; }

double tail_bound(int m, int n) { return std::exp(-static_cast<double>(n) / (72.0 * m * m)); }

std::string mn(const ExperimentConfig& cfg) {
  return " with m=" + std::to_string(cfg.m) + ", n=" + std::to_string(cfg.n);
}

}  // namespace

Profile concentration_trial_profile(const ExperimentConfig& cfg, std::int64_t trial) {
  require_concentration(cfg);
  static thread_local std::optional<std::pair<std::string, ParameterProfile>> cache;
  const auto key = cfg.hash();
  if (!cache || cache->first != key) cache.emplace(key, concentration_parameters(cfg));
  auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
  return sample_profile(cache->second, rng);
}

Alternative concentration_target(const ExperimentConfig& cfg) { return cfg.m - 1; }

Rational concentration_beta(int m, int n) { return (Rational(3, 4) - Rational(1, 2 * m)) * n / m; }

TrialReport run_definitely_rate(const ExperimentConfig& cfg) {
  if (cfg.claim != Claim::GreedySuccess) throw InvalidArgument("run_definitely_rate: claim must be greedy_success");
  TrialReport rep;
  rep.config = cfg;
  rep.columns = {"trial", "score", "certainty", "above_tail", "adjacent_tail"};
  rep.plot_label = "definitely_rate";
  const auto a = concentration_target(cfg);
  const auto beta = concentration_beta(cfg.m, cfg.n);
  std::int64_t definitely = 0;
  std::int64_t any_tail = 0;
  std::int64_t unexplained = 0;
  std::vector<std::int64_t> above_hits(static_cast<std::size_t>(cfg.m), 0);
  std::vector<std::int64_t> adjacent_hits(static_cast<std::size_t>(cfg.m), 0);
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    const auto p = concentration_trial_profile(cfg, t);
    const auto g = greedy_dodgson(p, a);
    const auto tails = tail_counts(p, a);
    bool hit_above = false;
    bool hit_adjacent = false;
    for (Alternative b = 0; b < cfg.m; ++b) {
      if (b == a) continue;
      const auto ub = static_cast<std::size_t>(b);
      if (above_tail(tails.above[ub], cfg.n, beta)) {
        hit_above = true;
        ++above_hits[ub];
      }
      if (adjacent_tail(tails.adjacent[ub], beta)) {
        hit_adjacent = true;
        ++adjacent_hits[ub];
      }
    }
    const bool def = g.certainty == Certainty::Definitely;
    definitely += def;
    any_tail += hit_above || hit_adjacent;
    unexplained += !def && !hit_above && !hit_adjacent;
    rep.rows.push_back({std::to_string(t), std::to_string(g.score), std::string(to_string(g.certainty)),
                        hit_above ? "1" : "0", hit_adjacent ? "1" : "0"});
    add_plot_point(rep, t + 1, definitely, cfg.trials);
  }

  const double T = static_cast<double>(cfg.trials);
  const double rate = static_cast<double>(definitely) / T;
  const double bound = 1 - 2.0 * (cfg.m - 1) * tail_bound(cfg.m, cfg.n);
  rep.checks.push_back(make_check("definitely_rate", rate, bound, "1 - 2*(m-1)*exp(-n/(72*m^2))" + mn(cfg),
                                  cfg.trials, true));
  auto def5 = make_check("failure_rate_threshold", rate, 1 - 1.0 / cfg.m, "1 - 1/m" + mn(cfg), cfg.trials, true);
  def5.gating = false;
  rep.checks.push_back(def5);

  // Maybe outcomes should be explained by the concentration tails.
  std::int64_t max_tail = 0;
  for (Alternative b = 0; b < cfg.m; ++b) {
    max_tail = std::max({max_tail, above_hits[static_cast<std::size_t>(b)], adjacent_hits[static_cast<std::size_t>(b)]});
  }
  const double maybe_rate = 1 - rate;
  const double union_rate = std::min(1.0, 2.0 * (cfg.m - 1) * static_cast<double>(max_tail) / T);
  rep.checks.push_back(make_check("maybe_within_tail_union", maybe_rate, union_rate,
                                  "2*(m-1)*max empirical tail frequency" + mn(cfg), cfg.trials, false));

  rep.aggregates = {{"definitely", definitely},
                    {"maybe", cfg.trials - definitely},
                    {"trials_with_tail_event", any_tail},
                    {"maybe_without_tail_event", unexplained},
                    {"target", a},
                    {"beta", to_string(beta)},
                    {"tail_bound", tail_bound(cfg.m, cfg.n)}};
  return rep;
}

TrialReport run_concentration_tails(const ExperimentConfig& cfg) {
  if (cfg.claim != Claim::Concentration) throw InvalidArgument("run_concentration_tails: claim must be concentration");
  TrialReport rep;
  rep.config = cfg;
  const auto a = concentration_target(cfg);
  const auto beta = concentration_beta(cfg.m, cfg.n);
  rep.columns = {"trial"};
  for (Alternative b = 0; b < cfg.m; ++b) {
    if (b == a) continue;
    rep.columns.push_back("above_" + std::to_string(b));
    rep.columns.push_back("adjacent_" + std::to_string(b));
  }
  rep.plot_label = "any_tail_rate";
  std::vector<std::int64_t> above_hits(static_cast<std::size_t>(cfg.m), 0);
  std::vector<std::int64_t> adjacent_hits(static_cast<std::size_t>(cfg.m), 0);
  std::int64_t any_tail = 0;
  for (std::int64_t t = 0; t < cfg.trials; ++t) {
    const auto p = concentration_trial_profile(cfg, t);
    const auto tails = tail_counts(p, a);
    bool hit = false;
    std::vector<std::string> row{std::to_string(t)};
    for (Alternative b = 0; b < cfg.m; ++b) {
      if (b == a) continue;
      const auto ub = static_cast<std::size_t>(b);
      row.push_back(std::to_string(tails.above[ub]));
      row.push_back(std::to_string(tails.adjacent[ub]));
      const bool x = above_tail(tails.above[ub], cfg.n, beta);
      const bool y = adjacent_tail(tails.adjacent[ub], beta);
      above_hits[ub] += x;
      adjacent_hits[ub] += y;
      hit = hit || x || y;
    }
    any_tail += hit;
    rep.rows.push_back(std::move(row));
    add_plot_point(rep, t + 1, any_tail, cfg.trials);
  }

  const double T = static_cast<double>(cfg.trials);
  const double bound = tail_bound(cfg.m, cfg.n);
  json per_b = json::object();
  std::int64_t max_above = 0;
  std::int64_t max_adjacent = 0;
  for (Alternative b = 0; b < cfg.m; ++b) {
    if (b == a) continue;
    const auto ub = static_cast<std::size_t>(b);
    per_b[std::to_string(b)] = {{"above", static_cast<double>(above_hits[ub]) / T},
                                {"adjacent", static_cast<double>(adjacent_hits[ub]) / T}};
    max_above = std::max(max_above, above_hits[ub]);
    max_adjacent = std::max(max_adjacent, adjacent_hits[ub]);
  }
  rep.checks.push_back(make_check("above_tail_max", static_cast<double>(max_above) / T, bound,
                                  "exp(-n/(72*m^2)); event #{i: b above a} > n/2 + beta" + mn(cfg), cfg.trials,
                                  false));
  rep.checks.push_back(make_check("adjacent_tail_max", static_cast<double>(max_adjacent) / T, bound,
                                  "exp(-n/(72*m^2)); event #{i: b immediately above a} < beta" + mn(cfg),
                                  cfg.trials, false));
  rep.aggregates = {{"target", a},
                    {"beta", to_string(beta)},
                    {"tail_frequencies", per_b},
                    {"trials_with_tail_event", any_tail},
                    {"max_tail_frequency", static_cast<double>(std::max(max_above, max_adjacent)) / T}};
  return rep;
}

// --- top_block / randomized_x3c -------------------------------------------------

namespace {

PreferenceModel reduction_model(const ExperimentConfig& cfg, const DodgsonReductionOutput& out) {
  const int m1 = out.profile.num_alternatives();
  const int n = out.profile.num_voters();
  switch (cfg.model.kind) {
    case ModelSpec::Kind::AlphaIc:
      return PreferenceModel::alpha_ic(cfg.m_total, cfg.model.alpha);
    case ModelSpec::Kind::PartialAlt:
      return PreferenceModel::partial_alt(cfg.m_total, cfg.model.K);
    case ModelSpec::Kind::SyntheticTopK:
      return PreferenceModel::alpha_ic(cfg.m_total, Rational(1, 2 * static_cast<std::int64_t>(m1) * n));
  }
  throw InvalidArgument("unknown model");
}

// Probability that one agent keeps its parameter's top m1 block.
double per_agent_preservation(const PreferenceModel& model, int m1) {
  const int m = model.num_alternatives();
  if (model.kind() == PreferenceModel::Kind::PartialAlt) return 1.0;
  double uniform = 1.0;  // (m - m1)! / m!
  for (int i = m - m1 + 1; i <= m; ++i) uniform /= i;
  const double alpha = to_double(model.alpha());
  return (1 - alpha) + alpha * uniform;
}

void require_reduction(const ExperimentConfig& cfg) {
  if (concentration_claim(cfg.claim)) throw InvalidArgument("experiment: not a top_block/randomized_x3c config");
}

std::string instance_label(std::size_t idx) { return "instance_" + std::to_string(idx); }

}  // namespace

TrialReport run_top_block_preservation(const ExperimentConfig& cfg) {
  if (cfg.claim != Claim::TopBlock) throw InvalidArgument("run_top_block_preservation: claim must be top_block");
  require_reduction(cfg);
  TrialReport rep;
  rep.config = cfg;
  rep.columns = {"instance", "trial", "top_preserved"};
  rep.plot_label = "preservation_rate";
  const auto total = cfg.trials * static_cast<std::int64_t>(cfg.instances.size());
  std::int64_t done = 0;
  std::int64_t kept_all = 0;
  auto per = json::array();
  for (std::size_t idx = 0; idx < cfg.instances.size(); ++idx) {
    const auto out = x3c_to_dodgson(cfg.instances[idx]);
    const auto model = reduction_model(cfg, out);
    const auto pp = build_padded_parameter_profile(out, model);
    const int m1 = out.profile.num_alternatives();
    std::int64_t kept = 0;
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
      auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(t), idx + 1);
      const bool ok = top_matches(sample_profile(pp, rng), out.profile);
      kept += ok;
      kept_all += ok;
      rep.rows.push_back({std::to_string(idx), std::to_string(t), ok ? "1" : "0"});
      add_plot_point(rep, ++done, kept_all, total);
    }
    const double rate = static_cast<double>(kept) / static_cast<double>(cfg.trials);
    const auto label = instance_label(idx);
    rep.checks.push_back(make_check(label + "_preservation", rate, 0.5, "1/2", cfg.trials, true));
    if (model.kind() == PreferenceModel::Kind::PartialAlt) {
      rep.checks.push_back(make_check(label + "_preservation_exact", rate, 1.0, "1 (partial_alt with K >= m1)",
                                      cfg.trials, true));
    }
    const double agent = per_agent_preservation(model, m1);
    per.push_back({{"m1", m1},
                   {"n", out.profile.num_voters()},
                   {"model", model.describe()},
                   {"preserved", kept},
                   {"rate", rate},
                   {"analytic_rate", std::pow(agent, out.profile.num_voters())}});
  }
  rep.aggregates = {{"instances", per}};
  return rep;
}

TrialReport run_randomized_x3c(const ExperimentConfig& cfg, const SearchBudget& budget) {
  if (cfg.claim != Claim::RandomizedX3C) throw InvalidArgument("run_randomized_x3c: claim must be randomized_x3c");
  require_reduction(cfg);
  TrialReport rep;
  rep.config = cfg;
  rep.columns = {"instance", "trial", "has_cover", "answer", "top_preserved", "decider"};
  rep.plot_label = "no_rate";
  const auto total = cfg.trials * static_cast<std::int64_t>(cfg.instances.size());
  std::int64_t done = 0;
  std::int64_t no_all = 0;
  const auto decider = exact_dodgson_decider(budget);
  auto per = json::array();
  for (std::size_t idx = 0; idx < cfg.instances.size(); ++idx) {
    const auto& inst = cfg.instances[idx];
    const bool truth = x3c_bruteforce(inst);
    const auto out = x3c_to_dodgson(inst);
    const auto model = reduction_model(cfg, out);
    std::int64_t no = 0;
    std::int64_t preserved = 0;
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
      auto rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(t), idx + 1);
      const auto trace = randomized_x3c(out, decider, model, rng);
      no += !trace.answer;
      no_all += !trace.answer;
      preserved += trace.top_preserved;
      rep.rows.push_back({std::to_string(idx), std::to_string(t), truth ? "1" : "0", trace.answer ? "yes" : "no",
                          trace.top_preserved ? "1" : "0",
                          trace.decider_outcome ? std::string(to_string(*trace.decider_outcome)) : "skipped"});
      add_plot_point(rep, ++done, no_all, total);
    }
    const double no_rate = static_cast<double>(no) / static_cast<double>(cfg.trials);
    const auto label = instance_label(idx);
    if (truth) {
      rep.checks.push_back(make_check(label + "_no_false_no", no_rate, 0.0, "0 (one-sided error)", cfg.trials, false));
    } else {
      rep.checks.push_back(make_check(label + "_no_rate", no_rate, 1.0 / 6, "1/6", cfg.trials, true));
    }
    per.push_back({{"has_cover", truth},
                   {"model", model.describe()},
                   {"no_answers", no},
                   {"top_preserved", preserved},
                   {"no_rate", no_rate}});
  }
  rep.aggregates = {{"instances", per}};
  return rep;
}

TrialReport run_experiment(const ExperimentConfig& cfg, const SearchBudget& budget) {
  switch (cfg.claim) {
    case Claim::GreedySuccess:
      return run_definitely_rate(cfg);
    case Claim::Concentration:
      return run_concentration_tails(cfg);
    case Claim::TopBlock:
      return run_top_block_preservation(cfg);
    case Claim::RandomizedX3C:
      return run_randomized_x3c(cfg, budget);
  }
  throw InvalidArgument("unknown claim");
}

std::string to_string(Claim c) {
  switch (c) {
    case Claim::GreedySuccess:
      return "greedy_success";
    case Claim::Concentration:
      return "concentration";
    case Claim::TopBlock:
      return "top_block";
    case Claim::RandomizedX3C:
      return "randomized_x3c";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Vacuous:
      return "vacuous";
  }
  return "?";
}

}  // namespace wdlab
