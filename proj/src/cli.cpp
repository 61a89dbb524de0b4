#include "wdlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdlab/experiments.hpp"
#include "wdlab/greedy_dodgson.hpp"
#include "wdlab/io.hpp"
#include "wdlab/models.hpp"
#include "wdlab/reductions.hpp"

namespace wdlab {

using nlohmann::json;

SearchBudget budget_from_env() {
  SearchBudget b;
  if (const char* v = std::getenv("WDLAB_BUDGET")) {
    char* end = nullptr;
    const auto x = std::strtoll(v, &end, 10);
    if (end != v && *end == '\0' && x > 0) {
      b.dodgson_states = b.bfs_states = b.young_count_vectors = b.committees = x;
    }
  }
  return b;
}

namespace {

struct Options {
  std::int64_t budget = 0;  // 0 = environment or default
  bool pretty = false;

  // score
  std::string profile;
  int alt = 0;
  std::optional<std::int64_t> threshold;
  int k = 1;
  std::string committee;
  std::string dpsf = "negative";
  std::string aggregator = "sum";

  // sample
  std::string model;
  std::string alpha = "0";
  int K = 1;
  bool weighted = false;
  std::optional<std::uint64_t> seed;
  std::string out;

  // reduce
  std::string input;
  bool skip_eulerian_check = false;

  // experiment
  std::string config;
  std::string output;
};

SearchBudget effective_budget(const Options& o) {
  auto b = budget_from_env();
  if (o.budget > 0) b.dodgson_states = b.bfs_states = b.young_count_vectors = b.committees = o.budget;
  return b;
}

std::vector<Alternative> parse_list(const std::string& text) {
  std::vector<Alternative> xs;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InvalidArgument("expected comma-separated integers, got '" + text + "'");
    }
  }
  return xs;
}

Dpsf parse_dpsf(const std::string& text, int m) {
  if (text == "negative") return Dpsf::negative_position();
  if (text == "borda") {
    std::vector<std::int64_t> s;
    for (int i = m - 1; i >= 0; --i) s.push_back(i);
    return Dpsf::from_scores(s);
  }
  const auto xs = parse_list(text);
  return Dpsf::from_scores({xs.begin(), xs.end()});
}

Aggregator parse_aggregator(const std::string& text) {
  if (text == "sum") return Aggregator::Sum;
  if (text == "min") return Aggregator::Min;
  throw InvalidArgument("aggregator must be sum or min");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Fixed-width key/value table for --pretty.
void print(std::ostream& out, const json& j, bool pretty) {
  if (!pretty || !j.is_object()) {
    out << j.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << key
        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

// --- score ----------------------------------------------------------------------

json score_dodgson(const Options& o, const SearchBudget& budget) {
  const auto p = parse_profile(read_file(o.profile));
  json j{{"rule", "dodgson"}, {"alternative", o.alt}};
  if (o.threshold) {
    j["threshold"] = *o.threshold;
    j["decision"] = yes_no(dodgson_decision_exact(p, o.alt, *o.threshold, budget));
  } else {
    j["score"] = dodgson_score_exact(p, o.alt, budget);
  }
  return j;
}

json score_young(const Options& o, const SearchBudget& budget) {
  const auto p = parse_profile(read_file(o.profile));
  const auto s = young_score_exact(p, o.alt, budget);
  json j{{"rule", "young"}, {"alternative", o.alt}, {"score", s}};
  if (o.threshold) {
    j["threshold"] = *o.threshold;
    j["decision"] = yes_no(s >= *o.threshold);
  }
  return j;
}

json score_kemeny(const Options& o, const SearchBudget& budget, bool alt_given) {
  const auto p = parse_profile(read_file(o.profile));
  const auto best = kemeny_best(p, budget);
  json j{{"rule", "kemeny"},
         {"min_score", best.score},
         {"ranking", std::vector<Alternative>(best.ranking.order().begin(), best.ranking.order().end())}};
  if (alt_given) {
    j["alternative"] = o.alt;
    j["score"] = kemeny_score_of_alternative(p, o.alt, budget);
  }
  if (o.threshold) {
    j["threshold"] = *o.threshold;
    j["decision"] = yes_no(best.score <= *o.threshold);
  }
  return j;
}

json score_committee(const Options& o, const SearchBudget& budget, CommitteeRule rule) {
  const auto p = parse_profile(read_file(o.profile));
  const auto alpha = parse_dpsf(o.dpsf, p.num_alternatives());
  const auto agg = parse_aggregator(o.aggregator);
  json j{{"rule", rule == CommitteeRule::ChamberlinCourant ? "cc" : "monroe"}, {"aggregator", o.aggregator}};
  if (!o.committee.empty()) {
    const Committee c(parse_list(o.committee));
    for (const auto x : c.members()) check_alternative(p.num_alternatives(), x);
    j["committee"] = c.members();
    j["score"] = committee_score(p, c, rule, alpha, agg);
    if (o.threshold) {
      j["threshold"] = *o.threshold;
      j["decision"] = yes_no(j["score"].get<std::int64_t>() >= *o.threshold);
    }
    return j;
  }
  const auto winners = winning_committees(p, o.k, rule, alpha, agg, budget);
  const auto best = committee_score(p, winners.front(), rule, alpha, agg);
  auto arr = json::array();
  for (const auto& c : winners) arr.push_back(c.members());
  j["k"] = o.k;
  j["best_score"] = best;
  j["winners"] = arr;
  if (o.threshold) {
    j["threshold"] = *o.threshold;
    j["decision"] = yes_no(best >= *o.threshold);
  }
  return j;
}

json score_greedy(const Options& o) {
  const auto p = parse_profile(read_file(o.profile));
  const auto g = greedy_dodgson(p, o.alt);
  json j{{"rule", "greedy-dodgson"},
         {"alternative", o.alt},
         {"score", g.score},
         {"certainty", std::string(to_string(g.certainty))}};
  if (o.threshold) {
    j["threshold"] = *o.threshold;
    j["decision"] = std::string(to_string(semirandom_dodgson_decision(p, o.alt, *o.threshold)));
  }
  return j;
}

// --- sample ---------------------------------------------------------------------

json cmd_sample(const Options& o) {
  const auto text = read_file(o.profile);
  std::vector<ParameterProfile::Entry> entries;
  int m = 0;
  if (o.weighted) {
    const auto wp = parse_weighted_profile(text);
    m = wp.num_alternatives();
    for (const auto& e : wp.entries()) entries.push_back({e.ranking, e.weight});
  } else {
    const auto p = parse_profile(text);
    m = p.num_alternatives();
    for (const auto& r : p) entries.push_back({r, Rational(1)});
  }
  PreferenceModel model = [&] {
    if (o.model == "alpha_ic") return PreferenceModel::alpha_ic(m, parse_rational(o.alpha));
    if (o.model == "partial_alt") return PreferenceModel::partial_alt(m, o.K);
    throw InvalidArgument("model must be alpha_ic or partial_alt");
  }();
  const ParameterProfile pp(model, std::move(entries));
  const auto seed = o.seed ? *o.seed : (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
  auto rng = trial_rng(seed, 0);
  const auto sampled = sample_profile(pp, rng);
  const json meta{{"seed", seed},
                  {"model", model.describe()},
                  {"parameters", o.profile},
                  {"m", sampled.num_alternatives()},
                  {"n", sampled.num_voters()}};
  if (o.out.empty()) throw InvalidArgument("--out is required");
  write_file(o.out, format_profile(sampled));
  write_file(o.out + ".json", meta.dump(2) + "\n");
  json j = meta;
  j["output"] = o.out;
  return j;
}

// --- reduce ---------------------------------------------------------------------

json reduce_x3c(const Options& o) {
  const auto inst = parse_x3c(read_file(o.input));
  const auto r = x3c_to_dodgson(inst);
  if (o.out.empty()) throw InvalidArgument("--out is required");
  write_file(o.out, format_profile(r.profile));
  const auto layout = layout_json(r);
  write_file(o.out + ".json", layout.dump(2) + "\n");
  json j = layout;
  j["output"] = o.out;
  return j;
}

json reduce_mcgarvey(const Options& o) {
  const auto g = parse_digraph(read_file(o.input));
  const auto p = mcgarvey_profile(g);
  if (o.out.empty()) throw InvalidArgument("--out is required");
  write_file(o.out, format_profile(p));
  return {{"m", p.num_alternatives()}, {"n", p.num_voters()}, {"multiplier", kMcGarveyMultiplier}, {"output", o.out}};
}

json reduce_efas(const Options& o, const SearchBudget& budget) {
  const auto g = parse_digraph(read_file(o.input));
  if (!o.threshold) throw InvalidArgument("--threshold is required");
  const auto n = mcgarvey_profile(g).num_voters();
  const auto th = exact_efas_thresholds(g, n, kMcGarveyMultiplier);
  const bool yes = efas_via_kemeny(g, *o.threshold, exact_kemeny_decider(budget), mcgarvey_profile, th,
                                   EfasOptions{!o.skip_eulerian_check});
  return {{"decision", yes_no(yes)}, {"threshold", *o.threshold}, {"kemeny_threshold", floor(th.base + *o.threshold * th.scale + th.slack)}};
}

// --- experiment -----------------------------------------------------------------

int cmd_experiment(const Options& o, const SearchBudget& budget, std::ostream& out, std::ostream& err) {
  json raw;
  try {
    raw = json::parse(read_file(o.config));
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  auto cfg = ExperimentConfig::from_json(raw);
  if (o.seed) cfg.seed = *o.seed;
  if (!o.output.empty()) cfg.output = o.output;
  const auto start = std::chrono::steady_clock::now();
  auto rep = run_experiment(cfg, budget);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.write();
  auto summary = rep.summary();
  if (o.pretty) {
    for (const auto& c : summary["checks"]) {
      out << std::left << std::setw(32) << c["name"].get<std::string>() << std::setw(9)
          << c["verdict"].get<std::string>() << " empirical " << std::setw(12) << c["empirical"].get<double>()
          << " bound " << c["bound"].get<double>() << '\n';
    }
    out << "verdict " << summary["verdict"].get<std::string>() << '\n';
  } else {
    out << summary.dump() << '\n';
  }
  err << "wall time " << rep.wall_seconds << " s\n";
  return rep.passed() ? kExitOk : kExitVerdict;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dodgson, Young, Kemeny and committee scoring under semi-random preferences", "wdlab"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  app.add_option("--budget", o.budget, "State limit for exact searches (overrides WDLAB_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", o.pretty, "Text table instead of JSON");

  auto* score = app.add_subcommand("score", "Exact and greedy scores");
  score->require_subcommand(1);
  std::int64_t threshold = 0;
  const auto add_common = [&](CLI::App* sub, bool needs_alt) {
    sub->add_option("--profile", o.profile, "Profile file")->required();
    auto* alt = sub->add_option("--alt", o.alt, "Queried alternative");
    if (needs_alt) alt->required();
    sub->add_option("--threshold", threshold, "Decision threshold");
  };
  auto* dodgson = score->add_subcommand("dodgson", "Exact Dodgson score (adjacent swaps)");
  add_common(dodgson, true);
  auto* young = score->add_subcommand("young", "Exact Young score (voters kept)");
  add_common(young, true);
  auto* kemeny = score->add_subcommand("kemeny", "Kemeny consensus or best ranking topped by an alternative");
  add_common(kemeny, false);
  auto* greedy = score->add_subcommand("greedy-dodgson", "Greedy Dodgson score with certainty");
  add_common(greedy, true);
  std::vector<CLI::App*> committee_cmds;
  for (const char* name : {"cc", "monroe"}) {
    auto* sub = score->add_subcommand(name, std::string(name) == "cc" ? "Chamberlin-Courant committee score" : "Monroe committee score");
    sub->add_option("--profile", o.profile, "Profile file")->required();
    sub->add_option("--threshold", threshold, "Decision threshold");
    sub->add_option("--k", o.k, "Committee size")->check(CLI::PositiveNumber);
    sub->add_option("--committee", o.committee, "Score this committee, e.g. 0,2");
    sub->add_option("--dpsf", o.dpsf, "negative, borda, or a decreasing list like 3,1,0");
    sub->add_option("--aggregator", o.aggregator, "sum or min");
    committee_cmds.push_back(sub);
  }
  auto* greedy_top = app.add_subcommand("greedy-dodgson", "Greedy Dodgson score with certainty");
  add_common(greedy_top, true);

  auto* sample = app.add_subcommand("sample", "Draw a profile from a semi-random model");
  sample->add_option("--parameters", o.profile, "Parameter profile file")->required();
  sample->add_flag("--weighted", o.weighted, "Parameter file uses the weighted format (integer weights)");
  sample->add_option("--model", o.model, "alpha_ic or partial_alt")->required();
  sample->add_option("--alpha", o.alpha, "alpha for alpha_ic, as p/q");
  sample->add_option("--K", o.K, "K for partial_alt");
  sample->add_option("--out", o.out, "Output profile file")->required();
  std::uint64_t seed = 0;
  sample->add_option("--seed", seed, "Random seed (default: random, recorded in the sidecar)");

  auto* reduce = app.add_subcommand("reduce", "Reductions");
  reduce->require_subcommand(1);
  auto* x3c = reduce->add_subcommand("x3c-dodgson", "X3C instance to Dodgson profile");
  x3c->add_option("--input", o.input, "X3C instance file")->required();
  x3c->add_option("--out", o.out, "Output profile; the layout goes to <out>.json")->required();
  auto* mcg = reduce->add_subcommand("mcgarvey", "Digraph to a profile with that majority graph");
  mcg->add_option("--input", o.input, "Digraph file")->required();
  mcg->add_option("--out", o.out, "Output profile")->required();
  auto* efas = reduce->add_subcommand("efas-check", "Feedback arc set decision through Kemeny");
  efas->add_option("--input", o.input, "Digraph file")->required();
  efas->add_option("--threshold", threshold, "Arc budget t")->required();
  efas->add_flag("--skip-eulerian-check", o.skip_eulerian_check, "Accept non-Eulerian graphs");

  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo check of one probabilistic bound");
  experiment->add_option("--config", o.config, "Experiment config JSON")->required();
  experiment->add_option("--output", o.output, "Output path prefix (overrides the config)");
  experiment->add_option("--seed", seed, "Seed (overrides the config)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto given = [](CLI::App* sub, const char* opt) { return sub->count(opt) > 0; };
  try {
    const auto budget = effective_budget(o);
    const auto parsed = [](CLI::App* sub) { return sub->parsed(); };
    for (auto* sub : {dodgson, young, kemeny, greedy, greedy_top, efas, committee_cmds[0], committee_cmds[1]}) {
      if (parsed(sub) && given(sub, "--threshold")) o.threshold = threshold;
    }
    for (auto* sub : {sample, experiment}) {
      if (parsed(sub) && given(sub, "--seed")) o.seed = seed;
    }

    json result;
    if (parsed(dodgson)) {
      result = score_dodgson(o, budget);
    } else if (parsed(young)) {
      result = score_young(o, budget);
    } else if (parsed(kemeny)) {
      result = score_kemeny(o, budget, given(kemeny, "--alt"));
    } else if (parsed(greedy) || parsed(greedy_top)) {
      result = score_greedy(o);
    } else if (parsed(committee_cmds[0])) {
      result = score_committee(o, budget, CommitteeRule::ChamberlinCourant);
    } else if (parsed(committee_cmds[1])) {
      result = score_committee(o, budget, CommitteeRule::Monroe);
    } else if (parsed(sample)) {
      result = cmd_sample(o);
    } else if (parsed(x3c)) {
      result = reduce_x3c(o);
    } else if (parsed(mcg)) {
      result = reduce_mcgarvey(o);
    } else if (parsed(efas)) {
      result = reduce_efas(o, budget);
    } else if (parsed(experiment)) {
      return cmd_experiment(o, budget, out, err);
    }
    print(out, result, o.pretty);
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConstructionError& e) {
    err << "construction error: " << e.what() << '\n';
    return kExitConstruction;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace wdlab
