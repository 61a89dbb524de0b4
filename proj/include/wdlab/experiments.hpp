#pragma once

// Monte-Carlo checks of the probabilistic statements: the greedy Dodgson
// success bound, the two concentration tails behind it, top-block
// preservation of padded reduction profiles, and the one-sided error of the
// randomized X3C procedure.
//
// Every trial draws from its own generator seeded by (seed, trial), so a rerun
// with the same configuration reproduces every row bit for bit.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wdlab/models.hpp"
#include "wdlab/reductions.hpp"

namespace wdlab {

enum class Claim { GreedySuccess, Concentration, TopBlock, RandomizedX3C };

struct ModelSpec {
  enum class Kind { AlphaIc, PartialAlt, SyntheticTopK };
  Kind kind = Kind::AlphaIc;
  Rational alpha = 1;
  int K = 1;
};

struct ExperimentConfig {
  Claim claim = Claim::GreedySuccess;
  int m = 3;
  int n = 1;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  ModelSpec model;
  bool random_parameters = false;      // else one shared identity parameter
  std::vector<X3CInstance> instances;  // top_block / randomized_x3c
  int m_total = 0;                     // top_block / randomized_x3c
  std::string output;                  // path prefix for .csv and .json; empty = none

  /// Throws InvalidArgument with a field-level message on any schema violation.
  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  /// FNV-1a over the canonical JSON dump, as 16 hex digits.
  std::string hash() const;
};

enum class Verdict { Pass, Fail, Vacuous };

struct Check {
  std::string name;
  double empirical = 0;
  double bound = 0;
  std::string bound_expr;
  double standard_error = 0;
  bool lower = true;  // empirical must stay above (true) or below (false) the bound
  Verdict verdict = Verdict::Pass;
  bool gating = true;  // false for informational thresholds
};

struct TrialReport {
  ExperimentConfig config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<Check> checks;
  nlohmann::json aggregates = nlohmann::json::object();
  // Two-column plot data: trial count against the running rate of `plot_label`.
  std::string plot_label;
  std::vector<std::pair<std::int64_t, double>> plot;
  double wall_seconds = 0;  // never written to files

  bool passed() const;
  std::string csv() const;
  nlohmann::json summary() const;
  std::string plot_data() const;
  /// Writes <output>.csv, <output>.json and <output>.dat when config.output is set.
  void write() const;
};

/// Binomial standard error at success probability p over `trials` draws.
double binomial_se(double p, std::int64_t trials);

/// Lower check: pass iff empirical >= bound - 3 se; vacuous if bound <= 0.
/// Upper check: pass iff empirical <= bound + 3 se; vacuous if bound >= 1.
Check make_check(std::string name, double empirical, double bound, std::string bound_expr, std::int64_t trials,
                 bool lower);

/// The generator for one trial of an experiment.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0);

/// Profile drawn for one trial of greedy_success / concentration: same seed and trial,
/// same profile, in both experiments.
Profile concentration_trial_profile(const ExperimentConfig& cfg, std::int64_t trial);

/// Alternative queried in greedy_success / concentration (bottom of the shared parameter).
Alternative concentration_target(const ExperimentConfig& cfg);

/// (3/4 - 1/(2m)) n / m
Rational concentration_beta(int m, int n);

TrialReport run_definitely_rate(const ExperimentConfig& cfg);
TrialReport run_concentration_tails(const ExperimentConfig& cfg);
TrialReport run_top_block_preservation(const ExperimentConfig& cfg);
TrialReport run_randomized_x3c(const ExperimentConfig& cfg, const SearchBudget& budget = kDefaultBudget);
TrialReport run_experiment(const ExperimentConfig& cfg, const SearchBudget& budget = kDefaultBudget);

std::string to_string(Claim c);
std::string to_string(Verdict v);

}  // namespace wdlab
