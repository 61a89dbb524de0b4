#pragma once

// Single-agent preference models. Both built-in families take a ranking as
// their parameter: alpha-IC mixes a point mass on the parameter with the
// uniform distribution, and partial alternative randomization keeps the
// parameter's top K and shuffles the rest.

#include <random>
#include <string>
#include <vector>

#include "wdlab/core.hpp"

namespace wdlab {

using Rng = std::mt19937_64;

class PreferenceModel {
 public:
  enum class Kind { AlphaIc, PartialAlt };

  /// Requires 0 <= alpha <= 1.
  static PreferenceModel alpha_ic(int m, Rational alpha);
  /// Requires 1 <= K <= m.
  static PreferenceModel partial_alt(int m, int K);

  Kind kind() const { return kind_; }
  int num_alternatives() const { return m_; }
  Rational alpha() const { return alpha_; }
  int top_k() const { return k_; }

  /// Exact probability of drawing r. Needs m <= 20 so that m! fits.
  Rational pmf(const Ranking& parameter, const Ranking& r) const;
  Ranking sample(const Ranking& parameter, Rng& rng) const;

  /// e.g. "alpha_ic(alpha=2/3,m=5)"
  std::string describe() const;

  friend bool operator==(const PreferenceModel&, const PreferenceModel&) = default;

 private:
  PreferenceModel(Kind kind, int m, Rational alpha, int k) : kind_(kind), m_(m), alpha_(alpha), k_(k) {}
  Kind kind_;
  int m_;
  Rational alpha_;
  int k_;
};

/// The distribution pi_{sigma(parameter)}, which equals sigma applied to pi_parameter.
Ranking permuted_parameter(const Permutation& sigma, const Ranking& parameter);

/// Uniformly random ranking of 0..m-1.
Ranking uniform_ranking(int m, Rng& rng);

/// One weighted parameter per type of agent.
class ParameterProfile {
 public:
  struct Entry {
    Ranking parameter;
    Rational weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Weights must be positive and parameters must have the model's m.
  ParameterProfile(PreferenceModel model, std::vector<Entry> entries);
  /// Unit weight per parameter.
  ParameterProfile(PreferenceModel model, const std::vector<Ranking>& parameters);

  const PreferenceModel& model() const { return model_; }
  const std::vector<Entry>& entries() const { return entries_; }
  Rational total_weight() const;
  bool has_integer_weights() const;

 private:
  PreferenceModel model_;
  std::vector<Entry> entries_;
};

/// One independent draw per agent, agents in entry order. Throws
/// InvalidArgument on fractional weights.
Profile sample_profile(const ParameterProfile& pp, Rng& rng);

/// Expected margins of one draw from pi_parameter (closed form).
RationalWmg wmg_of_distribution(const PreferenceModel& model, const Ranking& parameter);

/// max over distinct (a,b,c) of w(a,b) + w(b,c) + w(c,a).
Rational three_cycle_max_weight(const RationalWmg& w);
Rational three_cycle_max_weight(const PreferenceModel& model, const Ranking& parameter);

/// Weights scaled by target_total / total and floored; entries that round to
/// zero are dropped. Requires target_total >= total weight.
ParameterProfile scale_round_parameter_profile(const ParameterProfile& pp, std::int64_t target_total);

}  // namespace wdlab
