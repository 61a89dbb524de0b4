#pragma once

// Reductions used by the hardness arguments, plus their drivers:
//   X3C -> Dodgson score, and the randomized X3C procedure built on it;
//   digraph -> profile with a prescribed majority graph, the closed-form KT
//   distance to such a profile, and the EFAS procedure built on Kemeny.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "wdlab/core.hpp"
#include "wdlab/greedy_dodgson.hpp"
#include "wdlab/models.hpp"
#include "wdlab/rules_exact.hpp"

namespace wdlab {

// --- X3C ----------------------------------------------------------------------

class X3CInstance {
 public:
  using Triple = std::array<int, 3>;

  /// Requires q > 0, q % 3 == 0, distinct triples of distinct elements in
  /// 0..q-1, and q/3 <= s <= q^3/6.
  X3CInstance(int q, std::vector<Triple> subsets);

  int q() const { return q_; }
  int s() const { return static_cast<int>(subsets_.size()); }
  /// Each triple is sorted ascending.
  const std::vector<Triple>& subsets() const { return subsets_; }

 private:
  int q_;
  std::vector<Triple> subsets_;
};

/// Exact cover by backtracking on the lowest uncovered element. q <= 64.
bool x3c_bruteforce(const X3CInstance& inst);

/// Index map of the reduction profile. Alternative count is 2q + s + 1.
struct DodgsonLayout {
  Alternative critical = 0;
  std::vector<Alternative> a;       // a[i] for element i
  std::vector<Alternative> b;       // b[i] for element i
  std::vector<Alternative> subset;  // subset[j] for triple j
};

struct DodgsonReductionOutput {
  Profile profile;
  Alternative critical = 0;
  std::int64_t threshold = 0;  // 4q/3
  DodgsonLayout layout;
  int swing_count = 0;
  int equalizing_count = 0;
  int incremental_count = 0;
};

/// Swing rankings E_j > s_j > c > rest, equalizing rankings a_i > b_i > c > rest
/// (N* - N_i copies each), then enough copies of a_1..a_q > b_1..b_q > c > H
/// that every a_i beats c by exactly one vote. Unspecified segments are in
/// ascending index order. Throws ConstructionError if that count would be negative.
DodgsonReductionOutput x3c_to_dodgson(const X3CInstance& inst);

/// Parameters app_last(P1, m_total - m1), one unit-weight entry per voter.
/// `model` must have m == m_total; a partial_alt model must keep K >= m1.
ParameterProfile build_padded_parameter_profile(const DodgsonReductionOutput& out, const PreferenceModel& model);

using DodgsonDecider = std::function<DecisionOutcome(const Profile&, Alternative, std::int64_t)>;

/// Wraps dodgson_decision_exact; never fails except by throwing BudgetExceeded.
DodgsonDecider exact_dodgson_decider(SearchBudget budget = kDefaultBudget);

struct RandomizedX3CTrace {
  bool answer = true;  // true = Yes
  bool top_preserved = false;
  std::optional<DecisionOutcome> decider_outcome;  // unset when the decider was skipped
};

/// Build, sample P', answer Yes if Top_m1(P') != P1, else ask the decider
/// with threshold 4q/3. A Failure from the decider counts as Yes.
RandomizedX3CTrace randomized_x3c(const X3CInstance& inst, const DodgsonDecider& decider, const PreferenceModel& model,
                               Rng& rng);
/// Same, reusing an already built reduction.
RandomizedX3CTrace randomized_x3c(const DodgsonReductionOutput& out, const DodgsonDecider& decider,
                               const PreferenceModel& model, Rng& rng);

// --- Young extension point ----------------------------------------------------

struct YoungReductionOutput {
  Profile profile;
  Alternative critical = 0;
  std::int64_t threshold = 1;
};

using YoungReduction = std::function<YoungReductionOutput(const X3CInstance&)>;

/// No construction is wired in; always throws NotImplementedError.
YoungReductionOutput x3c_to_young(const X3CInstance& inst);

/// Checks a supplied construction on one instance: an exact cover exists iff
/// the Young score of the critical alternative reaches the threshold, and the
/// score survives app_last with 1..3 extra alternatives.
bool young_reduction_contract_holds(const YoungReduction& build, const X3CInstance& inst,
                                    const SearchBudget& budget = kDefaultBudget);

// --- majority graphs and EFAS -------------------------------------------------

/// Two voters per arc u->v: (u, v, rest ascending) and (rest descending, u, v).
/// Every other pair cancels, so wmg = 2 * g.margins(). An arcless graph gives
/// the canceling pair (identity, reversed identity). Throws on 2-cycles.
Profile mcgarvey_profile(const Digraph& g);

inline constexpr std::int64_t kMcGarveyMultiplier = 2;

/// |P|/2 * C(m,2) - lambda*|E|/2 + lambda * backward_arcs(g, r), where
/// wmg(p) = lambda * g.margins(). Throws InvalidArgument when no such lambda exists.
Rational kt_formula(const WeightedProfile& p, const Digraph& g, const Ranking& r);
Rational kt_formula(const Profile& p, const Digraph& g, const Ranking& r);

struct EfasThresholds {
  Rational base;          // M
  Rational scale;         // per removed arc
  Rational slack;         // added to the Kemeny threshold
  Rational guard_radius;  // L1 tolerance between wmg(P') and scale * G
};

/// Thresholds under which the procedure is exact for a profile with
/// wmg = multiplier * G and n voters: M = n/2 * C(m,2) - multiplier*|E|/2,
/// scale = multiplier, no slack, zero radius.
EfasThresholds exact_efas_thresholds(const Digraph& g, std::int64_t n, std::int64_t multiplier);

using KemenyDecider = std::function<DecisionOutcome(const Profile&, std::int64_t)>;
using ProfileBuilder = std::function<Profile(const Digraph&)>;

KemenyDecider exact_kemeny_decider(SearchBudget budget = kDefaultBudget);

struct EfasOptions {
  bool require_eulerian = true;
};

/// Build P', answer Yes if ||wmg(P') - scale*G||_1 exceeds the guard radius,
/// else ask the decider at floor(M + t*scale + slack). Failure counts as Yes.
bool efas_via_kemeny(const Digraph& g, std::int64_t t, const KemenyDecider& decider, const ProfileBuilder& build,
                     const EfasThresholds& thresholds, EfasOptions options = {});

/// Minimum over all orders of backward_arcs, compared with t.
bool efas_bruteforce(const Digraph& g, std::int64_t t, const SearchBudget& budget = kDefaultBudget);

/// Minimum feedback arc set size by enumeration of all orders.
std::int64_t min_feedback_arcs(const Digraph& g, const SearchBudget& budget = kDefaultBudget);

}  // namespace wdlab
