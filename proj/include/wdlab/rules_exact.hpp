#pragma once

// Exact (exponential-time) solvers for Dodgson, Young, Kemeny,
// Chamberlin-Courant and Monroe. Every solver takes an explicit budget and
// throws BudgetExceeded instead of running unbounded.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wdlab/core.hpp"

namespace wdlab {

struct SearchBudget {
  /// Frontier states expanded by the Dodgson lift search, summed over rounds.
  std::int64_t dodgson_states = 20'000'000;
  /// Profile states visited by the Dodgson BFS oracle.
  std::int64_t bfs_states = 2'000'000;
  /// Size of the Young count-vector space, prod over distinct rankings of (mult+1).
  std::int64_t young_count_vectors = std::int64_t{1} << 20;
  int kemeny_max_alternatives = 16;
  std::int64_t committees = 1'000'000;
  /// Alternatives allowed in brute-force enumeration over all m! orders.
  int brute_force_max_alternatives = 8;
};

inline const SearchBudget kDefaultBudget{};

// --- Dodgson ------------------------------------------------------------------

/// Minimum number of adjacent swaps making `a` the Condorcet winner. Searches over
/// per-voter lift amounts only (alternatives below `a` never move).
std::int64_t dodgson_score_exact(const Profile& p, Alternative a, const SearchBudget& budget = kDefaultBudget);

/// Whether the Dodgson score of `a` is at most t; cheaper than the full score.
bool dodgson_decision_exact(const Profile& p, Alternative a, std::int64_t t,
                            const SearchBudget& budget = kDefaultBudget);

/// Breadth-first search over whole-profile states, any adjacent swap in any
/// ballot per edge. Tiny instances only (m <= 4, n <= 3).
std::int64_t dodgson_score_bfs_oracle(const Profile& p, Alternative a, const SearchBudget& budget = kDefaultBudget);

// --- Young --------------------------------------------------------------------

/// Size of the largest sub-multiset of ballots in which `a` is the strict-majority
/// Condorcet winner; 0 when no non-empty sub-multiset works.
std::int64_t young_score_exact(const Profile& p, Alternative a, const SearchBudget& budget = kDefaultBudget);

// --- Kemeny -------------------------------------------------------------------

struct KemenyResult {
  Ranking ranking;
  std::int64_t score = 0;
};

/// Lexicographically smallest ranking among those minimizing the KT distance to p.
KemenyResult kemeny_best(const Profile& p, const SearchBudget& budget = kDefaultBudget);

/// Minimum KT distance to p over rankings with `a` first.
std::int64_t kemeny_score_of_alternative(const Profile& p, Alternative a, const SearchBudget& budget = kDefaultBudget);

/// Is some alternative's Kemeny score at most t?
bool kemeny_decision(const Profile& p, std::int64_t t, const SearchBudget& budget = kDefaultBudget);

// --- committees ---------------------------------------------------------------

/// Decreasing positional scoring function; positions are 1-based. The score of
/// a position never depends on m.
class Dpsf {
 public:
  /// alpha(i) = -i, defined for every position.
  static Dpsf negative_position();
  /// alpha(i) = scores[i-1]; must be strictly decreasing. Positions beyond the
  /// table are undefined.
  static Dpsf from_scores(std::vector<std::int64_t> scores);

  std::int64_t operator()(int position) const;
  /// Whether positions 1..m are all defined.
  bool covers(int m) const;

 private:
  explicit Dpsf(std::vector<std::int64_t> scores) : scores_(std::move(scores)) {}
  std::vector<std::int64_t> scores_;  // empty means alpha(i) = -i
};

/// k distinct alternatives, stored sorted.
class Committee {
 public:
  explicit Committee(std::vector<Alternative> members);
  const std::vector<Alternative>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  friend bool operator==(const Committee&, const Committee&) = default;
  friend auto operator<=>(const Committee&, const Committee&) = default;

 private:
  std::vector<Alternative> members_;
};

enum class Aggregator { Sum, Min };
enum class CommitteeRule { ChamberlinCourant, Monroe };

/// Best aggregate satisfaction over unconstrained assignments.
std::int64_t cc_score(const Profile& p, const Committee& c, const Dpsf& alpha, Aggregator agg);

/// Best aggregate satisfaction over assignments where every member serves
/// between floor(n/k) and ceil(n/k) voters.
std::int64_t monroe_score(const Profile& p, const Committee& c, const Dpsf& alpha, Aggregator agg);

std::int64_t committee_score(const Profile& p, const Committee& c, CommitteeRule rule, const Dpsf& alpha,
                             Aggregator agg);

/// Does some k-committee reach score >= t?
bool committee_decision(const Profile& p, int k, std::int64_t t, CommitteeRule rule, const Dpsf& alpha,
                        Aggregator agg, const SearchBudget& budget = kDefaultBudget);

/// All k-committees attaining the maximum score.
std::vector<Committee> winning_committees(const Profile& p, int k, CommitteeRule rule, const Dpsf& alpha,
                                          Aggregator agg, const SearchBudget& budget = kDefaultBudget);

/// All k-subsets of 0..m-1 in lexicographic order.
std::vector<Committee> all_committees(int m, int k);

}  // namespace wdlab
