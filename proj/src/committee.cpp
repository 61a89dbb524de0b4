#include <algorithm>
#include <limits>
#include <string>

#include "min_cost_flow.hpp"
#include "wdlab/rules_exact.hpp"

namespace wdlab {

// --- Dpsf -----------------------------------------------------------------------

Dpsf Dpsf::negative_position() { return Dpsf({}); }

Dpsf Dpsf::from_scores(std::vector<std::int64_t> scores) {
  if (scores.empty()) throw InvalidArgument("dpsf: empty score table");
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] >= scores[i - 1]) throw InvalidArgument("dpsf: scores must be strictly decreasing");
  }
  return Dpsf(std::move(scores));
}

std::int64_t Dpsf::operator()(int position) const {
  if (position < 1) throw InvalidArgument("dpsf: positions start at 1");
  if (scores_.empty()) return -position;
  if (static_cast<std::size_t>(position) > scores_.size()) {
    throw InvalidArgument("dpsf: position " + std::to_string(position) + " beyond score table");
  }
  return scores_[static_cast<std::size_t>(position - 1)];
}

bool Dpsf::covers(int m) const { return scores_.empty() || static_cast<std::size_t>(m) <= scores_.size(); }

// --- Committee ------------------------------------------------------------------

Committee::Committee(std::vector<Alternative> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("committee: empty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("committee: repeated member");
  }
}

std::vector<Committee> all_committees(int m, int k) {
  if (k < 1 || k > m) throw InvalidArgument("committee size must be in 1..m");
  std::vector<Committee> out;
  std::vector<Alternative> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.emplace_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// --- scoring --------------------------------------------------------------------

namespace {

// sat[i][j] = alpha(position of member j in ballot i)
std::vector<std::vector<std::int64_t>> satisfaction(const Profile& p, const Committee& c, const Dpsf& alpha) {
  const int m = p.num_alternatives();
  if (c.size() > m) throw DimensionError("committee larger than m");
  for (const auto x : c.members()) check_alternative(m, x);
  if (!alpha.covers(m)) throw InvalidArgument("dpsf does not cover all " + std::to_string(m) + " positions");
  std::vector<std::vector<std::int64_t>> sat;
  sat.reserve(static_cast<std::size_t>(p.num_voters()));
  for (const auto& r : p) {
    std::vector<std::int64_t> row;
    for (const auto x : c.members()) row.push_back(alpha(r.position(x) + 1));
    sat.push_back(std::move(row));
  }
  return sat;
}

struct Capacities {
  std::int64_t lo, hi;
};

Capacities monroe_capacities(std::int64_t n, std::int64_t k) { return {n / k, (n + k - 1) / k}; }

// Nodes: 0 source, 1..n voters, n+1..n+k members, n+k+1 sink.
// `usable(i,j)` filters pairs; `pair_cost(i,j)` prices them. Each member gets a
// lower-bound arc of cost `lower_cost` and a slack arc of cost 0.
template <typename Usable, typename Cost>
detail::MinCostFlow::Result monroe_flow(std::size_t n, std::size_t k, Usable usable, Cost pair_cost,
                                        std::int64_t lower_cost) {
  const auto cap = monroe_capacities(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  const int source = 0;
  const int sink = static_cast<int>(n + k + 1);
  detail::MinCostFlow flow(sink + 1);
  for (std::size_t i = 0; i < n; ++i) {
    flow.add_arc(source, static_cast<int>(1 + i), 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (usable(i, j)) flow.add_arc(static_cast<int>(1 + i), static_cast<int>(1 + n + j), 1, pair_cost(i, j));
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    const int member = static_cast<int>(1 + n + j);
    if (cap.lo > 0) flow.add_arc(member, sink, cap.lo, lower_cost);
    if (cap.hi > cap.lo) flow.add_arc(member, sink, cap.hi - cap.lo, 0);
  }
  return flow.run(source, sink, static_cast<std::int64_t>(n));
}

}  // namespace

std::int64_t cc_score(const Profile& p, const Committee& c, const Dpsf& alpha, Aggregator agg) {
  const auto sat = satisfaction(p, c, alpha);
  std::int64_t sum = 0;
  std::int64_t min = std::numeric_limits<std::int64_t>::max();
  for (const auto& row : sat) {
    const auto best = *std::max_element(row.begin(), row.end());
    sum += best;
    min = std::min(min, best);
  }
  return agg == Aggregator::Sum ? sum : min;
}

std::int64_t monroe_score(const Profile& p, const Committee& c, const Dpsf& alpha, Aggregator agg) {
  const auto sat = satisfaction(p, c, alpha);
  const std::size_t n = sat.size();
  const std::size_t k = sat.front().size();
  const auto cap = monroe_capacities(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  const auto all = [](std::size_t, std::size_t) { return true; };

  if (agg == Aggregator::Sum) {
    std::int64_t spread = 0;
    for (const auto& row : sat) {
      for (const auto v : row) spread = std::max(spread, v < 0 ? -v : v);
    }
    // Large enough that saturating every lower-bound arc always wins.
    const std::int64_t big = 2 * static_cast<std::int64_t>(n) * spread + 1;
    const auto res = monroe_flow(n, k, all, [&](std::size_t i, std::size_t j) { return -sat[i][j]; }, -big);
    return -(res.cost + big * static_cast<std::int64_t>(k) * cap.lo);
  }

  std::vector<std::int64_t> levels;
  for (const auto& row : sat) levels.insert(levels.end(), row.begin(), row.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const auto feasible = [&](std::int64_t threshold) {
    const auto res = monroe_flow(
        n, k, [&](std::size_t i, std::size_t j) { return sat[i][j] >= threshold; },
        [](std::size_t, std::size_t) { return std::int64_t{0}; }, -1);
    return res.flow == static_cast<std::int64_t>(n) && res.cost == -static_cast<std::int64_t>(k) * cap.lo;
  };
  // The lowest level is always feasible; find the highest feasible one.
  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (feasible(levels[mid])) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return levels[lo];
}

std::int64_t committee_score(const Profile& p, const Committee& c, CommitteeRule rule, const Dpsf& alpha,
                             Aggregator agg) {
  return rule == CommitteeRule::Monroe ? monroe_score(p, c, alpha, agg) : cc_score(p, c, alpha, agg);
}

namespace {

std::vector<Committee> budgeted_committees(int m, int k, const SearchBudget& budget) {
  if (k < 1 || k > m) throw InvalidArgument("committee size must be in 1..m");
  // C(m,k) computed incrementally; every intermediate value is itself a binomial.
  std::int64_t count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * (m - k + i) / i;
    if (count > budget.committees) {
      throw BudgetExceeded("committees: C(" + std::to_string(m) + "," + std::to_string(k) + ") exceeds budget " +
                           std::to_string(budget.committees));
    }
  }
  return all_committees(m, k);
}

}  // namespace

bool committee_decision(const Profile& p, int k, std::int64_t t, CommitteeRule rule, const Dpsf& alpha,
                        Aggregator agg, const SearchBudget& budget) {
  for (const auto& c : budgeted_committees(p.num_alternatives(), k, budget)) {
    if (committee_score(p, c, rule, alpha, agg) >= t) return true;
  }
  return false;
}

std::vector<Committee> winning_committees(const Profile& p, int k, CommitteeRule rule, const Dpsf& alpha,
                                          Aggregator agg, const SearchBudget& budget) {
  std::vector<Committee> best;
  std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
  for (const auto& c : budgeted_committees(p.num_alternatives(), k, budget)) {
    const auto s = committee_score(p, c, rule, alpha, agg);
    if (s > best_score) {
      best_score = s;
      best.clear();
    }
    if (s == best_score) best.push_back(c);
  }
  return best;
}

}  // namespace wdlab
