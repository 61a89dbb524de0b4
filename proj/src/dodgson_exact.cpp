// Exact Dodgson scores.
//
// Only swaps that lift the target `a` matter: a swap between two other
// alternatives changes no pairwise count involving `a`. So a solution is a lift
// vector (k_1..k_n), k_i = how far `a` rises in ballot i, costing sum k_i, and
// it is feasible when for every b the voters whose lift passes b cover
// deficit(a, b). The search below walks the voters in order, keeping the
// vector of still-missing votes per alternative as its state, and bounds the
// total cost IDA*-style.

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

#include "wdlab/rules_exact.hpp"

namespace wdlab {

namespace {

constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::max() / 4;

struct Stop {
  int cost;      // lift distance
  int relevant;  // index into LiftSearch::need
};

class LiftSearch {
 public:
  LiftSearch(const Profile& p, Alternative a, const SearchBudget& budget) : budget_(budget) {
    const int m = p.num_alternatives();
    check_alternative(m, a);
    if (m < 3) throw InvalidArgument("dodgson: needs m >= 3");

    std::vector<int> relevant_index(static_cast<std::size_t>(m), -1);
    for (Alternative b = 0; b < m; ++b) {
      if (b == a) continue;
      const auto d = deficit(p, a, b);
      if (d > 0) {
        relevant_index[static_cast<std::size_t>(b)] = static_cast<int>(need_.size());
        need_.push_back(d);
      }
    }
    if (need_.empty()) return;

    std::uint64_t place = 1;
    for (const auto d : need_) {
      radix_.push_back(place);
      const auto width = static_cast<std::uint64_t>(d + 1);
      if (place > std::numeric_limits<std::uint64_t>::max() / width) {
        throw BudgetExceeded("dodgson: deficit state space does not fit in 64 bits");
      }
      place *= width;
    }

    // One stop list per voter, nearest alternative above `a` first.
    for (const auto& r : p) {
      std::vector<Stop> stops;
      const int pa = r.position(a);
      for (int k = 1; k <= pa; ++k) {
        const int idx = relevant_index[static_cast<std::size_t>(r[static_cast<std::size_t>(pa - k)])];
        if (idx >= 0) stops.push_back({k, idx});
      }
      if (!stops.empty()) voters_.push_back(std::move(stops));
    }
    std::sort(voters_.begin(), voters_.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const Stop& s, const Stop& t) {
        return std::pair(s.cost, s.relevant) < std::pair(t.cost, t.relevant);
      });
    });
    build_suffix_bounds();
  }

  bool trivial() const { return need_.empty(); }

  std::int64_t initial_bound() const { return lower_bound(0, need_); }

  /// Cheapest solution whose estimates all stay within `bound`, or kInfeasible.
  /// `next_bound` receives the smallest estimate that was pruned.
  std::int64_t search(std::int64_t bound, std::int64_t& next_bound) {
    next_bound = kInfeasible;
    std::unordered_map<std::uint64_t, std::int64_t> frontier{{encode(need_), 0}};
    std::vector<std::int64_t> rem(need_.size());
    for (std::size_t i = 0; i < voters_.size(); ++i) {
      std::unordered_map<std::uint64_t, std::int64_t> next;
      next.reserve(frontier.size() * 2);
      for (const auto& [state, cost] : frontier) {
        decode(state, rem);
        offer(next, i + 1, state, cost, rem, bound, next_bound);
        std::uint64_t s = state;
        for (const auto& stop : voters_[i]) {
          if (++expanded_ > budget_.dodgson_states) {
            throw BudgetExceeded("dodgson: search exceeded " + std::to_string(budget_.dodgson_states) + " states");
          }
          auto& slot = rem[static_cast<std::size_t>(stop.relevant)];
          if (slot > 0) {
            --slot;
            s -= radix_[static_cast<std::size_t>(stop.relevant)];
          }
          offer(next, i + 1, s, cost + stop.cost, rem, bound, next_bound);
        }
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    const auto it = frontier.find(0);
    return it == frontier.end() ? kInfeasible : it->second;
  }

 private:
  void offer(std::unordered_map<std::uint64_t, std::int64_t>& next, std::size_t from_voter, std::uint64_t state,
             std::int64_t cost, const std::vector<std::int64_t>& rem, std::int64_t bound,
             std::int64_t& next_bound) const {
    const auto lb = lower_bound(from_voter, rem);
    if (lb >= kInfeasible) return;
    const auto estimate = cost + lb;
    if (estimate > bound) {
      next_bound = std::min(next_bound, estimate);
      return;
    }
    auto [it, inserted] = next.try_emplace(state, cost);
    if (!inserted && cost < it->second) it->second = cost;
  }

  // max(total missing votes, for each b the cheapest way to cover it alone)
  std::int64_t lower_bound(std::size_t from_voter, const std::vector<std::int64_t>& rem) const {
    std::int64_t total = 0;
    std::int64_t single = 0;
    for (std::size_t r = 0; r < rem.size(); ++r) {
      if (rem[r] == 0) continue;
      const auto& cheapest = suffix_cheapest_[from_voter][r];
      if (rem[r] >= static_cast<std::int64_t>(cheapest.size())) return kInfeasible;
      total += rem[r];
      single = std::max(single, cheapest[static_cast<std::size_t>(rem[r])]);
    }
    return std::max(total, single);
  }

  void build_suffix_bounds() {
    const std::size_t n = voters_.size();
    const std::size_t R = need_.size();
    suffix_cheapest_.assign(n + 1, std::vector<std::vector<std::int64_t>>(R));
    std::vector<std::vector<int>> dists(R);
    for (std::size_t i = n + 1; i-- > 0;) {
      if (i < n) {
        for (const auto& stop : voters_[i]) dists[static_cast<std::size_t>(stop.relevant)].push_back(stop.cost);
      }
      for (std::size_t r = 0; r < R; ++r) {
        auto sorted = dists[r];
        const auto keep = std::min<std::size_t>(sorted.size(), static_cast<std::size_t>(need_[r]));
        std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(keep), sorted.end());
        auto& prefix = suffix_cheapest_[i][r];
        prefix.assign(1, 0);
        for (std::size_t j = 0; j < keep; ++j) prefix.push_back(prefix.back() + sorted[j]);
      }
    }
  }

  std::uint64_t encode(const std::vector<std::int64_t>& rem) const {
    std::uint64_t s = 0;
    for (std::size_t r = 0; r < rem.size(); ++r) s += static_cast<std::uint64_t>(rem[r]) * radix_[r];
    return s;
  }

  void decode(std::uint64_t s, std::vector<std::int64_t>& rem) const {
    for (std::size_t r = 0; r < rem.size(); ++r) {
      const auto width = static_cast<std::uint64_t>(need_[r] + 1);
      rem[r] = static_cast<std::int64_t>(s % width);
      s /= width;
    }
  }

  const SearchBudget& budget_;
  std::vector<std::int64_t> need_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::vector<Stop>> voters_;
  // [voter][relevant][j] = cost of the j cheapest passes of that alternative
  // among voters from `voter` on; the size caps how many passes remain.
  std::vector<std::vector<std::vector<std::int64_t>>> suffix_cheapest_;
  std::int64_t expanded_ = 0;
};

// Smallest cost <= limit, or kInfeasible.
std::int64_t bounded_lift_search(const Profile& p, Alternative a, std::int64_t limit, const SearchBudget& budget) {
  LiftSearch search(p, a, budget);
  if (search.trivial()) return 0;
  std::int64_t bound = search.initial_bound();
  while (bound <= limit) {
    std::int64_t next_bound = kInfeasible;
    const auto found = search.search(bound, next_bound);
    if (found < kInfeasible) return found;
    if (next_bound >= kInfeasible) break;
    bound = next_bound;
  }
  return kInfeasible;
}

}  // namespace

std::int64_t dodgson_score_exact(const Profile& p, Alternative a, const SearchBudget& budget) {
  const auto score = bounded_lift_search(p, a, kInfeasible - 1, budget);
  if (score >= kInfeasible) throw Error("dodgson: lift search found no solution");
  return score;
}

bool dodgson_decision_exact(const Profile& p, Alternative a, std::int64_t t, const SearchBudget& budget) {
  if (t < 0) return false;
  return bounded_lift_search(p, a, t, budget) <= t;
}

std::int64_t dodgson_score_bfs_oracle(const Profile& p, Alternative a, const SearchBudget& budget) {
  const int m = p.num_alternatives();
  check_alternative(m, a);
  const int n = p.num_voters();

  std::string start;
  for (const auto& r : p) {
    for (const auto x : r.order()) start.push_back(static_cast<char>(x));
  }
  auto is_goal = [&](const std::string& s) {
    for (Alternative b = 0; b < m; ++b) {
      if (b == a) continue;
      int above = 0;
      for (int i = 0; i < n; ++i) {
        const auto* ballot = s.data() + static_cast<std::ptrdiff_t>(i) * m;
        const auto* pa = std::find(ballot, ballot + m, static_cast<char>(a));
        const auto* pb = std::find(ballot, ballot + m, static_cast<char>(b));
        if (pa < pb) ++above;
      }
      if (2 * above <= n) return false;
    }
    return true;
  };

  std::unordered_map<std::string, std::int64_t> dist{{start, 0}};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    const auto d = dist[cur];
    if (is_goal(cur)) return d;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j + 1 < m; ++j) {
        auto next = cur;
        const auto at = static_cast<std::size_t>(i * m + j);
        std::swap(next[at], next[at + 1]);
        if (dist.try_emplace(next, d + 1).second) {
          if (static_cast<std::int64_t>(dist.size()) > budget.bfs_states) {
            throw BudgetExceeded("dodgson bfs: more than " + std::to_string(budget.bfs_states) + " states");
          }
          queue.push_back(std::move(next));
        }
      }
    }
  }
  throw Error("dodgson bfs: goal unreachable");
}

}  // namespace wdlab
