#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "wdlab/rules_exact.hpp"

namespace wdlab {

// --- Young --------------------------------------------------------------------

namespace {

struct BallotType {
  std::vector<int> sign;  // +1 where a ≻ b, -1 otherwise; one slot per b != a
  std::int64_t count;
};

class YoungSearch {
 public:
  YoungSearch(std::vector<BallotType> types, std::int64_t base_size, std::vector<std::int64_t> base_margin)
      : types_(std::move(types)), margin_(std::move(base_margin)), size_(base_size) {
    // remaining positive support per b, from each type on
    const std::size_t width = margin_.size();
    support_.assign(types_.size() + 1, std::vector<std::int64_t>(width, 0));
    remaining_.assign(types_.size() + 1, 0);
    for (std::size_t t = types_.size(); t-- > 0;) {
      support_[t] = support_[t + 1];
      for (std::size_t b = 0; b < width; ++b) {
        if (types_[t].sign[b] > 0) support_[t][b] += types_[t].count;
      }
      remaining_[t] = remaining_[t + 1] + types_[t].count;
    }
  }

  std::int64_t run() {
    dfs(0);
    return best_;
  }

 private:
  void dfs(std::size_t t) {
    if (size_ + remaining_[t] <= best_) return;
    for (std::size_t b = 0; b < margin_.size(); ++b) {
      if (margin_[b] + support_[t][b] <= 0) return;
    }
    if (t == types_.size()) {
      // every margin is positive here, and size_ > best_ >= 0
      best_ = size_;
      return;
    }
    const auto& type = types_[t];
    for (std::int64_t x = type.count; x >= 0; --x) {
      apply(type, x);
      dfs(t + 1);
      apply(type, -x);
    }
  }

  void apply(const BallotType& type, std::int64_t x) {
    size_ += x;
    for (std::size_t b = 0; b < margin_.size(); ++b) margin_[b] += x * type.sign[b];
  }

  std::vector<BallotType> types_;
  std::vector<std::int64_t> margin_;
  std::int64_t size_;
  std::vector<std::vector<std::int64_t>> support_;
  std::vector<std::int64_t> remaining_;
  std::int64_t best_ = 0;
};

}  // namespace

std::int64_t young_score_exact(const Profile& p, Alternative a, const SearchBudget& budget) {
  const int m = p.num_alternatives();
  check_alternative(m, a);
  if (m < 3) throw InvalidArgument("young: needs m >= 3");

  // Only the a-vs-b signs of a ballot matter.
  std::map<std::vector<int>, std::int64_t> by_sign;
  for (const auto& r : p) {
    std::vector<int> sign;
    sign.reserve(static_cast<std::size_t>(m - 1));
    for (Alternative b = 0; b < m; ++b) {
      if (b != a) sign.push_back(r.prefers(a, b) ? 1 : -1);
    }
    ++by_sign[sign];
  }

  // Ballots with a on top never hurt: always keep all of them.
  std::int64_t base = 0;
  std::vector<std::int64_t> margin(static_cast<std::size_t>(m - 1), 0);
  std::vector<BallotType> types;
  std::int64_t space = 1;
  for (const auto& [sign, count] : by_sign) {
    if (std::all_of(sign.begin(), sign.end(), [](int s) { return s > 0; })) {
      base += count;
      for (auto& v : margin) v += count;
      continue;
    }
    if (space > budget.young_count_vectors / (count + 1)) {
      throw BudgetExceeded("young: count-vector space exceeds " + std::to_string(budget.young_count_vectors));
    }
    space *= count + 1;
    types.push_back({sign, count});
  }
  // try types that help the most first
  std::sort(types.begin(), types.end(), [](const BallotType& x, const BallotType& y) {
    const auto plus = [](const BallotType& t) { return std::count(t.sign.begin(), t.sign.end(), 1); };
    return plus(x) > plus(y);
  });
  return YoungSearch(std::move(types), base, std::move(margin)).run();
}

// --- Kemeny -------------------------------------------------------------------

namespace {

// best[S] = cheapest ordering of the alternatives outside S, given that S
// already fills the top |S| positions. Placing x right after S disagrees with
// every voter preferring some still-unplaced y to x.
class KemenyTable {
 public:
  KemenyTable(const Profile& p, const SearchBudget& budget) : m_(p.num_alternatives()) {
    if (m_ > budget.kemeny_max_alternatives || m_ > 30) {
      throw BudgetExceeded("kemeny: m=" + std::to_string(m_) + " exceeds budget " +
                           std::to_string(budget.kemeny_max_alternatives));
    }
    counts_ = pairwise_counts(p);
    const std::uint32_t full = (1u << m_) - 1;
    best_.assign(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t s = full; s-- > 0;) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int x = 0; x < m_; ++x) {
        if (s & (1u << x)) continue;
        best = std::min(best, place_cost(s, x) + best_[s | (1u << x)]);
      }
      best_[s] = best;
    }
  }

  std::int64_t place_cost(std::uint32_t placed, int x) const {
    std::int64_t c = 0;
    for (int y = 0; y < m_; ++y) {
      if (y != x && !(placed & (1u << y))) c += counts_[static_cast<std::size_t>(y * m_ + x)];
    }
    return c;
  }

  std::int64_t best_after(std::uint32_t placed) const { return best_[placed]; }

  /// Lexicographically smallest optimal completion after `placed` prefix.
  std::vector<Alternative> complete(std::uint32_t placed, std::vector<Alternative> prefix) const {
    while (static_cast<int>(prefix.size()) < m_) {
      for (int x = 0; x < m_; ++x) {
        if (placed & (1u << x)) continue;
        if (place_cost(placed, x) + best_[placed | (1u << x)] == best_[placed]) {
          prefix.push_back(x);
          placed |= 1u << x;
          break;
        }
      }
    }
    return prefix;
  }

 private:
  int m_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> best_;
};

}  // namespace

KemenyResult kemeny_best(const Profile& p, const SearchBudget& budget) {
  const KemenyTable table(p, budget);
  return {Ranking(table.complete(0, {})), table.best_after(0)};
}

std::int64_t kemeny_score_of_alternative(const Profile& p, Alternative a, const SearchBudget& budget) {
  check_alternative(p.num_alternatives(), a);
  const KemenyTable table(p, budget);
  const auto bit = 1u << a;
  return table.place_cost(0, a) + table.best_after(bit);
}

bool kemeny_decision(const Profile& p, std::int64_t t, const SearchBudget& budget) {
  const KemenyTable table(p, budget);
  for (Alternative a = 0; a < p.num_alternatives(); ++a) {
    if (table.place_cost(0, a) + table.best_after(1u << a) <= t) return true;
  }
  return false;
}

}  // namespace wdlab
