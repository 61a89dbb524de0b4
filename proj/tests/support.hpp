#pragma once

// Shared fixtures and brute-force oracles. The oracles enumerate the raw
// definitions and share no code with the solvers they check.

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wdlab/core.hpp"
#include "wdlab/models.hpp"
#include "wdlab/rules_exact.hpp"

namespace wdtest {

using namespace wdlab;

/// "bca" -> ranking b > c > a over alternatives a=0, b=1, ...
inline Ranking R(const std::string& letters) {
  std::vector<Alternative> order;
  for (const char ch : letters) order.push_back(ch - 'a');
  return Ranking(order);
}

inline Profile P(const std::vector<std::string>& ballots) {
  std::vector<Ranking> rs;
  for (const auto& b : ballots) rs.push_back(R(b));
  return Profile(static_cast<int>(ballots.front().size()), rs);
}

inline Permutation random_permutation(int m, Rng& rng) {
  const auto r = uniform_ranking(m, rng);
  return Permutation({r.order().begin(), r.order().end()});
}

inline Profile random_profile(int m, int n, Rng& rng) {
  std::vector<Ranking> rs;
  for (int i = 0; i < n; ++i) rs.push_back(uniform_ranking(m, rng));
  return Profile(m, rs);
}

/// Every profile with n voters over m alternatives (ordered tuples).
inline std::vector<Profile> all_profiles(int m, int n) {
  const auto rankings = all_rankings(m);
  std::vector<Profile> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Ranking> rs;
    for (const auto i : idx) rs.push_back(rankings[i]);
    out.emplace_back(m, rs);
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == rankings.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

inline std::int64_t kt_by_pairs(const Ranking& x, const Ranking& y) {
  std::int64_t d = 0;
  for (int a = 0; a < x.size(); ++a) {
    for (int b = a + 1; b < x.size(); ++b) d += (x.prefers(a, b) != y.prefers(a, b)) ? 1 : 0;
  }
  return d;
}

inline std::int64_t kemeny_brute(const Profile& p, const std::function<bool(const Ranking&)>& keep = nullptr) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Alternative> order(static_cast<std::size_t>(p.num_alternatives()));
  std::iota(order.begin(), order.end(), 0);
  do {
    const Ranking r(order);
    if (keep && !keep(r)) continue;
    std::int64_t d = 0;
    for (const auto& v : p) d += kt_by_pairs(v, r);
    best = std::min(best, d);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool is_condorcet_winner(const Profile& p, Alternative a) {
  for (Alternative b = 0; b < p.num_alternatives(); ++b) {
    if (b == a) continue;
    int wins = 0;
    for (const auto& r : p) wins += r.prefers(a, b) ? 1 : 0;
    if (2 * wins <= p.num_voters()) return false;
  }
  return true;
}

/// Largest subset (by raw voter subsets) where a is the Condorcet winner.
inline std::int64_t young_brute(const Profile& p, Alternative a) {
  const int n = p.num_voters();
  std::int64_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Ranking> rs;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) rs.push_back(p[static_cast<std::size_t>(i)]);
    }
    if (static_cast<std::int64_t>(rs.size()) <= best) continue;
    if (is_condorcet_winner(Profile(p.num_alternatives(), rs), a)) best = static_cast<std::int64_t>(rs.size());
  }
  return best;
}

/// Enumerates all |C|^n assignments; `balanced` restricts to Monroe capacities.
inline std::int64_t committee_brute(const Profile& p, const Committee& c, const Dpsf& alpha, Aggregator agg,
                                    bool balanced) {
  const auto n = static_cast<std::size_t>(p.num_voters());
  const auto k = static_cast<std::size_t>(c.size());
  const auto lo = n / k;
  const auto hi = (n + k - 1) / k;
  std::vector<std::size_t> assign(n, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  while (true) {
    bool ok = true;
    if (balanced) {
      std::vector<std::size_t> load(k, 0);
      for (const auto j : assign) ++load[j];
      for (const auto l : load) ok = ok && l >= lo && l <= hi;
    }
    if (ok) {
      std::int64_t sum = 0;
      std::int64_t mn = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < n; ++i) {
        const auto v = alpha(p[i].position(c.members()[assign[i]]) + 1);
        sum += v;
        mn = std::min(mn, v);
      }
      best = std::max(best, agg == Aggregator::Sum ? sum : mn);
    }
    std::size_t i = 0;
    while (i < n && ++assign[i] == k) assign[i++] = 0;
    if (i == n) break;
  }
  return best;
}

inline Committee random_committee(int m, int k, Rng& rng) {
  std::vector<Alternative> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(k));
  return Committee(all);
}

}  // namespace wdtest
