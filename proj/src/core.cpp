#include "wdlab/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wdlab {

namespace {

// Inverse of a candidate permutation, or empty if it is not one.
std::vector<int> inverse_or_empty(const std::vector<Alternative>& v) {
  std::vector<int> inv(v.size(), -1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = v[i];
    if (x < 0 || static_cast<std::size_t>(x) >= v.size() || inv[static_cast<std::size_t>(x)] != -1) return {};
    inv[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  return inv;
}

void check_same_m(int m1, int m2) {
  if (m1 != m2) {
    throw DimensionError("alternative counts differ: " + std::to_string(m1) + " vs " + std::to_string(m2));
  }
}

}  // namespace

void check_alternative(int m, Alternative a) {
  if (a < 0 || a >= m) {
    throw DimensionError("alternative " + std::to_string(a) + " outside 0.." + std::to_string(m - 1));
  }
}

// --- Ranking ------------------------------------------------------------------

Ranking::Ranking(std::vector<Alternative> order) : order_(std::move(order)) {
  pos_ = inverse_or_empty(order_);
  if (pos_.empty() && !order_.empty()) throw InvalidArgument("ranking is not a permutation of 0..m-1");
}

Ranking Ranking::identity(int m) {
  std::vector<Alternative> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

Ranking Ranking::reversed() const { return Ranking(std::vector<Alternative>(order_.rbegin(), order_.rend())); }

// --- Permutation --------------------------------------------------------------

Permutation::Permutation(std::vector<Alternative> image) : image_(std::move(image)) {
  if (inverse_or_empty(image_).empty() && !image_.empty()) throw InvalidArgument("permutation is not a bijection");
}

Permutation Permutation::identity(int m) {
  std::vector<Alternative> image(static_cast<std::size_t>(m));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int m, Alternative a, Alternative b) {
  check_alternative(m, a);
  check_alternative(m, b);
  auto p = identity(m);
  std::swap(p.image_[static_cast<std::size_t>(a)], p.image_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
  check_same_m(size(), inner.size());
  std::vector<Alternative> out(image_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = (*this)(inner(static_cast<Alternative>(x)));
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const { return Permutation(inverse_or_empty(image_)); }

// --- Profiles -----------------------------------------------------------------

Profile::Profile(int m, std::vector<Ranking> rankings) : m_(m), rankings_(std::move(rankings)) {
  if (rankings_.empty()) throw InvalidArgument("profile needs at least one ranking");
  for (const auto& r : rankings_) check_same_m(m_, r.size());
}

WeightedProfile::WeightedProfile(int m, std::vector<Entry> entries) : m_(m), entries_(std::move(entries)) {
  Rational total = 0;
  for (const auto& e : entries_) {
    check_same_m(m_, e.ranking.size());
    if (e.weight < 0) throw InvalidArgument("negative weight " + to_string(e.weight));
    total += e.weight;
  }
  if (total <= 0) throw InvalidArgument("weighted profile needs positive total weight");
}

WeightedProfile::WeightedProfile(const Profile& p) : m_(p.num_alternatives()) {
  entries_.reserve(static_cast<std::size_t>(p.num_voters()));
  for (const auto& r : p) entries_.push_back({r, Rational(1)});
}

Rational WeightedProfile::total_weight() const {
  Rational total = 0;
  for (const auto& e : entries_) total += e.weight;
  return total;
}

// --- Digraph ------------------------------------------------------------------

Digraph::Digraph(int m, const std::vector<Arc>& arcs) : Digraph(m) {
  for (const auto& [u, v] : arcs) add_arc(u, v);
}

void Digraph::add_arc(int u, int v) {
  check_alternative(m_, u);
  check_alternative(m_, v);
  if (u == v) throw InvalidArgument("self-loop at " + std::to_string(u));
  if (has_arc(u, v)) throw InvalidArgument("duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
  adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v)] = true;
  arcs_.emplace_back(u, v);
}

bool Digraph::has_two_cycle() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return has_arc(a.second, a.first); });
}

bool Digraph::is_eulerian() const {
  std::vector<int> balance(static_cast<std::size_t>(m_), 0);
  for (const auto& [u, v] : arcs_) {
    ++balance[static_cast<std::size_t>(u)];
    --balance[static_cast<std::size_t>(v)];
  }
  if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) return false;
  if (arcs_.empty()) return true;

  // weak connectivity over vertices that touch an arc
  std::vector<int> parent(static_cast<std::size_t>(m_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [u, v] : arcs_) parent[static_cast<std::size_t>(find(u))] = find(v);
  const int root = find(arcs_.front().first);
  return std::all_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return find(a.first) == root; });
}

IntWmg Digraph::margins() const {
  if (has_two_cycle()) throw InvalidArgument("digraph has a 2-cycle; margins are not antisymmetric");
  IntWmg w(m_);
  for (const auto& [u, v] : arcs_) w.set(u, v, 1);
  return w;
}

// --- distances ----------------------------------------------------------------

std::int64_t kt_distance(const Ranking& r1, const Ranking& r2) {
  check_same_m(r1.size(), r2.size());
  const int m = r1.size();
  std::int64_t d = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      // r1 places r1[i] above r1[j]
      if (r2.prefers(r1[static_cast<std::size_t>(j)], r1[static_cast<std::size_t>(i)])) ++d;
    }
  }
  return d;
}

std::int64_t kt_profile_distance(const Profile& p, const Ranking& r) {
  check_same_m(p.num_alternatives(), r.size());
  std::int64_t total = 0;
  for (const auto& v : p) total += kt_distance(v, r);
  return total;
}

Rational kt_profile_distance(const WeightedProfile& p, const Ranking& r) {
  check_same_m(p.num_alternatives(), r.size());
  Rational total = 0;
  for (const auto& e : p.entries()) total += e.weight * kt_distance(e.ranking, r);
  return total;
}

// --- structural operations ----------------------------------------------------

std::vector<Alternative> top_k(const Ranking& r, int k) {
  if (k < 1 || k > r.size()) {
    throw InvalidArgument("top_k: k=" + std::to_string(k) + " outside 1.." + std::to_string(r.size()));
  }
  const auto o = r.order();
  return {o.begin(), o.begin() + k};
}

Ranking apply_permutation(const Permutation& sigma, const Ranking& r) {
  check_same_m(sigma.size(), r.size());
  std::vector<Alternative> out(static_cast<std::size_t>(r.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sigma(r[i]);
  return Ranking(std::move(out));
}

Profile apply_permutation(const Permutation& sigma, const Profile& p) {
  std::vector<Ranking> out;
  out.reserve(static_cast<std::size_t>(p.num_voters()));
  for (const auto& r : p) out.push_back(apply_permutation(sigma, r));
  return Profile(p.num_alternatives(), std::move(out));
}

Profile app_last(const Profile& p, int m_prime, const std::optional<std::vector<std::vector<Alternative>>>& tails) {
  if (m_prime < 1) throw InvalidArgument("app_last: m_prime must be positive");
  const int m = p.num_alternatives();
  if (tails && static_cast<int>(tails->size()) != p.num_voters()) {
    throw InvalidArgument("app_last: need one tail per voter");
  }
  std::vector<Alternative> canonical(static_cast<std::size_t>(m_prime));
  std::iota(canonical.begin(), canonical.end(), m);

  std::vector<Ranking> out;
  out.reserve(static_cast<std::size_t>(p.num_voters()));
  for (int i = 0; i < p.num_voters(); ++i) {
    const auto& tail = tails ? (*tails)[static_cast<std::size_t>(i)] : canonical;
    auto sorted = tail;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != canonical) throw InvalidArgument("app_last: tail is not a permutation of the new alternatives");
    const auto o = p[static_cast<std::size_t>(i)].order();
    std::vector<Alternative> order(o.begin(), o.end());
    order.insert(order.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(order));
  }
  return Profile(m + m_prime, std::move(out));
}

std::vector<Profile> enumerate_app_last(const Profile& p, int m_prime) {
  if (m_prime < 1) throw InvalidArgument("app_last: m_prime must be positive");
  const int m = p.num_alternatives();
  std::vector<std::vector<Alternative>> perms;
  std::vector<Alternative> tail(static_cast<std::size_t>(m_prime));
  std::iota(tail.begin(), tail.end(), m);
  do perms.push_back(tail);
  while (std::next_permutation(tail.begin(), tail.end()));

  const auto n = static_cast<std::size_t>(p.num_voters());
  std::vector<std::size_t> choice(n, 0);
  std::vector<Profile> out;
  while (true) {
    std::vector<std::vector<Alternative>> tails(n);
    for (std::size_t i = 0; i < n; ++i) tails[i] = perms[choice[i]];
    out.push_back(app_last(p, m_prime, tails));
    std::size_t i = 0;
    while (i < n && ++choice[i] == perms.size()) choice[i++] = 0;
    if (i == n) break;
  }
  return out;
}

bool top_matches(const Profile& big, const Profile& small) {
  if (big.num_voters() != small.num_voters() || big.num_alternatives() < small.num_alternatives()) return false;
  const auto k = static_cast<std::size_t>(small.num_alternatives());
  for (std::size_t i = 0; i < static_cast<std::size_t>(big.num_voters()); ++i) {
    const auto b = big[i].order();
    const auto s = small[i].order();
    if (!std::equal(s.begin(), s.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k))) return false;
  }
  return true;
}

// --- majority structure -------------------------------------------------------

std::vector<std::int64_t> pairwise_counts(const Profile& p) {
  const auto m = static_cast<std::size_t>(p.num_alternatives());
  std::vector<std::int64_t> counts(m * m, 0);
  for (const auto& r : p) {
    const auto o = r.order();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) ++counts[static_cast<std::size_t>(o[i]) * m + static_cast<std::size_t>(o[j])];
    }
  }
  return counts;
}

std::int64_t prefer_count(const Profile& p, Alternative a, Alternative b) {
  check_alternative(p.num_alternatives(), a);
  check_alternative(p.num_alternatives(), b);
  return std::count_if(p.begin(), p.end(), [&](const Ranking& r) { return r.prefers(a, b); });
}

IntWmg wmg(const Profile& p) {
  const int m = p.num_alternatives();
  const auto counts = pairwise_counts(p);
  IntWmg w(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      w.set(a, b, counts[static_cast<std::size_t>(a * m + b)] - counts[static_cast<std::size_t>(b * m + a)]);
    }
  }
  return w;
}

RationalWmg wmg(const WeightedProfile& p) {
  const int m = p.num_alternatives();
  RationalWmg w(m);
  for (const auto& e : p.entries()) {
    const auto o = e.ranking.order();
    for (std::size_t i = 0; i < o.size(); ++i) {
      for (std::size_t j = i + 1; j < o.size(); ++j) w.add(o[i], o[j], e.weight);
    }
  }
  return w;
}

std::optional<Alternative> condorcet_winner(const Profile& p) {
  const int m = p.num_alternatives();
  const auto counts = pairwise_counts(p);
  const std::int64_t n = p.num_voters();
  for (int a = 0; a < m; ++a) {
    bool wins = true;
    for (int b = 0; b < m && wins; ++b) {
      // strictly more than half: 2*count > n
      if (b != a && 2 * counts[static_cast<std::size_t>(a * m + b)] <= n) wins = false;
    }
    if (wins) return a;
  }
  return std::nullopt;
}

std::int64_t deficit(const Profile& p, Alternative a, Alternative b) {
  if (a == b) throw InvalidArgument("deficit: a and b must differ");
  const std::int64_t n = p.num_voters();
  return std::max<std::int64_t>(0, n / 2 + 1 - prefer_count(p, a, b));
}

std::int64_t backward_arcs(const Digraph& g, const Ranking& r) {
  check_same_m(g.num_vertices(), r.size());
  return std::count_if(g.arcs().begin(), g.arcs().end(),
                       [&](const Digraph::Arc& arc) { return r.prefers(arc.second, arc.first); });
}

std::vector<Ranking> all_rankings(int m) {
  std::vector<Alternative> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> out;
  do out.emplace_back(order);
  while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace wdlab
