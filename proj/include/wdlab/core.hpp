#pragma once

// Rankings, profiles, majority graphs and the structural transformations
// shared by every solver.
//
// Alternatives are dense indices 0..m-1. Names, if any, live in I/O tables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wdlab/errors.hpp"
#include "wdlab/rational.hpp"

namespace wdlab {

using Alternative = int;

/// A linear order over m alternatives, most-preferred first.
class Ranking {
 public:
  Ranking() = default;
  /// Throws InvalidArgument unless `order` is a permutation of 0..m-1.
  explicit Ranking(std::vector<Alternative> order);

  static Ranking identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  Alternative operator[](std::size_t i) const { return order_[i]; }
  std::span<const Alternative> order() const { return order_; }

  /// 0-based position of `a` (0 = top).
  int position(Alternative a) const { return pos_[static_cast<std::size_t>(a)]; }
  bool prefers(Alternative a, Alternative b) const { return position(a) < position(b); }

  Ranking reversed() const;

  friend bool operator==(const Ranking& x, const Ranking& y) { return x.order_ == y.order_; }
  friend auto operator<=>(const Ranking& x, const Ranking& y) { return x.order_ <=> y.order_; }

 private:
  std::vector<Alternative> order_;
  std::vector<int> pos_;
};

/// A bijection on 0..m-1, acting on alternatives.
class Permutation {
 public:
  Permutation() = default;
  /// image[x] is the image of alternative x. Throws InvalidArgument if not bijective.
  explicit Permutation(std::vector<Alternative> image);

  static Permutation identity(int m);
  static Permutation transposition(int m, Alternative a, Alternative b);

  int size() const { return static_cast<int>(image_.size()); }
  Alternative operator()(Alternative a) const { return image_[static_cast<std::size_t>(a)]; }
  std::span<const Alternative> image() const { return image_; }

  /// (this ∘ inner)(x) = this(inner(x)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Alternative> image_;
};

/// A non-empty multiset of rankings over a common m.
class Profile {
 public:
  Profile() = default;
  /// Throws InvalidArgument when empty, DimensionError when sizes differ from m.
  Profile(int m, std::vector<Ranking> rankings);

  int num_alternatives() const { return m_; }
  int num_voters() const { return static_cast<int>(rankings_.size()); }
  const Ranking& operator[](std::size_t i) const { return rankings_[i]; }
  const std::vector<Ranking>& rankings() const { return rankings_; }
  auto begin() const { return rankings_.begin(); }
  auto end() const { return rankings_.end(); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int m_ = 0;
  std::vector<Ranking> rankings_;
};

/// Rankings with non-negative rational weights; total weight is positive.
class WeightedProfile {
 public:
  struct Entry {
    Ranking ranking;
    Rational weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  WeightedProfile() = default;
  WeightedProfile(int m, std::vector<Entry> entries);
  /// Every ranking of `p` with weight 1.
  explicit WeightedProfile(const Profile& p);

  int num_alternatives() const { return m_; }
  const std::vector<Entry>& entries() const { return entries_; }
  Rational total_weight() const;

  friend bool operator==(const WeightedProfile&, const WeightedProfile&) = default;

 private:
  int m_ = 0;
  std::vector<Entry> entries_;
};

/// Dense antisymmetric m×m margin matrix: at(a,b) = weight(a≻b) - weight(b≻a).
template <typename T>
class Wmg {
 public:
  Wmg() = default;
  explicit Wmg(int m) : m_(m), data_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), T{0}) {}

  int size() const { return m_; }
  T at(Alternative a, Alternative b) const { return data_[index(a, b)]; }
  /// Sets at(a,b)=v and at(b,a)=-v.
  void set(Alternative a, Alternative b, T v) {
    data_[index(a, b)] = v;
    data_[index(b, a)] = -v;
  }
  void add(Alternative a, Alternative b, T v) {
    data_[index(a, b)] += v;
    data_[index(b, a)] -= v;
  }

  friend bool operator==(const Wmg&, const Wmg&) = default;

 private:
  std::size_t index(Alternative a, Alternative b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b);
  }
  int m_ = 0;
  std::vector<T> data_;
};

using IntWmg = Wmg<std::int64_t>;
using RationalWmg = Wmg<Rational>;

/// Unweighted directed graph on vertices 0..m-1 without self-loops or duplicate arcs.
class Digraph {
 public:
  using Arc = std::pair<int, int>;

  Digraph() = default;
  explicit Digraph(int m) : m_(m), adj_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), false) {}
  Digraph(int m, const std::vector<Arc>& arcs);

  int num_vertices() const { return m_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v)];
  }

  /// Throws InvalidArgument on self-loops, duplicates, or out-of-range endpoints.
  void add_arc(int u, int v);

  bool has_two_cycle() const;
  /// in-degree equals out-degree at every vertex and the arcs form one weakly
  /// connected component (an arcless graph counts as Eulerian).
  bool is_eulerian() const;

  /// at(u,v) = +1 for arc u→v, -1 for v→u, 0 otherwise. Throws on 2-cycles.
  IntWmg margins() const;

 private:
  int m_ = 0;
  std::vector<Arc> arcs_;
  std::vector<bool> adj_;
};

// --- distances --------------------------------------------------------------

/// Number of unordered pairs ordered oppositely by r1 and r2.
std::int64_t kt_distance(const Ranking& r1, const Ranking& r2);
std::int64_t kt_profile_distance(const Profile& p, const Ranking& r);
Rational kt_profile_distance(const WeightedProfile& p, const Ranking& r);

// --- structural operations --------------------------------------------------

/// First k alternatives of r, in order. Requires 1 <= k <= m.
std::vector<Alternative> top_k(const Ranking& r, int k);

/// order[i] of the result is sigma(order[i] of r).
Ranking apply_permutation(const Permutation& sigma, const Ranking& r);
Profile apply_permutation(const Permutation& sigma, const Profile& p);

/// Appends alternatives m..m+m_prime-1 below every ranking of p. `tails`, when
/// given, holds one permutation of the new indices per voter; otherwise every
/// voter gets the ascending tail.
Profile app_last(const Profile& p, int m_prime,
                 const std::optional<std::vector<std::vector<Alternative>>>& tails = std::nullopt);

/// Every member of AppLast(p, m_prime); there are (m_prime!)^n of them.
std::vector<Profile> enumerate_app_last(const Profile& p, int m_prime);

/// Top_{m_small}(big) == small, voter by voter. False when the voter counts differ.
bool top_matches(const Profile& big, const Profile& small);

// --- majority structure -----------------------------------------------------

/// counts[a*m+b] = number of voters with a ≻ b.
std::vector<std::int64_t> pairwise_counts(const Profile& p);
std::int64_t prefer_count(const Profile& p, Alternative a, Alternative b);

IntWmg wmg(const Profile& p);
RationalWmg wmg(const WeightedProfile& p);

std::optional<Alternative> condorcet_winner(const Profile& p);

/// max(0, floor(n/2) + 1 - |{i : a ≻_i b}|). Throws InvalidArgument when a == b.
std::int64_t deficit(const Profile& p, Alternative a, Alternative b);

/// Arcs u→v of g with v ranked above u in r.
std::int64_t backward_arcs(const Digraph& g, const Ranking& r);

/// All m! rankings in lexicographic order.
std::vector<Ranking> all_rankings(int m);

/// Throws DimensionError when `a` is not in 0..m-1.
void check_alternative(int m, Alternative a);

}  // namespace wdlab
