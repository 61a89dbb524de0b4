#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace wdtest;

TEST_CASE("dodgson examples") {
  CHECK(dodgson_score_exact(P({"abc", "acb", "bac"}), 0) == 0);
  CHECK(dodgson_score_bfs_oracle(P({"bac"}), 0) == 1);
  CHECK(dodgson_score_exact(P({"bac"}), 0) == 1);
  CHECK(dodgson_score_exact(P({"cba"}), 0) == 2);
  CHECK(dodgson_score_exact(P({"abc", "bca", "cab"}), 0) == 1);
  CHECK_THROWS_AS(dodgson_score_exact(P({"ab"}), 0), InvalidArgument);
  CHECK_THROWS_AS(dodgson_score_exact(P({"abc"}), 3), DimensionError);
}

TEST_CASE("dodgson lift search matches bfs on m=3 n<=3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : all_profiles(3, n)) {
      for (Alternative a = 0; a < 3; ++a) {
        const auto exact = dodgson_score_exact(p, a);
        REQUIRE(exact == dodgson_score_bfs_oracle(p, a));
        CHECK((exact == 0) == (condorcet_winner(p) == a));
      }
    }
  }
}

TEST_CASE("dodgson lift search matches bfs on random m=4") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_profile(4, 1 + trial % 3, rng);
    for (Alternative a = 0; a < 4; ++a) REQUIRE(dodgson_score_exact(p, a) == dodgson_score_bfs_oracle(p, a));
  }
}

TEST_CASE("dodgson decision agrees with score") {
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_profile(5, 1 + trial % 9, rng);
    const auto s = dodgson_score_exact(p, 0);
    CHECK(dodgson_decision_exact(p, 0, s));
    CHECK_FALSE(dodgson_decision_exact(p, 0, s - 1));
  }
  CHECK_FALSE(dodgson_decision_exact(P({"abc"}), 0, -1));
}

TEST_CASE("dodgson budget") {
  Rng rng(23);
  const auto p = random_profile(7, 15, rng);
  SearchBudget tiny;
  tiny.dodgson_states = 3;
  tiny.bfs_states = 10;
  CHECK_THROWS_AS(dodgson_score_exact(p, p[0][6], tiny), BudgetExceeded);
  CHECK_THROWS_AS(dodgson_score_bfs_oracle(P({"cba", "cba", "cba"}), 0, tiny), BudgetExceeded);
}

TEST_CASE("young") {
  CHECK(young_score_exact(P({"abc", "acb", "abc"}), 0) == 3);
  CHECK(young_score_exact(P({"abc"}), 0) == 1);
  CHECK(young_score_exact(P({"cba"}), 0) == 0);
  CHECK(young_score_exact(P({"abc", "bca", "cab"}), 0) == 1);

  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 3 + trial % 3;
    const auto p = random_profile(m, 1 + trial % 10, rng);
    for (Alternative a = 0; a < m; ++a) REQUIRE(young_score_exact(p, a) == young_brute(p, a));
  }
  SearchBudget tiny;
  tiny.young_count_vectors = 4;
  CHECK_THROWS_AS(young_score_exact(P({"bac", "bac", "cab", "cab"}), 0, tiny), BudgetExceeded);
}

TEST_CASE("kemeny examples") {
  const auto cyc = P({"abc", "bca", "cab"});
  CHECK(kemeny_best(P({"bca", "bca"})).ranking == R("bca"));
  CHECK(kemeny_best(P({"bca", "bca"})).score == 0);
  CHECK(kemeny_best(cyc).score == 4);
  CHECK(kemeny_best(cyc).ranking == R("abc"));
  for (Alternative a = 0; a < 3; ++a) CHECK(kemeny_score_of_alternative(cyc, a) == 4);
  CHECK(kemeny_decision(cyc, 4));
  CHECK_FALSE(kemeny_decision(cyc, 3));
  CHECK_FALSE(kemeny_decision(cyc, -1));
  CHECK(kemeny_decision(cyc, 3 * 3));
  SearchBudget tiny;
  tiny.kemeny_max_alternatives = 2;
  CHECK_THROWS_AS(kemeny_best(cyc, tiny), BudgetExceeded);
}

TEST_CASE("kemeny matches brute force") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 3 + trial % 5;
    const auto p = random_profile(m, 1 + trial % 8, rng);
    const auto best = kemeny_best(p);
    REQUIRE(best.score == kemeny_brute(p));
    CHECK(kt_profile_distance(p, best.ranking) == best.score);
    CHECK(kemeny_score_of_alternative(p, best.ranking[0]) == best.score);
    for (Alternative a = 0; a < m; ++a) {
      const auto s = kemeny_score_of_alternative(p, a);
      CHECK(s >= best.score);
      if (m <= 5) CHECK(s == kemeny_brute(p, [a](const Ranking& r) { return r[0] == a; }));
    }
    for (int k = 0; k < 5; ++k) CHECK(best.score <= kt_profile_distance(p, uniform_ranking(m, rng)));
  }
}

TEST_CASE("kemeny tie break is lexicographic") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + trial % 3;
    const auto p = random_profile(m, 2 + trial % 4, rng);
    const auto best = kemeny_best(p);
    for (const auto& r : all_rankings(m)) {
      if (kt_profile_distance(p, r) == best.score) {
        CHECK(r == best.ranking);
        break;
      }
    }
  }
}

TEST_CASE("dpsf") {
  const auto neg = Dpsf::negative_position();
  CHECK(neg(1) == -1);
  CHECK(neg(9) == -9);
  CHECK(neg.covers(100));
  const auto table = Dpsf::from_scores({5, 3, 0});
  CHECK(table(2) == 3);
  CHECK(table.covers(3));
  CHECK_FALSE(table.covers(4));
  CHECK_THROWS_AS(table(4), InvalidArgument);
  CHECK_THROWS_AS(Dpsf::from_scores({3, 3}), InvalidArgument);
  CHECK_THROWS_AS(Committee({}), InvalidArgument);
  CHECK_THROWS_AS(Committee({1, 1}), InvalidArgument);
  CHECK(all_committees(5, 2).size() == 10);
  CHECK(all_committees(4, 4).size() == 1);
}

TEST_CASE("chamberlin-courant") {
  const auto alpha = Dpsf::negative_position();
  const auto p = P({"abcd", "dcba", "bdac"});
  CHECK(cc_score(p, Committee({0, 1, 2, 3}), alpha, Aggregator::Sum) == -3);
  CHECK(cc_score(p, Committee({2}), alpha, Aggregator::Sum) == -3 - 2 - 4);
  CHECK(cc_score(p, Committee({2}), alpha, Aggregator::Min) == -4);

  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 3 + trial % 3;
    const int n = 1 + trial % 6;
    const auto q = random_profile(m, n, rng);
    const auto c = random_committee(m, 1 + trial % 3 % m, rng);
    for (const auto agg : {Aggregator::Sum, Aggregator::Min}) {
      REQUIRE(cc_score(q, c, alpha, agg) == committee_brute(q, c, alpha, agg, false));
    }
  }
}

TEST_CASE("monroe") {
  const auto alpha = Dpsf::negative_position();
  const auto p = P({"abcd", "abcd", "abcd", "abcd"});
  // two voters get a (-1), two get b (-2)
  CHECK(monroe_score(p, Committee({0, 1}), alpha, Aggregator::Sum) == -6);
  CHECK(monroe_score(p, Committee({0, 1}), alpha, Aggregator::Min) == -2);
  CHECK(monroe_score(p, Committee({2}), alpha, Aggregator::Sum) == cc_score(p, Committee({2}), alpha, Aggregator::Sum));

  Rng rng(61);
  const auto tabled = Dpsf::from_scores({10, 7, 3, 2, 0});
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + trial % 3;
    const int n = 1 + trial % 6;
    const auto q = random_profile(m, n, rng);
    const auto c = random_committee(m, 1 + trial % 3, rng);
    for (const auto& a : {alpha, tabled}) {
      for (const auto agg : {Aggregator::Sum, Aggregator::Min}) {
        const auto got = monroe_score(q, c, a, agg);
        REQUIRE(got == committee_brute(q, c, a, agg, true));
        CHECK(got <= cc_score(q, c, a, agg));
      }
    }
  }
}

TEST_CASE("committee decision") {
  const auto alpha = Dpsf::negative_position();
  Rng rng(71);
  const auto p = random_profile(5, 6, rng);
  CHECK(committee_decision(p, 2, std::numeric_limits<std::int64_t>::min(), CommitteeRule::Monroe, alpha,
                           Aggregator::Sum));
  const auto full = cc_score(p, Committee({0, 1, 2, 3, 4}), alpha, Aggregator::Sum);
  CHECK(committee_decision(p, 5, full, CommitteeRule::ChamberlinCourant, alpha, Aggregator::Sum));
  CHECK_FALSE(committee_decision(p, 5, full + 1, CommitteeRule::ChamberlinCourant, alpha, Aggregator::Sum));
  const auto winners = winning_committees(p, 2, CommitteeRule::Monroe, alpha, Aggregator::Sum);
  REQUIRE_FALSE(winners.empty());
  const auto top = monroe_score(p, winners.front(), alpha, Aggregator::Sum);
  for (const auto& c : all_committees(5, 2)) CHECK(monroe_score(p, c, alpha, Aggregator::Sum) <= top);
  SearchBudget tiny;
  tiny.committees = 5;
  CHECK_THROWS_AS(committee_decision(p, 2, 0, CommitteeRule::ChamberlinCourant, alpha, Aggregator::Sum, tiny),
                  BudgetExceeded);
}

TEST_CASE("scores are neutral") {
  Rng rng(81);
  const auto alpha = Dpsf::negative_position();
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + trial % 3;
    const auto p = random_profile(m, 1 + trial % 6, rng);
    const auto sigma = random_permutation(m, rng);
    const auto q = apply_permutation(sigma, p);
    for (Alternative a = 0; a < m; ++a) {
      CHECK(dodgson_score_exact(q, sigma(a)) == dodgson_score_exact(p, a));
      CHECK(young_score_exact(q, sigma(a)) == young_score_exact(p, a));
      CHECK(kemeny_score_of_alternative(q, sigma(a)) == kemeny_score_of_alternative(p, a));
    }
    const auto c = random_committee(m, 2, rng);
    std::vector<Alternative> moved;
    for (const auto x : c.members()) moved.push_back(sigma(x));
    CHECK(monroe_score(q, Committee(moved), alpha, Aggregator::Sum) == monroe_score(p, c, alpha, Aggregator::Sum));
    CHECK(cc_score(q, Committee(moved), alpha, Aggregator::Min) == cc_score(p, c, alpha, Aggregator::Min));
  }
}

TEST_CASE("scores survive app_last") {
  Rng rng(91);
  const auto alpha = Dpsf::negative_position();
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + trial % 3;
    const auto p = random_profile(m, 1 + trial % 7, rng);
    const int extra = 1 + trial % 3;
    const auto q = app_last(p, extra);
    for (Alternative a = 0; a < m; ++a) {
      CHECK(dodgson_score_exact(q, a) == dodgson_score_exact(p, a));
      CHECK(young_score_exact(q, a) == young_score_exact(p, a));
    }
    for (const auto& c : all_committees(m, 2)) {
      for (const auto agg : {Aggregator::Sum, Aggregator::Min}) {
        CHECK(cc_score(q, c, alpha, agg) == cc_score(p, c, alpha, agg));
        CHECK(monroe_score(q, c, alpha, agg) == monroe_score(p, c, alpha, agg));
      }
    }
    const auto winners = winning_committees(p, 2, CommitteeRule::ChamberlinCourant, alpha, Aggregator::Sum);
    const auto padded = winning_committees(q, 2, CommitteeRule::ChamberlinCourant, alpha, Aggregator::Sum);
    for (const auto& w : winners) CHECK(std::find(padded.begin(), padded.end(), w) != padded.end());
  }
}
