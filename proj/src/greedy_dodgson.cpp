#include "wdlab/greedy_dodgson.hpp"

namespace wdlab {

std::int64_t immediately_above_count(const Profile& p, Alternative a, Alternative b) {
  const int m = p.num_alternatives();
  check_alternative(m, a);
  check_alternative(m, b);
  if (a == b) throw InvalidArgument("immediately_above_count: a == b");
  std::int64_t count = 0;
  for (const auto& r : p) {
    if (r.position(b) + 1 == r.position(a)) ++count;
  }
  return count;
}

GreedyResult greedy_dodgson(const Profile& p, Alternative a) {
  const int m = p.num_alternatives();
  check_alternative(m, a);
  if (m < 3) throw InvalidArgument("greedy_dodgson: needs m >= 3");

  // One pass: per-b counts of "a above b" and "b directly above a".
  std::vector<std::int64_t> above(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> adjacent(static_cast<std::size_t>(m), 0);
  for (const auto& r : p) {
    const int pa = r.position(a);
    for (int i = pa + 1; i < m; ++i) ++above[static_cast<std::size_t>(r[static_cast<std::size_t>(i)])];
    if (pa > 0) ++adjacent[static_cast<std::size_t>(r[static_cast<std::size_t>(pa - 1)])];
  }
  const std::int64_t need = p.num_voters() / 2 + 1;
  GreedyResult result{0, Certainty::Definitely};
  for (Alternative b = 0; b < m; ++b) {
    if (b == a) continue;
    const auto d = std::max<std::int64_t>(0, need - above[static_cast<std::size_t>(b)]);
    result.score += d;
    if (adjacent[static_cast<std::size_t>(b)] < d) result.certainty = Certainty::Maybe;
  }
  return result;
}

DecisionOutcome semirandom_dodgson_decision(const Profile& p, Alternative a, std::int64_t t) {
  const auto g = greedy_dodgson(p, a);
  if (g.certainty == Certainty::Maybe) return DecisionOutcome::Failure;
  return g.score <= t ? DecisionOutcome::Yes : DecisionOutcome::No;
}

std::string_view to_string(Certainty c) { return c == Certainty::Definitely ? "definitely" : "maybe"; }

std::string_view to_string(DecisionOutcome d) {
  switch (d) {
    case DecisionOutcome::Yes:
      return "yes";
    case DecisionOutcome::No:
      return "no";
    case DecisionOutcome::Failure:
      return "failure";
  }
  return "failure";
}

}  // namespace wdlab
