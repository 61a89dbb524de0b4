#pragma once

#include <cstdint>
#include <string_view>

#include "wdlab/core.hpp"

namespace wdlab {

enum class Certainty { Definitely, Maybe };

struct GreedyResult {
  std::int64_t score = 0;
  Certainty certainty = Certainty::Maybe;
  friend bool operator==(const GreedyResult&, const GreedyResult&) = default;
};

/// Voters ranking b immediately above a.
std::int64_t immediately_above_count(const Profile& p, Alternative a, Alternative b);

/// Sum of deficits of `a`. Definitely when every deficit can be bought with
/// one swap of the responsible alternative directly above `a`; the score is
/// then exact, otherwise it is a lower bound.
GreedyResult greedy_dodgson(const Profile& p, Alternative a);

enum class DecisionOutcome { Yes, No, Failure };

/// Yes/No from a Definitely result, Failure on Maybe.
DecisionOutcome semirandom_dodgson_decision(const Profile& p, Alternative a, std::int64_t t);

std::string_view to_string(Certainty c);
std::string_view to_string(DecisionOutcome d);

}  // namespace wdlab
