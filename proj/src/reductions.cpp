#include "wdlab/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace wdlab {

// --- X3C ----------------------------------------------------------------------

X3CInstance::X3CInstance(int q, std::vector<Triple> subsets) : q_(q), subsets_(std::move(subsets)) {
  if (q_ <= 0 || q_ % 3 != 0) throw InvalidArgument("x3c: q must be a positive multiple of 3");
  std::set<Triple> seen;
  for (auto& t : subsets_) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= q_) throw InvalidArgument("x3c: element outside 0..q-1");
    if (t[0] == t[1] || t[1] == t[2]) throw InvalidArgument("x3c: subset elements must be distinct");
    if (!seen.insert(t).second) throw InvalidArgument("x3c: repeated subset");
  }
  const auto s = static_cast<std::int64_t>(subsets_.size());
  const std::int64_t qq = q_;
  if (3 * s < qq || 6 * s > qq * qq * qq) throw InvalidArgument("x3c: need q/3 <= s <= q^3/6");
}

bool x3c_bruteforce(const X3CInstance& inst) {
  if (inst.q() > 64) throw BudgetExceeded("x3c_bruteforce: q above 64");
  const int q = inst.q();
  std::vector<std::vector<std::uint64_t>> containing(static_cast<std::size_t>(q));
  for (const auto& t : inst.subsets()) {
    const std::uint64_t mask = (std::uint64_t{1} << t[0]) | (std::uint64_t{1} << t[1]) | (std::uint64_t{1} << t[2]);
    for (const auto e : t) containing[static_cast<std::size_t>(e)].push_back(mask);
  }
  const std::uint64_t full = q == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1;
  std::function<bool(std::uint64_t)> cover = [&](std::uint64_t covered) {
    if (covered == full) return true;
    int e = 0;
    while (covered & (std::uint64_t{1} << e)) ++e;
    for (const auto mask : containing[static_cast<std::size_t>(e)]) {
      if ((mask & covered) == 0 && cover(covered | mask)) return true;
    }
    return false;
  };
  return cover(0);
}

namespace {

// `head` first, then every other alternative in ascending order.
Ranking head_then_rest(int m, const std::vector<Alternative>& head) {
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::vector<Alternative> order = head;
  for (const auto x : head) used[static_cast<std::size_t>(x)] = true;
  for (Alternative x = 0; x < m; ++x) {
    if (!used[static_cast<std::size_t>(x)]) order.push_back(x);
  }
  return Ranking(std::move(order));
}

}  // namespace

DodgsonReductionOutput x3c_to_dodgson(const X3CInstance& inst) {
  const int q = inst.q();
  const int s = inst.s();
  const int m1 = 2 * q + s + 1;

  DodgsonLayout layout;
  layout.critical = 0;
  for (int i = 0; i < q; ++i) {
    layout.a.push_back(1 + i);
    layout.b.push_back(1 + q + i);
  }
  for (int j = 0; j < s; ++j) layout.subset.push_back(1 + 2 * q + j);
  const Alternative c = layout.critical;

  std::vector<Ranking> rankings;
  std::vector<int> occurrences(static_cast<std::size_t>(q), 0);
  for (int j = 0; j < s; ++j) {
    const auto& t = inst.subsets()[static_cast<std::size_t>(j)];
    std::vector<Alternative> head;
    for (const auto e : t) {
      head.push_back(layout.a[static_cast<std::size_t>(e)]);
      ++occurrences[static_cast<std::size_t>(e)];
    }
    head.push_back(layout.subset[static_cast<std::size_t>(j)]);
    head.push_back(c);
    rankings.push_back(head_then_rest(m1, head));
  }
  const int swing = static_cast<int>(rankings.size());

  const int most = *std::max_element(occurrences.begin(), occurrences.end());
  for (int i = 0; i < q; ++i) {
    const auto r = head_then_rest(m1, {layout.a[static_cast<std::size_t>(i)], layout.b[static_cast<std::size_t>(i)], c});
    for (int k = occurrences[static_cast<std::size_t>(i)]; k < most; ++k) rankings.push_back(r);
  }
  const int equalizing = static_cast<int>(rankings.size()) - swing;

  // Every copy of the incremental ranking adds one vote for each a_i over c,
  // so the count is read off the current margins.
  std::vector<Alternative> incremental_head = layout.a;
  incremental_head.insert(incremental_head.end(), layout.b.begin(), layout.b.end());
  incremental_head.push_back(c);
  const auto incremental = head_then_rest(m1, incremental_head);
  std::int64_t margin = 0;
  for (int i = 0; i < q; ++i) {
    std::int64_t mi = 0;
    for (const auto& r : rankings) mi += r.prefers(layout.a[static_cast<std::size_t>(i)], c) ? 1 : -1;
    if (i > 0 && mi != margin) throw ConstructionError("x3c_to_dodgson: element margins against c differ");
    margin = mi;
  }
  const std::int64_t copies = 1 - margin;
  if (copies < 0) {
    throw ConstructionError("x3c_to_dodgson: element alternatives already beat c by " + std::to_string(margin));
  }
  for (std::int64_t k = 0; k < copies; ++k) rankings.push_back(incremental);

  DodgsonReductionOutput out{Profile(m1, std::move(rankings)), c, 4 * q / 3, layout, swing, equalizing,
                             static_cast<int>(copies)};
  return out;
}

ParameterProfile build_padded_parameter_profile(const DodgsonReductionOutput& out, const PreferenceModel& model) {
  const int m1 = out.profile.num_alternatives();
  const int m_total = model.num_alternatives();
  if (m_total < m1) throw DimensionError("padded profile: model has fewer alternatives than the reduction");
  if (model.kind() == PreferenceModel::Kind::PartialAlt && model.top_k() < m1) {
    throw InvalidArgument("padded profile: partial_alt needs K >= " + std::to_string(m1));
  }
  if (m_total == m1) return ParameterProfile(model, out.profile.rankings());
  return ParameterProfile(model, app_last(out.profile, m_total - m1).rankings());
}

DodgsonDecider exact_dodgson_decider(SearchBudget budget) {
  return [budget](const Profile& p, Alternative a, std::int64_t t) {
    return dodgson_decision_exact(p, a, t, budget) ? DecisionOutcome::Yes : DecisionOutcome::No;
  };
}

RandomizedX3CTrace randomized_x3c(const DodgsonReductionOutput& out, const DodgsonDecider& decider,
                               const PreferenceModel& model, Rng& rng) {
  const auto pp = build_padded_parameter_profile(out, model);
  const auto sampled = sample_profile(pp, rng);
  RandomizedX3CTrace trace;
  trace.top_preserved = top_matches(sampled, out.profile);
  if (!trace.top_preserved) {
    trace.answer = true;
    return trace;
  }
  trace.decider_outcome = decider(sampled, out.critical, out.threshold);
  trace.answer = *trace.decider_outcome != DecisionOutcome::No;
  return trace;
}

RandomizedX3CTrace randomized_x3c(const X3CInstance& inst, const DodgsonDecider& decider, const PreferenceModel& model,
                               Rng& rng) {
  return randomized_x3c(x3c_to_dodgson(inst), decider, model, rng);
}

// --- Young extension point ----------------------------------------------------

YoungReductionOutput x3c_to_young(const X3CInstance&) {
  throw NotImplementedError("x3c_to_young: no construction supplied");
}

bool young_reduction_contract_holds(const YoungReduction& build, const X3CInstance& inst,
                                    const SearchBudget& budget) {
  const auto out = build(inst);
  const auto score = young_score_exact(out.profile, out.critical, budget);
  if (x3c_bruteforce(inst) != (score >= out.threshold)) return false;
  for (int extra = 1; extra <= 3; ++extra) {
    if (young_score_exact(app_last(out.profile, extra), out.critical, budget) != score) return false;
  }
  return true;
}

// --- majority graphs and EFAS -------------------------------------------------

Profile mcgarvey_profile(const Digraph& g) {
  if (g.has_two_cycle()) throw InvalidArgument("mcgarvey: graph has a 2-cycle");
  const int m = g.num_vertices();
  if (m < 1) throw InvalidArgument("mcgarvey: graph has no vertices");
  std::vector<Ranking> rankings;
  if (g.num_arcs() == 0) {
    rankings.push_back(Ranking::identity(m));
    rankings.push_back(Ranking::identity(m).reversed());
    return Profile(m, std::move(rankings));
  }
  for (const auto& [u, v] : g.arcs()) {
    std::vector<Alternative> rest;
    for (Alternative x = 0; x < m; ++x) {
      if (x != u && x != v) rest.push_back(x);
    }
    std::vector<Alternative> forward{u, v};
    forward.insert(forward.end(), rest.begin(), rest.end());
    std::vector<Alternative> backward(rest.rbegin(), rest.rend());
    backward.push_back(u);
    backward.push_back(v);
    rankings.emplace_back(std::move(forward));
    rankings.emplace_back(std::move(backward));
  }
  return Profile(m, std::move(rankings));
}

Rational kt_formula(const WeightedProfile& p, const Digraph& g, const Ranking& r) {
  const int m = p.num_alternatives();
  if (g.num_vertices() != m || r.size() != m) throw DimensionError("kt_formula: alternative counts differ");
  const auto w = wmg(p);
  const auto target = g.margins();
  Rational lambda = 0;
  if (g.num_arcs() > 0) {
    const auto& [u, v] = g.arcs().front();
    lambda = w.at(u, v);
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (w.at(a, b) != lambda * target.at(a, b)) {
        throw InvalidArgument("kt_formula: weighted majority graph is not proportional to the digraph");
      }
    }
  }
  const Rational pairs(static_cast<std::int64_t>(m) * (m - 1) / 2);
  return p.total_weight() / 2 * pairs - lambda * g.num_arcs() / 2 + lambda * backward_arcs(g, r);
}

Rational kt_formula(const Profile& p, const Digraph& g, const Ranking& r) {
  return kt_formula(WeightedProfile(p), g, r);
}

EfasThresholds exact_efas_thresholds(const Digraph& g, std::int64_t n, std::int64_t multiplier) {
  const std::int64_t m = g.num_vertices();
  const Rational base = Rational(n * (m * (m - 1) / 2), 2) - Rational(multiplier * g.num_arcs(), 2);
  return {base, Rational(multiplier), Rational(0), Rational(0)};
}

KemenyDecider exact_kemeny_decider(SearchBudget budget) {
  return [budget](const Profile& p, std::int64_t t) {
    return kemeny_decision(p, t, budget) ? DecisionOutcome::Yes : DecisionOutcome::No;
  };
}

bool efas_via_kemeny(const Digraph& g, std::int64_t t, const KemenyDecider& decider, const ProfileBuilder& build,
                     const EfasThresholds& thresholds, EfasOptions options) {
  if (options.require_eulerian && !g.is_eulerian()) throw InvalidArgument("efas_via_kemeny: graph is not Eulerian");
  const auto sampled = build(g);
  if (sampled.num_alternatives() != g.num_vertices()) throw DimensionError("efas_via_kemeny: builder changed m");
  const auto w = wmg(sampled);
  const auto target = g.margins();
  Rational distance = 0;
  for (int a = 0; a < g.num_vertices(); ++a) {
    for (int b = 0; b < g.num_vertices(); ++b) distance += abs(Rational(w.at(a, b)) - thresholds.scale * target.at(a, b));
  }
  if (distance > thresholds.guard_radius) return true;
  const auto threshold = floor(thresholds.base + thresholds.scale * t + thresholds.slack);
  return decider(sampled, threshold) != DecisionOutcome::No;
}

std::int64_t min_feedback_arcs(const Digraph& g, const SearchBudget& budget) {
  const int m = g.num_vertices();
  if (m > budget.brute_force_max_alternatives) {
    throw BudgetExceeded("min_feedback_arcs: m=" + std::to_string(m) + " above brute-force limit");
  }
  std::vector<Alternative> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::int64_t best = g.num_arcs();
  do {
    best = std::min(best, backward_arcs(g, Ranking(order)));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool efas_bruteforce(const Digraph& g, std::int64_t t, const SearchBudget& budget) {
  return min_feedback_arcs(g, budget) <= t;
}

}  // namespace wdlab
