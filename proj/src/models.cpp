#include "wdlab/models.hpp"

#include <algorithm>
#include <numeric>

namespace wdlab {

namespace {

std::int64_t factorial(int k) {
  if (k > 20) throw BudgetExceeded("factorial of " + std::to_string(k) + " does not fit in 64 bits");
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// True with probability exactly r (0 <= r <= 1).
bool bernoulli(const Rational& r, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> draw(0, r.denominator() - 1);
  return draw(rng) < r.numerator();
}

void check_parameter(const PreferenceModel& model, const Ranking& r) {
  if (r.size() != model.num_alternatives()) {
    throw DimensionError("ranking over " + std::to_string(r.size()) + " alternatives, model has " +
                         std::to_string(model.num_alternatives()));
  }
}

}  // namespace

PreferenceModel PreferenceModel::alpha_ic(int m, Rational alpha) {
  if (m < 1) throw InvalidArgument("model: m must be positive");
  if (alpha < 0 || alpha > 1) throw InvalidArgument("alpha_ic: alpha must lie in [0,1]");
  return {Kind::AlphaIc, m, alpha, 0};
}

PreferenceModel PreferenceModel::partial_alt(int m, int K) {
  if (m < 1) throw InvalidArgument("model: m must be positive");
  if (K < 1 || K > m) throw InvalidArgument("partial_alt: K must lie in 1..m");
  return {Kind::PartialAlt, m, Rational(0), K};
}

Rational PreferenceModel::pmf(const Ranking& parameter, const Ranking& r) const {
  check_parameter(*this, parameter);
  check_parameter(*this, r);
  if (kind_ == Kind::AlphaIc) {
    Rational p = alpha_ / factorial(m_);
    if (r == parameter) p += 1 - alpha_;
    return p;
  }
  for (int i = 0; i < k_; ++i) {
    if (r[static_cast<std::size_t>(i)] != parameter[static_cast<std::size_t>(i)]) return 0;
  }
  // the tails hold the same set once the tops agree
  return Rational(1, factorial(m_ - k_));
}

Ranking PreferenceModel::sample(const Ranking& parameter, Rng& rng) const {
  check_parameter(*this, parameter);
  if (kind_ == Kind::AlphaIc) {
    return bernoulli(alpha_, rng) ? uniform_ranking(m_, rng) : parameter;
  }
  std::vector<Alternative> order(parameter.order().begin(), parameter.order().end());
  std::shuffle(order.begin() + k_, order.end(), rng);
  return Ranking(std::move(order));
}

std::string PreferenceModel::describe() const {
  if (kind_ == Kind::AlphaIc) return "alpha_ic(alpha=" + to_string(alpha_) + ",m=" + std::to_string(m_) + ")";
  return "partial_alt(K=" + std::to_string(k_) + ",m=" + std::to_string(m_) + ")";
}

Ranking permuted_parameter(const Permutation& sigma, const Ranking& parameter) {
  return apply_permutation(sigma, parameter);
}

Ranking uniform_ranking(int m, Rng& rng) {
  std::vector<Alternative> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Ranking(std::move(order));
}

// --- ParameterProfile -----------------------------------------------------------

ParameterProfile::ParameterProfile(PreferenceModel model, std::vector<Entry> entries)
    : model_(model), entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("parameter profile: no entries");
  for (const auto& e : entries_) {
    check_parameter(model_, e.parameter);
    if (e.weight <= 0) throw InvalidArgument("parameter profile: weights must be positive");
  }
}

ParameterProfile::ParameterProfile(PreferenceModel model, const std::vector<Ranking>& parameters)
    : ParameterProfile(model, [&] {
        std::vector<Entry> entries;
        for (const auto& r : parameters) entries.push_back({r, Rational(1)});
        return entries;
      }()) {}

Rational ParameterProfile::total_weight() const {
  Rational total = 0;
  for (const auto& e : entries_) total += e.weight;
  return total;
}

bool ParameterProfile::has_integer_weights() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.weight.denominator() == 1; });
}

Profile sample_profile(const ParameterProfile& pp, Rng& rng) {
  if (!pp.has_integer_weights()) throw InvalidArgument("sample_profile: scale and round fractional weights first");
  std::vector<Ranking> rankings;
  for (const auto& e : pp.entries()) {
    for (std::int64_t j = 0; j < e.weight.numerator(); ++j) rankings.push_back(pp.model().sample(e.parameter, rng));
  }
  return Profile(pp.model().num_alternatives(), std::move(rankings));
}

RationalWmg wmg_of_distribution(const PreferenceModel& model, const Ranking& parameter) {
  check_parameter(model, parameter);
  const int m = model.num_alternatives();
  RationalWmg w(m);
  if (model.kind() == PreferenceModel::Kind::AlphaIc) {
    // uniform part is symmetric, so only the point mass contributes
    const Rational keep = 1 - model.alpha();
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) w.set(parameter[static_cast<std::size_t>(i)], parameter[static_cast<std::size_t>(j)], keep);
    }
    return w;
  }
  // Pairs touching the fixed top keep their order; pairs inside the tail are
  // equally likely either way.
  const int k = model.top_k();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < m; ++j) w.set(parameter[static_cast<std::size_t>(i)], parameter[static_cast<std::size_t>(j)], 1);
  }
  return w;
}

Rational three_cycle_max_weight(const RationalWmg& w) {
  const int m = w.size();
  if (m < 3) throw InvalidArgument("three_cycle_max_weight: needs m >= 3");
  bool first = true;
  Rational best = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (a == b || b == c || a == c) continue;
        const Rational s = w.at(a, b) + w.at(b, c) + w.at(c, a);
        if (first || s > best) best = s;
        first = false;
      }
    }
  }
  return best;
}

Rational three_cycle_max_weight(const PreferenceModel& model, const Ranking& parameter) {
  return three_cycle_max_weight(wmg_of_distribution(model, parameter));
}

ParameterProfile scale_round_parameter_profile(const ParameterProfile& pp, std::int64_t target_total) {
  const Rational total = pp.total_weight();
  if (Rational(target_total) < total) throw InvalidArgument("scale_round: target below current total weight");
  const Rational factor = Rational(target_total) / total;
  std::vector<ParameterProfile::Entry> out;
  for (const auto& e : pp.entries()) {
    const auto w = floor(e.weight * factor);
    if (w > 0) out.push_back({e.parameter, Rational(w)});
  }
  if (out.empty()) throw InvalidArgument("scale_round: every weight rounded to zero");
  return ParameterProfile(pp.model(), std::move(out));
}

}  // namespace wdlab
