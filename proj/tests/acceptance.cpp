// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Usage: acceptance [output-dir]. Experiment outputs go to output-dir (a
// temporary directory by default, removed afterwards).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "stats.hpp"
#include "support.hpp"
#include "wdlab/experiments.hpp"
#include "wdlab/greedy_dodgson.hpp"
#include "wdlab/io.hpp"
#include "wdlab/reductions.hpp"

using namespace wdtest;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line.precision(3);
  line << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << " | " << title << " | " << o.detail
       << " | " << std::fixed << secs << " s";
  std::cout << line.str() << std::endl;
  failures += !o.pass;
}

// Every oriented graph on m vertices: each pair gets no arc, u->v, or v->u.
void for_each_oriented_graph(int m, const std::function<void(const Digraph&)>& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
  }
  std::vector<int> state(pairs.size(), 0);
  while (true) {
    std::vector<Digraph::Arc> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (state[i] == 1) arcs.push_back(pairs[i]);
      if (state[i] == 2) arcs.emplace_back(pairs[i].second, pairs[i].first);
    }
    f(Digraph(m, arcs));
    std::size_t i = 0;
    while (i < state.size() && ++state[i] == 3) state[i++] = 0;
    if (i == state.size()) break;
  }
}

// Fewest arcs whose removal leaves g acyclic, by trying arc subsets by size.
std::int64_t feedback_by_subsets(const Digraph& g) {
  const auto& arcs = g.arcs();
  const int e = static_cast<int>(arcs.size());
  const int m = g.num_vertices();
  const auto acyclic_without = [&](std::uint32_t removed) {
    std::vector<int> indeg(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < e; ++i) {
      if (!(removed & (1u << i))) ++indeg[static_cast<std::size_t>(arcs[i].second)];
    }
    std::vector<int> ready;
    for (int v = 0; v < m; ++v) {
      if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
    int seen = 0;
    while (!ready.empty()) {
      const int u = ready.back();
      ready.pop_back();
      ++seen;
      for (int i = 0; i < e; ++i) {
        if (!(removed & (1u << i)) && arcs[i].first == u && --indeg[static_cast<std::size_t>(arcs[i].second)] == 0) {
          ready.push_back(arcs[i].second);
        }
      }
    }
    return seen == m;
  };
  std::int64_t best = e;
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    const auto size = __builtin_popcount(mask);
    if (size < best && acyclic_without(mask)) best = size;
  }
  return best;
}

std::string count(const std::string& what, std::int64_t n) { return std::to_string(n) + " " + what; }

struct ExperimentRun {
  ExperimentConfig config;
  TrialReport report;
};

std::vector<ExperimentRun> experiment_runs;

TrialReport run_and_keep(ExperimentConfig cfg, const fs::path& dir, const std::string& name) {
  cfg.output = (dir / name).string();
  auto rep = run_experiment(cfg);
  rep.write();
  experiment_runs.push_back({cfg, rep});
  return rep;
}

std::string check_summary(const TrialReport& rep) {
  std::ostringstream os;
  os.precision(4);
  for (const auto& c : rep.checks) {
    if (!c.gating) continue;
    os << c.name << "=" << c.empirical << (c.lower ? ">=" : "<=") << c.bound << "-+3se:" << to_string(c.verdict)
       << "; ";
  }
  auto s = os.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

json x3c_json(const X3CInstance& inst) {
  auto subsets = json::array();
  for (const auto& t : inst.subsets()) subsets.push_back({t[0], t[1], t[2]});
  return {{"q", inst.q()}, {"subsets", subsets}};
}

}  // namespace

int main(int argc, char** argv) {
  const bool keep = argc > 1;
  const fs::path outdir = keep ? fs::path(argv[1]) : fs::temp_directory_path() / ("wdlab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(outdir);

  criterion(1, "dodgson exact search equals breadth-first oracle, all m=3 n=3 profiles", [] {
    std::int64_t checked = 0, bad = 0;
    for (const auto& p : all_profiles(3, 3)) {
      for (Alternative a = 0; a < 3; ++a) {
        ++checked;
        bad += dodgson_score_exact(p, a) != dodgson_score_bfs_oracle(p, a);
      }
    }
    return Outcome{bad == 0 && checked == 648, count("pairs", checked) + ", " + count("mismatches", bad)};
  });

  criterion(2, "greedy Definitely results are exact and deficit sums are lower bounds", [] {
    std::int64_t checked = 0, definitely = 0, wrong = 0, above = 0;
    const auto check = [&](const Profile& p, Alternative a) {
      const auto g = greedy_dodgson(p, a);
      const auto exact = dodgson_score_exact(p, a);
      ++checked;
      above += g.score > exact;
      if (g.certainty == Certainty::Definitely) {
        ++definitely;
        wrong += g.score != exact;
      }
    };
    for (const auto& p : all_profiles(3, 3)) {
      for (Alternative a = 0; a < 3; ++a) check(p, a);
    }
    Rng rng(2024);
    for (int i = 0; i < 10000; ++i) {
      const int m = std::uniform_int_distribution<int>(3, 5)(rng);
      const int n = std::uniform_int_distribution<int>(1, 9)(rng);
      const auto p = random_profile(m, n, rng);
      check(p, std::uniform_int_distribution<int>(0, m - 1)(rng));
    }
    return Outcome{wrong == 0 && above == 0, count("cases", checked) + ", " + count("definitely", definitely) + ", " +
                                                 count("wrong definitely", wrong) + ", " +
                                                 count("lower-bound violations", above)};
  });

  criterion(3, "X3C reduction: cover exists iff dodgson score <= 4q/3, element margins 1", [] {
    std::int64_t instances = 0, wrong = 0, margin_bad = 0, construction_errors = 0, yes = 0;
    const auto check = [&](const X3CInstance& inst) {
      ++instances;
      DodgsonReductionOutput out;
      try {
        out = x3c_to_dodgson(inst);
      } catch (const ConstructionError&) {
        ++construction_errors;
        return;
      }
      const bool cover = x3c_bruteforce(inst);
      yes += cover;
      wrong += cover != dodgson_decision_exact(out.profile, out.critical, out.threshold);
      const auto w = wmg(out.profile);
      for (const auto a : out.layout.a) margin_bad += w.at(a, out.critical) != 1;
    };
    check(X3CInstance(3, {{0, 1, 2}}));
    std::vector<X3CInstance::Triple> triples;
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        for (int c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
      }
    }
    const int T = static_cast<int>(triples.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      if (pick.size() >= 2) {
        std::vector<X3CInstance::Triple> chosen;
        for (const int i : pick) chosen.push_back(triples[static_cast<std::size_t>(i)]);
        check(X3CInstance(6, chosen));
      }
      if (pick.size() == 6) return;
      for (int i = from; i < T; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    return Outcome{wrong == 0 && margin_bad == 0 && construction_errors == 0 && instances == 60440,
                   count("instances", instances) + " (" + std::to_string(yes) + " with a cover), " +
                       count("decision mismatches", wrong) + ", " + count("margin violations", margin_bad) + ", " +
                       count("negative incremental counts", construction_errors)};
  });

  criterion(4, "scores over the original alternatives survive appending alternatives last", [] {
    Rng rng(77);
    std::int64_t comparisons = 0, bad = 0;
    const std::vector<Dpsf> dpsfs{Dpsf::negative_position(), Dpsf::from_scores({10, 7, 5, 3, 2, 1, 0, -1})};
    for (int trial = 0; trial < 200; ++trial) {
      const int m = std::uniform_int_distribution<int>(3, 5)(rng);
      const int n = std::uniform_int_distribution<int>(1, 7)(rng);
      const auto p = random_profile(m, n, rng);
      for (int extra = 1; extra <= 3; ++extra) {
        std::vector<std::vector<Alternative>> tails;
        for (int i = 0; i < n; ++i) {
          std::vector<Alternative> tail(static_cast<std::size_t>(extra));
          std::iota(tail.begin(), tail.end(), m);
          std::shuffle(tail.begin(), tail.end(), rng);
          tails.push_back(tail);
        }
        const auto big = app_last(p, extra, tails);
        for (Alternative a = 0; a < m; ++a) {
          comparisons += 2;
          bad += dodgson_score_exact(p, a) != dodgson_score_exact(big, a);
          bad += young_score_exact(p, a) != young_score_exact(big, a);
        }
        for (int k = 1; k < m; ++k) {
          for (const auto& c : all_committees(m, k)) {
            for (const auto& alpha : dpsfs) {
              for (const auto agg : {Aggregator::Sum, Aggregator::Min}) {
                for (const auto rule : {CommitteeRule::ChamberlinCourant, CommitteeRule::Monroe}) {
                  ++comparisons;
                  bad += committee_score(p, c, rule, alpha, agg) != committee_score(big, c, rule, alpha, agg);
                }
              }
            }
          }
        }
      }
    }
    return Outcome{bad == 0, count("comparisons", comparisons) + ", " + count("differences", bad)};
  });

  criterion(5, "kemeny subset DP equals brute force over all rankings, m <= 7", [] {
    Rng rng(55);
    std::int64_t bad = 0, alt_checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int m = 3 + trial % 5;
      const int n = std::uniform_int_distribution<int>(1, 9)(rng);
      const auto p = random_profile(m, n, rng);
      const auto best = kemeny_best(p);
      bad += best.score != kemeny_brute(p);
      bad += kt_profile_distance(p, best.ranking) != best.score;
      bad += kemeny_score_of_alternative(p, best.ranking[0]) != best.score;
      for (Alternative a = 0; a < m; ++a) {
        ++alt_checks;
        const auto brute = kemeny_brute(p, [a](const Ranking& r) { return r[0] == a; });
        const auto got = kemeny_score_of_alternative(p, a);
        bad += got != brute;
        bad += got < best.score;
      }
    }
    return Outcome{bad == 0, "100 profiles, " + count("per-alternative checks", alt_checks) + ", " +
                                 count("mismatches", bad)};
  });

  criterion(6, "KT formula equals profile KT distance for every ranking and oriented graph, m <= 5", [] {
    std::int64_t graphs = 0, evaluations = 0, bad = 0, acyclic = 0, three_cycles = 0;
    for (int m = 2; m <= 5; ++m) {
      const auto rankings = all_rankings(m);
      for_each_oriented_graph(m, [&](const Digraph& g) {
        ++graphs;
        const auto p = mcgarvey_profile(g);
        const auto weighted = [&] {
          std::vector<WeightedProfile::Entry> e;
          for (const auto& r : p) e.push_back({r, Rational(2, 3)});
          return WeightedProfile(m, e);
        }();
        bool is_acyclic = false;
        for (const auto& r : rankings) {
          ++evaluations;
          bad += kt_formula(p, g, r) != Rational(kt_profile_distance(p, r));
          if (m <= 4) bad += kt_formula(weighted, g, r) != kt_profile_distance(weighted, r);
          is_acyclic = is_acyclic || backward_arcs(g, r) == 0;
        }
        acyclic += is_acyclic;
        three_cycles += m == 3 && g.num_arcs() == 3 && !is_acyclic;
      });
    }
    return Outcome{bad == 0 && three_cycles == 2,
                   count("graphs", graphs) + " (" + std::to_string(acyclic) + " acyclic, " +
                       std::to_string(three_cycles) + " directed 3-cycles), " + count("evaluations", evaluations) +
                       ", " + count("mismatches", bad)};
  });

  criterion(7, "EFAS through Kemeny equals brute force on every Eulerian graph, m <= 5", [] {
    std::int64_t graphs = 0, decisions = 0, bad = 0;
    const auto decider = exact_kemeny_decider();
    for (int m = 1; m <= 5; ++m) {
      for_each_oriented_graph(m, [&](const Digraph& g) {
        if (!g.is_eulerian() || g.num_arcs() > 10) return;
        ++graphs;
        const auto n = mcgarvey_profile(g).num_voters();
        const auto th = exact_efas_thresholds(g, n, kMcGarveyMultiplier);
        const auto by_subsets = feedback_by_subsets(g);
        bad += min_feedback_arcs(g) != by_subsets;
        for (std::int64_t t = 0; t <= g.num_arcs(); ++t) {
          ++decisions;
          const bool via = efas_via_kemeny(g, t, decider, mcgarvey_profile, th);
          bad += via != efas_bruteforce(g, t);
          bad += via != (by_subsets <= t);
        }
      });
    }
    return Outcome{bad == 0, count("Eulerian graphs", graphs) + ", " + count("decisions", decisions) + ", " +
                                 count("mismatches", bad)};
  });

  criterion(8, "sampler chi-square fit at 0.001 and exact top-K preservation", [] {
    Rng rng(8);
    std::int64_t tests = 0, rejected = 0, top_lost = 0, draws = 0;
    const std::vector<std::pair<std::string, std::function<PreferenceModel(int)>>> families{
        {"alpha_ic 1/3", [](int m) { return PreferenceModel::alpha_ic(m, Rational(1, 3)); }},
        {"alpha_ic 2/3", [](int m) { return PreferenceModel::alpha_ic(m, Rational(2, 3)); }},
        {"alpha_ic 1", [](int m) { return PreferenceModel::alpha_ic(m, Rational(1)); }},
        {"partial_alt 1", [](int m) { return PreferenceModel::partial_alt(m, 1); }},
        {"partial_alt 2", [](int m) { return PreferenceModel::partial_alt(m, 2); }},
    };
    for (const auto& [name, make] : families) {
      for (int i = 0; i < 20; ++i) {
        const int m = 3 + i % 3;
        const auto model = make(m);
        const auto parameter = uniform_ranking(m, rng);
        int samples = 10;
        for (int f = 2; f <= m; ++f) samples *= f;
        ++tests;
        rejected += !chi_square_fit(model, parameter, samples, rng).pass();
        if (model.kind() == PreferenceModel::Kind::PartialAlt) {
          const auto want = top_k(parameter, model.top_k());
          for (int s = 0; s < samples; ++s) {
            ++draws;
            top_lost += top_k(model.sample(parameter, rng), model.top_k()) != want;
          }
        }
      }
    }
    return Outcome{rejected == 0 && top_lost == 0,
                   count("fits", tests) + ", " + count("rejected", rejected) + ", top-K kept in " +
                       std::to_string(draws - top_lost) + "/" + std::to_string(draws) + " partial_alt draws"};
  });

  criterion(9, "greedy Dodgson Definitely rate, m=3 n=1000 alpha=2/3, 10000 trials", [&] {
    const auto cfg = ExperimentConfig::from_json({{"claim", "greedy_success"},
                                                  {"m", 3},
                                                  {"n", 1000},
                                                  {"trials", 10000},
                                                  {"seed", 20240901},
                                                  {"model", {{"kind", "alpha_ic"}, {"alpha", "2/3"}}},
                                                  {"parameters", "adversarial"}});
    const auto rep = run_and_keep(cfg, outdir, "greedy_success");
    const auto main = rep.checks.front();
    return Outcome{rep.passed() && main.verdict == Verdict::Pass, check_summary(rep)};
  });

  criterion(10, "concentration tails, m=3 n=648, 10000 trials", [&] {
    const auto cfg = ExperimentConfig::from_json({{"claim", "concentration"},
                                                  {"m", 3},
                                                  {"n", 648},
                                                  {"trials", 10000},
                                                  {"seed", 20240902},
                                                  {"model", {{"kind", "alpha_ic"}, {"alpha", "2/3"}}},
                                                  {"parameters", "adversarial"}});
    const auto rep = run_and_keep(cfg, outdir, "concentration");
    return Outcome{rep.passed() && rep.checks.size() == 2, check_summary(rep)};
  });

  criterion(11, "top-block preservation and one-sided error of the randomized X3C procedure", [&] {
    const std::vector<X3CInstance> instances{
        X3CInstance(3, {{0, 1, 2}}),
        X3CInstance(6, {{0, 1, 2}, {3, 4, 5}}),
        X3CInstance(6, {{0, 1, 2}, {1, 3, 4}, {3, 4, 5}, {0, 2, 5}}),
        X3CInstance(6, {{0, 1, 2}, {0, 3, 4}, {0, 4, 5}, {1, 3, 5}, {2, 3, 5}, {1, 2, 4}}),
        X3CInstance(6, {{0, 1, 2}, {2, 3, 4}}),
        X3CInstance(6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}),
        X3CInstance(6, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {2, 3, 4}, {2, 3, 5}}),
    };
    int yes_count = 0;
    int m1_max = 0;
    auto list = json::array();
    for (const auto& inst : instances) {
      yes_count += x3c_bruteforce(inst);
      m1_max = std::max(m1_max, 2 * inst.q() + inst.s() + 1);
      list.push_back(x3c_json(inst));
    }
    const int m_total = m1_max + 3;
    bool ok = yes_count == 4 && static_cast<int>(instances.size()) - yes_count == 3;
    std::ostringstream detail;
    detail << yes_count << " yes / " << instances.size() - static_cast<std::size_t>(yes_count) << " no instances; ";
    std::int64_t wrong_no = 0;
    double min_no_rate = 1, min_preserved = 1, exact_preserved = 1;
    for (const auto& [label, model] : std::vector<std::pair<std::string, json>>{
             {"synthetic", {{"kind", "synthetic_topk"}}}, {"partial_alt", {{"kind", "partial_alt"}, {"K", m1_max}}}}) {
      for (const char* claim : {"top_block", "randomized_x3c"}) {
        const auto cfg = ExperimentConfig::from_json({{"claim", claim},
                                                      {"trials", 1000},
                                                      {"seed", 20240903},
                                                      {"m_total", m_total},
                                                      {"model", model},
                                                      {"instances", list}});
        const auto rep = run_and_keep(cfg, outdir, std::string(claim) + "_" + label);
        ok = ok && rep.passed();
        for (const auto& c : rep.checks) {
          if (c.name.find("no_false_no") != std::string::npos) wrong_no += static_cast<std::int64_t>(c.empirical * 1000);
          if (c.name.find("no_rate") != std::string::npos) min_no_rate = std::min(min_no_rate, c.empirical);
          if (c.name.find("preservation_exact") != std::string::npos) {
            exact_preserved = std::min(exact_preserved, c.empirical);
          } else if (c.name.find("preservation") != std::string::npos) {
            min_preserved = std::min(min_preserved, c.empirical);
          }
        }
      }
    }
    ok = ok && wrong_no == 0 && exact_preserved == 1.0;
    detail << count("wrong No answers", wrong_no) << ", min No rate on no instances " << min_no_rate
           << " (>= 1/6 - 3se), min preservation " << min_preserved << " (>= 1/2 - 3se), partial_alt preservation "
           << exact_preserved;
    return Outcome{ok, detail.str()};
  });

  criterion(12, "reruns with the same seed give byte-identical CSV, JSON and plot files", [&] {
    int files = 0, differ = 0;
    for (const auto& run : experiment_runs) {
      auto cfg = run.config;
      const auto first = cfg.output;
      cfg.output = first + "_rerun";
      run_experiment(cfg).write();
      for (const char* ext : {".csv", ".json", ".dat"}) {
        ++files;
        differ += read_file(first + ext) != read_file(cfg.output + ext);
      }
    }
    return Outcome{differ == 0 && files > 0,
                   std::to_string(experiment_runs.size()) + " runs, " + count("files compared", files) + ", " +
                       count("differing", differ)};
  });

  if (!keep) fs::remove_all(outdir);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
