#include "dirmincut/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dirmincut/arborescence.hpp"
#include "dirmincut/driver.hpp"
#include "dirmincut/generators.hpp"
#include "dirmincut/one_respecting.hpp"
#include "dirmincut/oracle.hpp"
#include "dirmincut/sparsifier.hpp"
#include "dirmincut/vertex_cut.hpp"

namespace dirmincut {
namespace {

std::string frac(long long hits, long long total) {
  std::ostringstream out;
  out << hits << "/" << total;
  return out.str();
}

WeightedDigraph random_small_graph(SplitRng& rng, int max_n, Weight max_w) {
  int n = 2 + static_cast<int>(rng.next_below(max_n - 1));
  int m = 1 + static_cast<int>(rng.next_below(3 * n));
  return gen_erdos(n, m, max_w, rng);
}

bool cut_is_genuine(const WeightedDigraph& g, const CutResult& cut) {
  if (cut.sink_side.empty()) return false;
  if (static_cast<int>(cut.sink_side.size()) >= g.vertex_count()) return false;
  for (int v : cut.sink_side)
    if (v == g.root()) return false;
  return in_cut_value(g, cut.sink_side) == cut.value;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"exact", "approx", "vertex", "sparsifier", "packing"};
}

SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed) {
  if (name == "exact") return verify_exact_suite(seed);
  if (name == "approx") return verify_approx_suite(seed);
  if (name == "vertex") return verify_vertex_suite(seed);
  if (name == "sparsifier") return verify_sparsifier_suite(seed);
  if (name == "packing") return verify_packing_suite(seed);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

SuiteReport verify_exact_suite(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "exact";
  SplitRng rng(seed);

  // 500 random digraphs, n <= 7, weights <= 10: exhaustive mode must be
  // exact always, whp mode on the same instances nearly always.
  {
    const int kTrials = 500;
    int exhaustive_ok = 0, whp_ok = 0, genuine = 0;
    for (int i = 0; i < kTrials; ++i) {
      SplitRng inst_rng = rng.split();
      WeightedDigraph g = random_small_graph(inst_rng, 7, 10);
      CutResult oracle = brute_force_s_mincut(g);

      DriverConfig exhaustive_cfg;
      exhaustive_cfg.seed = inst_rng.next_u64();
      exhaustive_cfg.balanced_exhaustive = true;
      CutResult a = exact_s_mincut(g, exhaustive_cfg);
      if (a.value == oracle.value) ++exhaustive_ok;

      DriverConfig whp_cfg;
      whp_cfg.seed = inst_rng.next_u64();
      whp_cfg.trees_per_guess = 8;
      CutResult b = exact_s_mincut(g, whp_cfg);
      if (b.value == oracle.value) ++whp_ok;
      if (cut_is_genuine(g, b) || b.value == 0) ++genuine;
    }
    report.checks.push_back({"exhaustive mode equals brute force",
                             exhaustive_ok == kTrials, frac(exhaustive_ok, kTrials)});
    report.checks.push_back({"whp mode equals brute force on >= 99%",
                             whp_ok * 100 >= kTrials * 99, frac(whp_ok, kTrials)});
    report.checks.push_back({"whp-mode outputs are genuine cuts", genuine == kTrials,
                             frac(genuine, kTrials)});
  }

  // 100 planted-unbalanced instances, n <= 64.
  {
    const int kTrials = 100;
    int ok = 0, genuine = 0;
    for (int i = 0; i < kTrials; ++i) {
      SplitRng inst_rng = rng.split();
      int n = 24 + static_cast<int>(inst_rng.next_below(41));
      int sink = 2 + static_cast<int>(inst_rng.next_below(4));
      Weight lambda = 4 + static_cast<Weight>(inst_rng.next_below(27));
      PlantedCut planted = gen_planted_unbalanced(n, sink, lambda, inst_rng);
      DriverConfig cfg;
      cfg.seed = inst_rng.next_u64();
      cfg.trees_per_guess = 8;
      CutResult got = exact_s_mincut(planted.graph, cfg);
      if (got.value == planted.answer.value) ++ok;
      if (cut_is_genuine(planted.graph, got)) ++genuine;
    }
    report.checks.push_back({"planted-unbalanced instances solved on >= 99%",
                             ok * 100 >= kTrials * 99, frac(ok, kTrials)});
    report.checks.push_back({"planted outputs are genuine cuts", genuine == kTrials,
                             frac(genuine, kTrials)});
  }

  // Global mincut vs exhaustive bipartition minimum, 200 instances n <= 6.
  {
    const int kTrials = 200;
    int ok = 0;
    for (int i = 0; i < kTrials; ++i) {
      SplitRng inst_rng = rng.split();
      WeightedDigraph g = random_small_graph(inst_rng, 6, 10);
      CutResult oracle = brute_force_global_mincut(g);
      DriverConfig cfg;
      cfg.seed = inst_rng.next_u64();
      cfg.balanced_exhaustive = true;
      CutResult got = global_mincut(g, cfg);
      if (got.value == oracle.value) ++ok;
    }
    report.checks.push_back({"global mincut equals bipartition brute force",
                             ok == kTrials, frac(ok, kTrials)});
  }
  return report;
}

SuiteReport verify_approx_suite(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "approx";
  SplitRng rng(seed);

  const int kTrials = 300;
  const double eps = 0.25;
  int within = 0, genuine = 0;
  for (int i = 0; i < kTrials; ++i) {
    SplitRng inst_rng = rng.split();
    WeightedDigraph g = random_small_graph(inst_rng, 7, 10);
    CutResult oracle = brute_force_s_mincut(g);
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    CutResult got = approx_s_mincut(g, eps, cfg);
    double bound = (1.0 + eps) * static_cast<double>(oracle.value);
    if (static_cast<double>(got.value) <= bound + 1e-9) ++within;
    if (cut_is_genuine(g, got) || got.value == 0) ++genuine;
  }
  report.checks.push_back({"approx value within (1+eps) of optimum on >= 95%",
                           within * 100 >= kTrials * 95, frac(within, kTrials)});
  report.checks.push_back({"approx outputs re-measure exactly in g", genuine == kTrials,
                           frac(genuine, kTrials)});
  return report;
}

SuiteReport verify_vertex_suite(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "vertex";
  SplitRng rng(seed);
  const double eps = 0.25;

  // Rooted and global approximations vs tri-partition brute force.
  {
    const int kTrials = 300;
    int rooted_ok = 0, global_ok = 0, rooted_runs = 0, global_runs = 0;
    for (int i = 0; i < kTrials; ++i) {
      SplitRng inst_rng = rng.split();
      int n = 4 + static_cast<int>(inst_rng.next_below(3));
      VertexWeightedDigraph g = gen_vertex_random(n, 0.45, 6, inst_rng);

      auto rooted_oracle = brute_force_vertex_cut(g, true);
      if (rooted_oracle) {
        ++rooted_runs;
        SplitRng run_rng = inst_rng.split();
        VertexCutResult got = approx_rooted_vertex_cut(g, eps, run_rng);
        if (!got.degenerate &&
            static_cast<double>(got.value) <=
                (1.0 + eps) * static_cast<double>(rooted_oracle->value) + 1e-9)
          ++rooted_ok;
      }
      auto global_oracle = brute_force_vertex_cut(g, false);
      if (global_oracle) {
        ++global_runs;
        SplitRng run_rng = inst_rng.split();
        VertexCutResult got = approx_global_vertex_cut(g, eps, run_rng);
        if (!got.degenerate &&
            static_cast<double>(got.value) <=
                (1.0 + eps) * static_cast<double>(global_oracle->value) + 1e-9)
          ++global_ok;
      }
    }
    report.checks.push_back({"rooted approximation within (1+eps) on >= 90%",
                             rooted_ok * 100 >= rooted_runs * 90,
                             frac(rooted_ok, rooted_runs)});
    report.checks.push_back({"global approximation within (1+eps) on >= 90%",
                             global_ok * 100 >= global_runs * 90,
                             frac(global_ok, global_runs)});
  }

  // Split-graph maxflow equals brute-force vertex (s,t)-cut everywhere.
  {
    const int kTrials = 100;
    int checked = 0, ok = 0;
    for (int i = 0; i < kTrials; ++i) {
      SplitRng inst_rng = rng.split();
      int n = 4 + static_cast<int>(inst_rng.next_below(3));
      VertexWeightedDigraph g = gen_vertex_random(n, 0.5, 8, inst_rng);
      WeightedDigraph split = split_graph(g);
      for (int t : g.candidate_sinks()) {
        auto oracle = brute_force_vertex_cut_to(g, t, g.n);
        if (!oracle) continue;
        ++checked;
        FlowResult f = max_flow(split, split.root(), split_in(t));
        if (f.value == oracle->value) {
          VertexCutResult cut = vertex_cut_from_split_flow(g, split, f);
          if (cut.value == oracle->value) ++ok;
        }
      }
    }
    report.checks.push_back({"split-graph maxflow equals tri-partition brute force",
                             checked > 0 && ok == checked, frac(ok, checked)});
  }

  // Local queries vs constrained brute force, plus the instrumentation
  // ledgers. Weights stay small so tau = 1 and the comparison is exact.
  {
    const int kTrials = 60;
    int queries = 0, ok = 0;
    bool budget_ok = true, saturation_ok = true;
    for (int i = 0; i < kTrials; ++i) {
      SplitRng inst_rng = rng.split();
      int n = 5 + static_cast<int>(inst_rng.next_below(2));
      VertexWeightedDigraph g = gen_vertex_random(n, 0.4, 6, inst_rng);
      std::vector<int> v_prime = g.candidate_sinks();
      if (v_prime.empty()) continue;
      const long long k = 2;
      // kappa bracketing the per-sink optimum keeps the contract tight.
      for (int t : v_prime) {
        auto oracle = brute_force_vertex_cut_to(g, t, k);
        Weight oracle_value = oracle ? oracle->value : kInfWeight;
        for (Weight kappa : {Weight{4}, Weight{8}, Weight{16}}) {
          SplitRng q_rng = inst_rng.split();
          LocalCutStructure structure(g, kappa, k, eps, q_rng);
          ++queries;
          auto got = structure.query(t);
          if (got) {
            // A returned cut must be genuine; when the constrained
            // optimum is within kappa it must also be (1+eps)-close up
            // to the recorded integral auxiliary padding.
            bool genuine =
                vertex_in_cut_value(g, got->sink_component) == got->value;
            double slack =
                static_cast<double>(k) * static_cast<double>(structure.aux_padding());
            bool close = oracle_value > kappa ||
                         static_cast<double>(got->value) <=
                             (1.0 + eps) * static_cast<double>(oracle_value) + slack +
                                 1e-9;
            if (genuine && close) ++ok;
          } else {
            // Declarations must be confirmed by the constrained oracle.
            if (oracle_value > kappa) ++ok;
          }
          if (structure.stats().max_search_arcs > structure.search_budget())
            budget_ok = false;
          if (!structure.stats().saturation_ledger_ok) saturation_ok = false;
        }
      }
    }
    report.checks.push_back({"local queries match constrained brute force",
                             queries > 0 && ok == queries, frac(ok, queries)});
    report.checks.push_back(
        {"local search traversals within budget", budget_ok, budget_ok ? "ok" : "exceeded"});
    report.checks.push_back({"saturated v_out ledger respected", saturation_ok,
                             saturation_ok ? "ok" : "violated"});
  }
  return report;
}

SuiteReport verify_sparsifier_suite(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "sparsifier";
  SplitRng rng(seed);
  const long long kTrialCount = 1000;

  // Binomial variant on a fixed 6-cycle with heavy edges: every sink set
  // is informative and carries real violation mass to compare against the
  // Chernoff bound.
  {
    WeightedDigraph g = gen_cycle(6, 1000);
    SparsifierTrialParams params;
    params.lambda_guess = 1000;
    params.k = 200;
    params.eps = 0.25;
    params.variant = 1;
    SplitRng trial_rng = rng.split();
    ConcentrationReport rep =
        sparsifier_concentration_trial(g, params, kTrialCount, trial_rng);
    std::ostringstream detail;
    detail << "informative sets: " << rep.informative_sets
           << ", worst lower-CL: " << rep.report.confidence_bound;
    report.checks.push_back({"binomial concentration within Chernoff bounds",
                             rep.bounds_respected && rep.informative_sets > 0,
                             detail.str()});
    report.checks.push_back({"binomial structural properties hold in all trials",
                             rep.structure_ok && rep.report.successes == kTrialCount,
                             frac(rep.report.successes, kTrialCount)});
  }

  // Rounding variant with a grid coarse enough for genuine rounding and
  // weights that are not multiples of tau.
  {
    std::vector<Edge> ring;
    const Weight weights[6] = {41000, 39500, 40250, 40750, 39750, 40500};
    for (int v = 0; v < 6; ++v) ring.push_back({v, (v + 1) % 6, weights[v]});
    WeightedDigraph g = WeightedDigraph::build(6, 0, ring);
    SparsifierTrialParams params;
    params.lambda_guess = 40000;
    params.k = 2;
    params.eps = 0.3;
    params.variant = 0;
    SplitRng trial_rng = rng.split();
    ConcentrationReport rep =
        sparsifier_concentration_trial(g, params, kTrialCount, trial_rng);
    std::ostringstream detail;
    detail << "max mean error: " << rep.max_mean_relative_error;
    report.checks.push_back({"rounding concentration within additive bounds",
                             rep.bounds_respected, detail.str()});
    report.checks.push_back({"rounding is unbiased per edge (within 1%)",
                             rep.max_mean_relative_error <= 0.01, detail.str()});
    report.checks.push_back({"rounding structural properties hold in all trials",
                             rep.structure_ok && rep.report.successes == kTrialCount,
                             frac(rep.report.successes, kTrialCount)});
  }
  return report;
}

SuiteReport verify_packing_suite(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "packing";
  SplitRng rng(seed);

  const int kTrials = 100;
  int duality_ok = 0, loads_ok = 0;
  for (int i = 0; i < kTrials; ++i) {
    SplitRng inst_rng = rng.split();
    WeightedDigraph g = random_small_graph(inst_rng, 8, 8);
    // Sparsify first: the star guarantees reachability and weights >= 1.
    Weight lambda_guess = 1 + static_cast<Weight>(
                                  inst_rng.next_below(std::max<Weight>(1, g.total_weight())));
    SparsifiedGraph sp = partial_sparsify(g, lambda_guess, 2, 0.25, inst_rng,
                                          SparsifyVariant::kRounding);
    Weight lambda0 = reference_s_mincut(sp.graph).value;
    if (lambda0 < 1) continue;
    PackOptions opts;
    opts.eps = 0.1;
    Packing packing = pack_arborescences(sp.graph, opts);
    if (packing.gamma_bar_at_most(sp.graph, 11, 10, lambda0)) ++duality_ok;
    if (packing.scaled_loads_within_one(sp.graph)) ++loads_ok;
  }
  report.checks.push_back({"gamma_bar <= (1+eps)/lambda0 on every instance",
                           duality_ok == kTrials, frac(duality_ok, kTrials)});
  report.checks.push_back({"scaled packing loads are <= 1 exactly", loads_ok == kTrials,
                           frac(loads_ok, kTrials)});
  return report;
}

SuiteReport verify_one_respecting(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "one-respecting";
  SplitRng rng(seed);

  const int kTarget = 200;
  int fixtures = 0, exact = 0, calls_ok = 0;
  int attempts = 0;
  while (fixtures < kTarget && attempts < kTarget * 40) {
    ++attempts;
    SplitRng inst_rng = rng.split();
    WeightedDigraph g = random_small_graph(inst_rng, 6, 10);
    {
      std::vector<char> seen = reachable_from_root(g);
      bool all = true;
      for (int v = 0; v < g.vertex_count(); ++v) all = all && seen[v];
      if (!all) continue;
    }
    CutResult oracle = brute_force_s_mincut(g);
    std::vector<char> source_mask(g.vertex_count(), 1);
    for (int v : oracle.sink_side) source_mask[v] = 0;

    // Keep only fixtures where some arborescence is provably 1-respected.
    std::vector<Arborescence> all_trees = brute_force_arborescences(g);
    const Arborescence* witness = nullptr;
    for (const Arborescence& t : all_trees)
      if (crossing_count(t, source_mask) == 1) {
        witness = &t;
        break;
      }
    if (!witness) continue;
    ++fixtures;

    MaxflowCounter counter;
    CutResult got = min_one_respecting_cut(g, *witness, &counter);
    if (got.value == oracle.value) ++exact;
    long long bound = static_cast<long long>(
                          std::floor(std::log2(static_cast<double>(g.vertex_count())))) +
                      1;
    if (counter.calls <= bound) ++calls_ok;
  }
  report.checks.push_back({"1-respecting fixtures solved exactly", fixtures == kTarget && exact == fixtures,
                           frac(exact, fixtures)});
  report.checks.push_back({"maxflow calls per tree within floor(log2 n)+1",
                           fixtures == kTarget && calls_ok == fixtures,
                           frac(calls_ok, fixtures)});
  return report;
}

SuiteReport verify_one_respect_probability(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "one-respect-probability";
  SplitRng rng(seed);

  const int kMetaTrials = 100;
  int hit = 0;
  for (int i = 0; i < kMetaTrials; ++i) {
    SplitRng inst_rng = rng.split();
    int n = 6 + static_cast<int>(inst_rng.next_below(3));
    int sink = 1 + static_cast<int>(inst_rng.next_below(2));
    PlantedCut planted = gen_planted_unbalanced(n, sink, 4 + static_cast<Weight>(inst_rng.next_below(8)),
                                                inst_rng);
    const long long k = std::max<long long>(2, sink);
    SparsifiedGraph sp = partial_sparsify(planted.graph, planted.answer.value, k, 0.1,
                                          inst_rng, SparsifyVariant::kRounding);
    std::vector<char> source_mask(sp.graph.vertex_count(), 1);
    bool intact = true;
    for (int v : planted.answer.sink_side) {
      int nv = sp.vertex_map[v];
      if (nv == sp.graph.root()) intact = false;
      else source_mask[nv] = 0;
    }
    if (!intact) continue;
    Packing packing = pack_arborescences(sp.graph);
    int samples = static_cast<int>(std::ceil(2.0 * std::log(std::max(2, n))));
    bool found = false;
    for (int pick : sample_arborescences(packing, samples, inst_rng))
      if (crossing_count(packing.trees[pick], source_mask) == 1) found = true;
    if (found) ++hit;
  }
  report.checks.push_back({"some sampled tree is 1-respecting in >= 90% of meta-trials",
                           hit * 100 >= kMetaTrials * 90, frac(hit, kMetaTrials)});
  return report;
}

SuiteReport verify_call_counts(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "call-counts";
  SplitRng rng(seed);

  const int kInstances = 2;
  bool balanced_ok = true, unbalanced_ok = true;
  std::ostringstream detail;
  for (int i = 0; i < kInstances; ++i) {
    SplitRng inst_rng = rng.split();
    const int n = 512;
    PlantedCut planted = gen_planted_unbalanced(n, 6, 24, inst_rng);
    const WeightedDigraph& g = planted.graph;

    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    DriverStats stats;
    CutResult got = exact_s_mincut(g, cfg, &stats);

    const long long k = auto_k(g);
    long long balanced_bound = static_cast<long long>(
        std::ceil((static_cast<double>(n) / static_cast<double>(k)) * 2.0 *
                  std::log(static_cast<double>(n))));
    int trees = static_cast<int>(std::ceil(2.0 * std::log(static_cast<double>(n))));
    long long layers = static_cast<long long>(std::floor(std::log2(n))) + 1;
    long long unbalanced_bound = stats.lambda_guesses_run * trees * layers;

    if (stats.balanced_calls > balanced_bound) balanced_ok = false;
    if (stats.one_respect_calls > unbalanced_bound) unbalanced_ok = false;
    detail << "[instance " << i << ": value " << got.value << " (planted "
           << planted.answer.value << "), balanced " << stats.balanced_calls << "/"
           << balanced_bound << ", one-respect " << stats.one_respect_calls << "/"
           << unbalanced_bound << "] ";
  }
  report.checks.push_back({"balanced-case maxflow calls within ceil((n/k) 2 ln n)",
                           balanced_ok, detail.str()});
  report.checks.push_back({"unbalanced-case calls within trees*(floor(log2 n)+1) per guess",
                           unbalanced_ok, detail.str()});
  return report;
}

}  // namespace dirmincut
