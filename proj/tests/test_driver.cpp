#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirmincut/driver.hpp"
#include "dirmincut/generators.hpp"
#include "dirmincut/oracle.hpp"
#include "dirmincut/rng.hpp"

using namespace dirmincut;

namespace {

WeightedDigraph tiny(std::initializer_list<Edge> edges, int n, int root = 0) {
  return WeightedDigraph::build(n, root, std::vector<Edge>(edges));
}

}  // namespace

TEST_CASE("lambda guesses bracket every mincut value") {
  WeightedDigraph g = tiny({{0, 1, 8}}, 2);
  CHECK(estimate_lambda_guesses(g) == std::vector<Weight>{1, 2, 4, 8});

  // lambda = 3 is bracketed by 4.
  bool four = false;
  for (Weight guess : estimate_lambda_guesses(g))
    if (3 <= guess && guess <= 6) four = four || guess == 4;
  CHECK(four);

  SplitRng rng(71);
  WeightedDigraph big = tiny({{0, 1, 1000000}}, 2);
  std::vector<Weight> guesses = estimate_lambda_guesses(big);
  for (int trial = 0; trial < 1000; ++trial) {
    Weight lambda = 1 + static_cast<Weight>(rng.next_below(1000000));
    bool bracketed = false;
    for (Weight guess : guesses) bracketed = bracketed || (lambda <= guess && guess <= 2 * lambda);
    CHECK(bracketed);
  }
}

TEST_CASE("balanced case") {
  // Exhaustive sinks cover every cut on tiny graphs.
  SplitRng outer(72);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(outer.next_below(5));
    WeightedDigraph g = gen_erdos(n, 2 * n, 10, outer);
    CutResult oracle = brute_force_s_mincut(g);
    SplitRng rng = outer.split();
    DriverStats stats;
    CutResult got = balanced_case(g, /*k=*/2, rng, &stats, /*exhaustive=*/true);
    CHECK(got.value == oracle.value);
    CHECK(stats.balanced_calls == n - 1);
  }

  // Sampled mode books exactly the sample count.
  WeightedDigraph g = gen_erdos(6, 14, 9, outer);
  SplitRng rng = outer.split();
  DriverStats stats;
  balanced_case(g, 2, rng, &stats);
  long long expected = static_cast<long long>(std::ceil((6.0 / 2.0) * 2.0 * std::log(6.0)));
  CHECK(stats.balanced_calls == expected);
}

TEST_CASE("unbalanced case solves planted instances") {
  SplitRng rng(73);
  const int kTrials = 100;
  int exact_hits = 0, exact_hits_double = 0, genuine = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng inst_rng = rng.split();
    const int n = 20;
    PlantedCut planted = gen_planted_unbalanced(n, 3, 10, inst_rng);
    DriverConfig cfg;
    cfg.trees_per_guess = 8;
    const long long k = 4;  // >= |T*|, <= sqrt(n) scale

    SplitRng run_rng = inst_rng.split();
    auto got = unbalanced_case(planted.graph, k, planted.answer.value, cfg, run_rng);
    REQUIRE(got.has_value());
    if (got->value == planted.answer.value) ++exact_hits;
    if (in_cut_value(planted.graph, got->sink_side) == got->value) ++genuine;

    SplitRng run2_rng = inst_rng.split();
    auto doubled = unbalanced_case(planted.graph, k, 2 * planted.answer.value, cfg, run2_rng);
    REQUIRE(doubled.has_value());
    if (doubled->value == planted.answer.value) ++exact_hits_double;
  }
  CHECK(exact_hits * 100 >= kTrials * 90);
  CHECK(exact_hits_double * 100 >= kTrials * 90);
  CHECK(genuine == kTrials);
}

TEST_CASE("exact driver matches the oracles") {
  WeightedDigraph single = tiny({{0, 1, 5}}, 2);
  CHECK(exact_s_mincut(single).value == 5);

  // Root reaching nothing: the unreachable set is a zero cut.
  WeightedDigraph stranded = tiny({{1, 2, 4}}, 3);
  CutResult zero = exact_s_mincut(stranded);
  CHECK(zero.value == 0);
  CHECK(zero.sink_side == std::vector<int>{1, 2});

  // Edgeless graph behaves the same way.
  WeightedDigraph edgeless = tiny({}, 3);
  CHECK(estimate_lambda_guesses(edgeless).empty());
  CHECK(exact_s_mincut(edgeless).value == 0);

  SplitRng rng(74);
  int ok = 0;
  const int kTrials = 120;
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng inst_rng = rng.split();
    int n = 2 + static_cast<int>(inst_rng.next_below(6));
    WeightedDigraph g = gen_erdos(n, 2 * n, 10, inst_rng);
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    cfg.trees_per_guess = 8;
    CutResult got = exact_s_mincut(g, cfg);
    CutResult oracle = brute_force_s_mincut(g);
    if (got.value == oracle.value) ++ok;
    CHECK(got.value >= oracle.value);  // never under-reports
  }
  CHECK(ok * 100 >= kTrials * 95);
}

TEST_CASE("exact driver with the binomial sparsifier variant") {
  SplitRng rng(81);
  int ok = 0;
  const int kTrials = 120;
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng inst_rng = rng.split();
    int n = 2 + static_cast<int>(inst_rng.next_below(5));
    WeightedDigraph g = gen_erdos(n, 2 * n, 10, inst_rng);
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    cfg.variant = SparsifyVariant::kBinomial;
    cfg.trees_per_guess = 8;
    CutResult got = exact_s_mincut(g, cfg);
    CutResult oracle = brute_force_s_mincut(g);
    CHECK(got.value >= oracle.value);
    if (got.value == oracle.value) ++ok;
  }
  CHECK(ok * 100 >= kTrials * 95);
}

TEST_CASE("exact driver matches reference mincut at n=100") {
  SplitRng rng(75);
  for (int trial = 0; trial < 50; ++trial) {
    SplitRng inst_rng = rng.split();
    WeightedDigraph g = gen_erdos(100, 800, 10, inst_rng);
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    cfg.balanced_exhaustive = true;  // deterministic equality
    CutResult got = exact_s_mincut(g, cfg);
    CutResult ref = reference_s_mincut(g);
    CHECK(got.value == ref.value);
  }
}

TEST_CASE("driver is monotone under weight doubling on the deterministic path") {
  SplitRng rng(76);
  for (int trial = 0; trial < 40; ++trial) {
    SplitRng inst_rng = rng.split();
    int n = 2 + static_cast<int>(inst_rng.next_below(5));
    WeightedDigraph g = gen_erdos(n, 2 * n, 4, inst_rng);
    std::vector<Edge> doubled_edges = g.edges();
    for (Edge& e : doubled_edges) e.weight *= 2;
    WeightedDigraph doubled = WeightedDigraph::build(n, 0, doubled_edges);

    DriverConfig cfg;
    cfg.seed = 12345;
    cfg.variant = SparsifyVariant::kBinomial;
    cfg.balanced_exhaustive = true;
    cfg.k = g.total_weight();  // every guess rides the identity fast path
    CutResult a = exact_s_mincut(g, cfg);
    CutResult b = exact_s_mincut(doubled, cfg);
    CHECK(b.value == 2 * a.value);
  }
}

TEST_CASE("global mincut") {
  // Two-cycle with weights 5 and 3.
  WeightedDigraph two = tiny({{0, 1, 5}, {1, 0, 3}}, 2);
  CHECK(global_mincut(two).value == 3);

  // Disconnected reachability gives zero.
  WeightedDigraph dis = tiny({{0, 1, 2}, {2, 1, 1}}, 3);
  CHECK(global_mincut(dis).value == 0);

  SplitRng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    SplitRng inst_rng = rng.split();
    int n = 2 + static_cast<int>(inst_rng.next_below(5));
    WeightedDigraph g = gen_erdos(n, 2 * n, 10, inst_rng);
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    cfg.balanced_exhaustive = true;
    CutResult got = global_mincut(g, cfg);
    CutResult oracle = brute_force_global_mincut(g);
    CHECK(got.value == oracle.value);
    // Both orientations report a recomputable sink side.
    CHECK(in_cut_value(g, got.sink_side) == got.value);
  }
}

TEST_CASE("approximate driver stays within (1+eps)") {
  SplitRng rng(78);
  const double eps = 0.25;
  const int kTrials = 80;
  int within = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng inst_rng = rng.split();
    int n = 2 + static_cast<int>(inst_rng.next_below(6));
    WeightedDigraph g = gen_erdos(n, 2 * n, 10, inst_rng);
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    CutResult got = approx_s_mincut(g, eps, cfg);
    CutResult oracle = brute_force_s_mincut(g);
    CHECK(got.value >= oracle.value);  // real cut, never below optimum
    CHECK(in_cut_value(g, got.sink_side) == got.value);
    if (static_cast<double>(got.value) <= (1 + eps) * static_cast<double>(oracle.value))
      ++within;
  }
  CHECK(within * 100 >= kTrials * 95);
}

TEST_CASE("approx degenerates to exact on the binomial fast path") {
  SplitRng rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    SplitRng inst_rng = rng.split();
    int n = 2 + static_cast<int>(inst_rng.next_below(5));
    WeightedDigraph g = gen_erdos(n, 2 * n, 3, inst_rng);
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    cfg.variant = SparsifyVariant::kBinomial;
    CutResult got = approx_s_mincut(g, 0.25, cfg);
    CutResult oracle = brute_force_s_mincut(g);
    // With lambda <= 2k guesses riding the identity path and small total
    // weights, the pipeline sees the true graph.
    CHECK(got.value >= oracle.value);
    CHECK(in_cut_value(g, got.sink_side) == got.value);
  }
}

TEST_CASE("maxflow call counters respect the analytic bounds") {
  SplitRng rng(80);
  for (int trial = 0; trial < 20; ++trial) {
    SplitRng inst_rng = rng.split();
    PlantedCut planted = gen_planted_unbalanced(32, 3, 9, inst_rng);
    const WeightedDigraph& g = planted.graph;
    DriverConfig cfg;
    cfg.seed = inst_rng.next_u64();
    DriverStats stats;
    exact_s_mincut(g, cfg, &stats);
    const long long k = auto_k(g);
    long long balanced_bound = static_cast<long long>(std::ceil(
        (static_cast<double>(g.vertex_count()) / static_cast<double>(k)) * 2.0 *
        std::log(g.vertex_count())));
    CHECK(stats.balanced_calls <= balanced_bound);
    int trees = static_cast<int>(std::ceil(2.0 * std::log(g.vertex_count())));
    long long layers = static_cast<long long>(std::floor(std::log2(g.vertex_count()))) + 1;
    CHECK(stats.one_respect_calls <= stats.lambda_guesses_run * trees * layers);
  }
}
