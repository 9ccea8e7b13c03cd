#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirmincut/generators.hpp"
#include "dirmincut/maxflow.hpp"
#include "dirmincut/oracle.hpp"
#include "dirmincut/rng.hpp"
#include "dirmincut/sparsifier.hpp"

using namespace dirmincut;

namespace {

WeightedDigraph tiny(std::initializer_list<Edge> edges, int n, int root = 0) {
  return WeightedDigraph::build(n, root, std::vector<Edge>(edges));
}

}  // namespace

TEST_CASE("skeleton with tau=1 is the identity plus a star") {
  WeightedDigraph g = tiny({{0, 1, 4}, {1, 2, 6}, {2, 3, 2}}, 4);
  SplitRng rng(41);
  RoundingParams params = rounding_params(g, /*lambda=*/8, /*k=*/2, /*eps=*/0.25);
  CHECK(params.identity);
  auto [h, scale] = skeleton_sparsify(g, 8, 2, 0.25, rng);
  CHECK(scale.num == scale.den);  // tau == 1
  // Original edges intact, then one star edge per non-root vertex.
  REQUIRE(h.edge_count() == 3 + 3);
  for (int e = 0; e < 3; ++e) {
    CHECK(h.edge(e).tail == g.edge(e).tail);
    CHECK(h.edge(e).weight == g.edge(e).weight);
  }
  for (int e = 3; e < 6; ++e) {
    CHECK(h.edge(e).tail == 0);
    CHECK(h.edge(e).weight == params.star_weight);
  }
}

TEST_CASE("rounding is unbiased and outputs integer weights >= 1") {
  // Fixed 5-vertex graph; coarse grid (lambda large relative to k ln n
  // makes tau > 1) with weights well above tau so the 1% mean tolerance
  // has headroom.
  WeightedDigraph g = tiny({{0, 1, 2100}, {1, 2, 1300}, {0, 2, 2500}, {2, 3, 999},
                            {3, 4, 3333}, {4, 1, 1750}},
                           5);
  SplitRng rng(42);
  RoundingParams params = rounding_params(g, 40000, 1, 0.5);
  REQUIRE_FALSE(params.identity);

  const int kTrials = 10000;
  std::vector<double> mean(g.edge_count(), 0.0);
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng trial_rng = rng.split();
    auto [h, scale] = skeleton_sparsify(g, 40000, 1, 0.5, trial_rng);
    const int star = g.vertex_count() - 1;
    // Surviving rounded edges precede the star block in input order.
    for (int i = 0; i < h.edge_count() - star; ++i) {
      const Edge& he = h.edge(i);
      CHECK(he.weight >= 1);
      for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).tail == he.tail && g.edge(e).head == he.head) {
          mean[e] += static_cast<double>(he.weight) * scale.value();
          break;
        }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    double avg = mean[e] / kTrials;
    double exact = static_cast<double>(g.edge(e).weight);
    CHECK(std::abs(avg - exact) / exact <= 0.01);
  }
}

TEST_CASE("every rounding output has integral weights >= 1") {
  SplitRng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(5));
    WeightedDigraph g = gen_erdos(n, 3 * n, 5000, rng);
    Weight lambda = 1 + static_cast<Weight>(rng.next_below(
                            static_cast<std::uint64_t>(g.total_weight())));
    auto [h, scale] = skeleton_sparsify(g, lambda, 2, 0.3, rng);
    for (const Edge& e : h.edges()) CHECK(e.weight >= 1);
  }
}

TEST_CASE("contract_high_indegree") {
  WeightedDigraph g = tiny({{0, 1, 1}, {2, 1, 1}, {3, 1, 1}, {1, 3, 5}, {0, 2, 1},
                            {0, 3, 1}},
                           4);
  // Threshold above the max in-degree: nothing happens.
  SparsifiedGraph none = contract_high_indegree(g, 10);
  CHECK(none.graph.structurally_equal(g));

  // Vertex 1 has in-degree 3 (the rest at most 2); with threshold 3 it
  // contracts into the root and its out-edge retargets.
  SparsifiedGraph c = contract_high_indegree(g, 3);
  CHECK(c.vertex_map[1] == c.graph.root());
  bool found_retarget = false;
  for (const Edge& e : c.graph.edges())
    if (e.tail == c.graph.root() && e.weight == 5) found_retarget = true;
  CHECK(found_retarget);

  SplitRng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(6));
    WeightedDigraph h = gen_erdos(n, 4 * n, 6, rng);
    long long threshold = 1 + static_cast<long long>(rng.next_below(5));
    SparsifiedGraph sp = contract_high_indegree(h, threshold);
    CHECK(sp.graph.edge_count() <=
          static_cast<long long>(sp.graph.vertex_count()) * threshold);
  }
}

TEST_CASE("binomial fast path returns the input graph") {
  WeightedDigraph g = tiny({{0, 1, 2}, {1, 2, 3}}, 3);
  SplitRng rng(45);
  SparsifiedGraph sp = binomial_sparsify(g, /*lambda=*/3, /*k=*/2, 0.25, rng);
  CHECK(sp.graph.structurally_equal(g));
  CHECK(sp.scale.num == 1);
  CHECK(sp.scale.den == 1);

  SparsifiedGraph via = partial_sparsify(g, 3, 2, 0.25, rng, SparsifyVariant::kBinomial);
  CHECK(via.graph.structurally_equal(g));
}

TEST_CASE("full binomial construction at p=1 adds exactly the alpha star") {
  WeightedDigraph g = tiny({{0, 1, 2}, {1, 2, 3}, {2, 1, 1}}, 3);
  SplitRng rng(46);
  SparsifyConfig cfg;
  cfg.binomial_force_full = true;
  // lambda = k makes p = 1, so sampling is the identity.
  SparsifiedGraph sp = binomial_sparsify(g, /*lambda=*/4, /*k=*/4, 0.25, rng, cfg);
  const Weight alpha = binomial_alpha(3, 0.25);
  // Every sink set's in-cut grows by alpha per member.
  for (std::uint32_t bits = 1; bits < 4; ++bits) {
    std::vector<int> t;
    if (bits & 1) t.push_back(1);
    if (bits & 2) t.push_back(2);
    std::vector<int> mapped;
    for (int v : t) mapped.push_back(sp.vertex_map[v]);
    CHECK(in_cut_value(sp.graph, mapped) ==
          in_cut_value(g, t) + alpha * static_cast<Weight>(t.size()));
  }
}

TEST_CASE("binomial sampling hits its expectation") {
  WeightedDigraph g = tiny({{0, 1, 400}, {2, 1, 600}, {0, 2, 500}, {1, 2, 300}}, 3);
  SplitRng rng(47);
  SparsifyConfig cfg;
  cfg.exact_binomial = true;
  const Weight lambda = 800;
  const long long k = 80;
  const double p = static_cast<double>(k) / static_cast<double>(lambda);
  const Weight alpha = binomial_alpha(3, 0.25);

  const int kTrials = 10000;
  double mean = 0;
  std::vector<int> t{1};
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng trial_rng = rng.split();
    SparsifiedGraph sp = binomial_sparsify(g, lambda, k, 0.25, trial_rng, cfg);
    if (sp.vertex_map[1] == sp.graph.root()) continue;  // contracted; skip
    std::vector<int> mapped{sp.vertex_map[1]};
    mean += static_cast<double>(in_cut_value(sp.graph, mapped) - alpha);
  }
  mean /= kTrials;
  double expect = p * static_cast<double>(in_cut_value(g, t));
  CHECK(std::abs(mean - expect) / expect <= 0.02);
}

TEST_CASE("sparsified mincut stays within the analytic budget") {
  SplitRng rng(48);
  const double eps = 0.25;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(4));
    WeightedDigraph g = gen_erdos(n, 3 * n, 10, rng);
    CutResult oracle = brute_force_s_mincut(g);
    if (oracle.value < 1) continue;
    Weight lambda = oracle.value;
    const long long k = 2;
    SparsifiedGraph sp = partial_sparsify(g, lambda, k, eps, rng, SparsifyVariant::kRounding);
    Weight lambda0 = reference_s_mincut(sp.graph).value;
    double budget = (1 + eps) * static_cast<double>(k) * (64.0 / (eps * eps)) *
                    std::log(std::max(2, n));
    CHECK(static_cast<double>(lambda0) <= budget);
  }
}

TEST_CASE("planted sinks survive the sparsifier") {
  SplitRng rng(49);
  const int kTrials = 200;
  int survived = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng inst_rng = rng.split();
    const int n = 24;
    const int sink_size = 3;
    PlantedCut planted = gen_planted_unbalanced(n, sink_size, 256, inst_rng, 4);
    const long long k = 4;
    SparsifiedGraph sp = partial_sparsify(planted.graph, planted.answer.value, k, 0.25,
                                          inst_rng, SparsifyVariant::kBinomial);
    bool intact = true;
    for (int v : planted.answer.sink_side)
      if (sp.vertex_map[v] == sp.graph.root()) intact = false;
    if (intact) ++survived;
  }
  CHECK(survived * 100 >= kTrials * 95);
}

TEST_CASE("concentration trial on the fixed cycle") {
  WeightedDigraph g = gen_cycle(6, 1000);
  SparsifierTrialParams params;
  params.lambda_guess = 1000;
  params.k = 200;
  params.eps = 0.25;
  params.variant = 1;
  SplitRng rng(50);
  ConcentrationReport rep = sparsifier_concentration_trial(g, params, 300, rng);
  CHECK(rep.informative_sets > 0);
  CHECK(rep.bounds_respected);
  CHECK(rep.structure_ok);
}

TEST_CASE("concentration trial at p=1 never fails") {
  // lambda = k forces p = 1: sampling is deterministic, so every trial
  // satisfies the bounds exactly.
  WeightedDigraph g = gen_cycle(5, 40);
  SparsifierTrialParams params;
  params.lambda_guess = 40;
  params.k = 40;
  params.eps = 0.25;
  params.variant = 1;
  SplitRng rng(51);
  ConcentrationReport rep = sparsifier_concentration_trial(g, params, 50, rng);
  CHECK(rep.bounds_respected);
  CHECK(rep.report.confidence_bound == 0.0);  // zero violations anywhere
  CHECK(rep.structure_ok);
}

TEST_CASE("binomial outputs keep every sink cut above (1-eps) p lambda") {
  // Lemma-style floor: with the star overlay, the minimum sparsified
  // in-cut over all sink sets clears (1-eps) * p * lambda essentially
  // always at these parameters.
  WeightedDigraph g = gen_cycle(6, 1000);
  const Weight lambda = 1000;
  const long long k = 200;
  const double eps = 0.25;
  const double p = static_cast<double>(k) / static_cast<double>(lambda);
  SparsifyConfig cfg;
  cfg.binomial_force_full = true;
  cfg.exact_binomial = true;
  SplitRng rng(52);
  const int kTrials = 200;
  int ok = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    SplitRng trial_rng = rng.split();
    SparsifiedGraph sp = binomial_sparsify(g, lambda, k, eps, trial_rng, cfg);
    Weight min_cut = kInfWeight;
    const int n = sp.graph.vertex_count();
    for (std::uint32_t bits = 1; bits < (1u << (n - 1)); ++bits) {
      std::vector<int> t;
      for (int v = 1; v < n; ++v)
        if (bits & (1u << (v - 1))) t.push_back(v);
      min_cut = std::min(min_cut, in_cut_value(sp.graph, t));
    }
    if (static_cast<double>(min_cut) >= (1 - eps) * p * static_cast<double>(lambda)) ++ok;
  }
  CHECK(ok * 100 >= kTrials * 90);
}
