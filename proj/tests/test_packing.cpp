#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "dirmincut/arborescence.hpp"
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

double tree_cost(const WeightedDigraph& g, const Arborescence& t,
                 const std::vector<double>& cost) {
  double total = 0;
  for (int v = 0; v < t.size(); ++v)
    if (t.parent_edge[v] >= 0) total += cost[t.parent_edge[v]];
  return total;
}

}  // namespace

TEST_CASE("min-cost arborescence basics") {
  // s->a, s->b, a->b with costs (1, 4, 2): the optimum takes s->a, a->b.
  WeightedDigraph g = tiny({{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, 3);
  std::vector<double> cost{1, 4, 2};
  Arborescence t = min_cost_arborescence(g, cost);
  CHECK(tree_cost(g, t, cost) == 3);
  CHECK(t.parent[1] == 0);
  CHECK(t.parent[2] == 1);

  // A path has a unique arborescence regardless of costs.
  WeightedDigraph path = tiny({{0, 1, 1}, {1, 2, 1}}, 3);
  std::vector<double> weird{9, 1};
  Arborescence pt = min_cost_arborescence(path, weird);
  CHECK(pt.parent[1] == 0);
  CHECK(pt.parent[2] == 1);

  // Unreachable vertex.
  WeightedDigraph dis = tiny({{0, 1, 1}}, 3);
  std::vector<double> c1{1};
  CHECK_THROWS_AS(min_cost_arborescence(dis, c1), std::runtime_error);
}

TEST_CASE("min-cost arborescence matches exhaustive enumeration") {
  SplitRng rng(51);
  int done = 0;
  while (done < 500) {
    int n = 2 + static_cast<int>(rng.next_below(4));
    WeightedDigraph g = gen_erdos(n, 3 * n, 9, rng);
    std::vector<Arborescence> all = brute_force_arborescences(g);
    if (all.empty()) continue;
    ++done;
    std::vector<double> cost(g.edge_count());
    for (double& c : cost) c = static_cast<double>(rng.next_below(100));
    double best = 1e300;
    for (const Arborescence& t : all) best = std::min(best, tree_cost(g, t, cost));
    Arborescence got = min_cost_arborescence(g, cost);
    CHECK(valid_arborescence(got));
    CHECK(tree_cost(g, got, cost) == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("arborescence enumeration counts parent choices") {
  // Unique path: exactly one arborescence.
  WeightedDigraph path = tiny({{0, 1, 1}, {1, 2, 1}}, 3);
  CHECK(brute_force_arborescences(path).size() == 1);
  // Two parallel routes into vertex 1: one tree per parent edge.
  WeightedDigraph par = tiny({{0, 1, 1}, {0, 1, 2}}, 2);
  CHECK(brute_force_arborescences(par).size() == 2);
}

TEST_CASE("packing on a unique-arborescence graph") {
  WeightedDigraph path = tiny({{0, 1, 3}, {1, 2, 7}}, 3);
  Packing p = pack_arborescences(path);
  CHECK(p.trees.size() == 1);
  // gamma_bar = 1 / min edge weight along the path.
  CHECK(p.gamma_bar == doctest::Approx(1.0 / 3.0));
  CHECK(p.scaled_loads_within_one(path));
}

TEST_CASE("packing satisfies the duality sandwich") {
  SplitRng rng(52);
  int done = 0;
  while (done < 60) {
    int n = 3 + static_cast<int>(rng.next_below(5));
    WeightedDigraph g = gen_erdos(n, 3 * n, 6, rng);
    SparsifiedGraph sp = partial_sparsify(g, std::max<Weight>(1, g.total_weight() / 2), 2,
                                          0.25, rng, SparsifyVariant::kRounding);
    Weight lambda0 = brute_force_s_mincut(sp.graph).value;
    if (lambda0 < 1) continue;
    ++done;
    PackOptions opts;
    opts.eps = 0.1;
    Packing p = pack_arborescences(sp.graph, opts);
    // lambda0/(1+eps) <= 1/gamma_bar <= lambda0, the upper exactly.
    CHECK(p.gamma_bar_at_most(sp.graph, 11, 10, lambda0));
    CHECK(1.0 / p.gamma_bar <= static_cast<double>(lambda0) + 1e-9);
    CHECK(p.scaled_loads_within_one(sp.graph));
  }
}

TEST_CASE("sampling is uniform over iterations") {
  // Hand-built packing with five distinct trees, one iteration each.
  Packing p;
  p.iterations = 5;
  for (int i = 0; i < 5; ++i) {
    Arborescence t;
    t.root = 0;
    t.parent = {-1, 0, i % 2 == 0 ? 0 : 1};
    t.parent_edge = {-1, i, i};
    p.trees.push_back(t);
    p.iteration_tree.push_back(i);
  }
  SplitRng rng(53);
  CHECK(sample_arborescences(p, 0, rng).empty());

  std::map<int, int> freq;
  const int kDraws = 10000;
  for (int pick : sample_arborescences(p, kDraws, rng)) ++freq[pick];
  const double expect = kDraws / 5.0;
  const double sigma = std::sqrt(kDraws * 0.2 * 0.8);
  for (auto [tree, count] : freq)
    CHECK(std::abs(count - expect) <= 3 * sigma);

  // Singleton packing: every draw is the same tree.
  Packing single;
  single.iterations = 1;
  single.trees.push_back(p.trees[0]);
  single.iteration_tree.push_back(0);
  for (int pick : sample_arborescences(single, 10, rng)) CHECK(pick == 0);

  Packing empty;
  CHECK_THROWS_AS(sample_arborescences(empty, 1, rng), std::invalid_argument);
}

TEST_CASE("crossing_count") {
  // Star rooted at 0 with leaves 1, 2.
  WeightedDigraph g = tiny({{0, 1, 1}, {0, 2, 1}}, 3);
  Arborescence t;
  t.root = 0;
  t.parent = {-1, 0, 0};
  t.parent_edge = {-1, 0, 1};
  std::vector<int> s_and_1{0, 1};
  CHECK(crossing_count(t, s_and_1) == 1);
  std::vector<int> everyone{0, 1, 2};
  CHECK(crossing_count(t, everyone) == 0);
  std::vector<int> no_root{1};
  CHECK_THROWS_AS(crossing_count(t, no_root), std::invalid_argument);

  // Proper source sides always have at least one crossing.
  SplitRng rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(5));
    WeightedDigraph h = gen_erdos(n, 3 * n, 4, rng);
    std::vector<Arborescence> all = brute_force_arborescences(h);
    if (all.empty()) continue;
    const Arborescence& tree = all[rng.next_below(all.size())];
    for (std::uint32_t bits = 1; bits + 1 < (1u << (n - 1)); ++bits) {
      std::vector<char> mask(n, 0);
      mask[0] = 1;
      for (int v = 1; v < n; ++v) mask[v] = (bits >> (v - 1)) & 1u;
      if (std::count(mask.begin(), mask.end(), char{1}) == n) continue;
      CHECK(crossing_count(tree, mask) >= 1);
    }
  }
}

TEST_CASE("one-respect probability trial on planted instances") {
  SplitRng rng(55);
  // Unique arborescence: the planted sink trivially 1-respects it.
  WeightedDigraph path = tiny({{0, 1, 3}, {1, 2, 7}}, 3);
  std::vector<int> sink{2};
  TrialReport unique = one_respect_probability_trial(path, sink, 2, 0.1, 20, rng);
  CHECK(unique.successes == unique.trials);

  // Planted instances: empirical 1-respect frequency >= 0.4 at 95%
  // confidence (conservative against the >= 1/2 Markov bound).
  int n = 7;
  PlantedCut planted = gen_planted_unbalanced(n, 2, 9, rng);
  TrialReport rep = one_respect_probability_trial(planted.graph, planted.answer.sink_side,
                                                  2, 0.1, 200, rng);
  CHECK(clopper_pearson_lower(rep.successes, rep.trials, 0.05) >= 0.4);

  // The premise |T*| <= k is enforced.
  CHECK_THROWS_AS(one_respect_probability_trial(planted.graph,
                                                planted.answer.sink_side, 1, 0.1, 1, rng),
                  std::invalid_argument);
}
