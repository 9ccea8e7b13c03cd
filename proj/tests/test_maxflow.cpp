#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirmincut/generators.hpp"
#include "dirmincut/maxflow.hpp"
#include "dirmincut/oracle.hpp"
#include "dirmincut/rng.hpp"

using namespace dirmincut;

namespace {

WeightedDigraph tiny(std::initializer_list<Edge> edges, int n, int root = 0) {
  return WeightedDigraph::build(n, root, std::vector<Edge>(edges));
}

}  // namespace

TEST_CASE("maxflow basics") {
  // s->a:3, a->t:2, s->t:1; cut enumeration gives min({s})=4, ({s,a})=3.
  WeightedDigraph g = tiny({{0, 1, 3}, {1, 2, 2}, {0, 2, 1}}, 3);
  FlowResult f = max_flow(g, 0, 2);
  CHECK(f.value == 3);
  std::vector<int> side = min_cut_sink_side(g, f);
  CHECK(side == std::vector<int>{2});

  // No s-t path.
  WeightedDigraph h = tiny({{1, 0, 4}}, 2);
  CHECK(max_flow(h, 0, 1).value == 0);

  WeightedDigraph single = tiny({{0, 1, 5}}, 2);
  FlowResult fs = max_flow(single, 0, 1);
  CHECK(fs.value == 5);
  CHECK(min_cut_sink_side(single, fs) == std::vector<int>{1});

  CHECK_THROWS_AS(max_flow(g, 1, 1), std::invalid_argument);
}

TEST_CASE("flow value equals brute-force mincut on small graphs") {
  SplitRng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(6));
    WeightedDigraph g = gen_erdos(n, 2 * n, 10, rng);
    int s = 0;
    int t = 1 + static_cast<int>(rng.next_below(n - 1));
    FlowResult f = max_flow(g, s, t);
    // Brute force: min over sink sets containing t, excluding s.
    Weight best = kInfWeight;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      if ((bits >> s) & 1u) continue;
      if (!((bits >> t) & 1u)) continue;
      std::vector<char> mask(n, 0);
      for (int v = 0; v < n; ++v) mask[v] = (bits >> v) & 1u;
      best = std::min(best, in_cut_value(g, mask));
    }
    CHECK(f.value == best);
    // Sanity: flow bounded by both endpoint degrees.
    Weight out_s = 0, in_t = 0;
    for (int e : g.out_edges(s)) out_s += g.edge(e).weight;
    for (int e : g.in_edges(t)) in_t += g.edge(e).weight;
    CHECK(f.value <= out_s);
    CHECK(f.value <= in_t);
  }
}

TEST_CASE("min_cut_sink_side recomputes to the flow value") {
  SplitRng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(7));
    WeightedDigraph g = gen_erdos(n, 3 * n, 10, rng);
    int t = 1 + static_cast<int>(rng.next_below(n - 1));
    FlowResult f = max_flow(g, 0, t);
    std::vector<int> side = min_cut_sink_side(g, f);
    std::vector<char> mask = make_mask(n, side);
    std::vector<int> comp;
    for (int v = 0; v < n; ++v)
      if (!mask[v]) comp.push_back(v);
    CHECK(out_cut_value(g, comp) == f.value);
    CHECK(in_cut_value(g, side) == f.value);
  }
}

TEST_CASE("min_cut_sink_side rejects non-maximal flows") {
  WeightedDigraph g = tiny({{0, 1, 5}}, 2);
  FlowResult fake;
  fake.value = 0;
  fake.edge_flow = {0};
  fake.source = 0;
  fake.sink = 1;
  CHECK_THROWS_AS(min_cut_sink_side(g, fake), std::invalid_argument);
}

TEST_CASE("reference mincut agrees with subset brute force") {
  // s->a:3, a->b:1, s->b:4: in-cuts are {a}:3, {b}:5, {a,b}:7.
  WeightedDigraph g = tiny({{0, 1, 3}, {1, 2, 1}, {0, 2, 4}}, 3);
  CutResult ref = reference_s_mincut(g);
  CHECK(ref.value == 3);
  CHECK(ref.sink_side == std::vector<int>{1});

  WeightedDigraph single = tiny({{0, 1, 5}}, 2);
  CHECK(reference_s_mincut(single).value == 5);

  SplitRng rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(6));
    WeightedDigraph h = gen_erdos(n, 2 * n, 10, rng);
    CutResult a = reference_s_mincut(h);
    CutResult b = brute_force_s_mincut(h);
    CHECK(a.value == b.value);
    CHECK(in_cut_value(h, a.sink_side) == a.value);
  }
}

TEST_CASE("brute force uses lexicographic tie-breaking") {
  // Two tied minimizers {1} and {2}; {1} is lexicographically first.
  WeightedDigraph g = tiny({{0, 1, 2}, {0, 2, 2}}, 3);
  CutResult cut = brute_force_s_mincut(g);
  CHECK(cut.value == 2);
  CHECK(cut.sink_side == std::vector<int>{1});
}
