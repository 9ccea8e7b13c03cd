#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dirmincut/digraph.hpp"
#include "dirmincut/generators.hpp"
#include "dirmincut/graph_io.hpp"
#include "dirmincut/rng.hpp"

using namespace dirmincut;

namespace {

WeightedDigraph tiny(std::initializer_list<Edge> edges, int n, int root = 0) {
  return WeightedDigraph::build(n, root, std::vector<Edge>(edges));
}

}  // namespace

TEST_CASE("build normalizes the edge list") {
  WeightedDigraph g = tiny({{0, 1, 5}}, 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.total_weight() == 5);

  // Self-loops never cross a cut and are dropped on load.
  WeightedDigraph h = tiny({{0, 0, 3}, {0, 1, 2}}, 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.edge(0).head == 1);

  // Parallel edges are preserved.
  WeightedDigraph p = tiny({{0, 1, 1}, {0, 1, 2}}, 3);
  CHECK(p.edge_count() == 2);
  Weight out_of_root = 0;
  for (int e : p.out_edges(0)) out_of_root += p.edge(e).weight;
  CHECK(out_of_root == 3);
}

TEST_CASE("build rejects bad input") {
  std::vector<Edge> bad{{0, 5, 1}};
  CHECK_THROWS_AS(WeightedDigraph::build(2, 0, bad), std::invalid_argument);
  std::vector<Edge> neg{{0, 1, -2}};
  CHECK_THROWS_AS(WeightedDigraph::build(2, 0, neg), std::invalid_argument);
  CHECK_THROWS_AS(WeightedDigraph::build(2, 7, std::vector<Edge>{}), std::invalid_argument);
}

TEST_CASE("cut values sum the correct edges") {
  WeightedDigraph g = tiny({{0, 1, 2}, {1, 0, 7}}, 2);
  std::vector<int> s{0}, a{1};
  CHECK(out_cut_value(g, s) == 2);
  CHECK(out_cut_value(g, a) == 7);

  WeightedDigraph h = tiny({{0, 1, 1}, {0, 2, 4}, {1, 2, 2}}, 3);
  std::vector<int> sa{0, 1};
  CHECK(out_cut_value(h, sa) == 6);

  std::vector<int> empty;
  CHECK_THROWS_AS(out_cut_value(g, empty), std::invalid_argument);
  std::vector<int> full{0, 1};
  CHECK_THROWS_AS(out_cut_value(g, full), std::invalid_argument);
}

TEST_CASE("reverse flips every edge and preserves cut duality") {
  WeightedDigraph g = tiny({{0, 1, 2}}, 2);
  WeightedDigraph r = reverse(g);
  CHECK(r.edge(0).tail == 1);
  CHECK(r.edge(0).head == 0);
  CHECK(reverse(r).structurally_equal(g));

  WeightedDigraph empty = tiny({}, 3);
  CHECK(reverse(empty).edge_count() == 0);

  // in_cut(g, U) == out_cut(reverse(g), U) across random (G, U) pairs.
  SplitRng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(6));
    WeightedDigraph h = gen_erdos(n, 2 * n, 9, rng);
    WeightedDigraph hr = reverse(h);
    std::vector<int> u;
    for (int v = 0; v < n; ++v)
      if (rng.bernoulli(0.5)) u.push_back(v);
    if (u.empty() || static_cast<int>(u.size()) == n) continue;
    CHECK(in_cut_value(h, u) == out_cut_value(hr, u));
    // Both directions of the bipartition, against an independent scan.
    std::vector<char> mask = make_mask(n, u);
    Weight crossing = 0;
    for (const Edge& e : h.edges())
      if (mask[e.tail] != mask[e.head]) crossing += e.weight;
    std::vector<int> comp;
    for (int v = 0; v < n; ++v)
      if (!mask[v]) comp.push_back(v);
    CHECK(out_cut_value(h, u) + out_cut_value(h, comp) == crossing);
  }
}

TEST_CASE("contract_into_root merges and prunes") {
  // Empty contraction leaves the graph unchanged.
  WeightedDigraph g = tiny({{0, 1, 1}, {1, 2, 2}, {2, 0, 9}}, 3);
  Contraction none = contract_into_root(g, std::vector<int>{});
  CHECK(none.graph.structurally_equal(g));

  // Contracting {a} retargets a->b, drops the self-loop and the edge
  // headed back into the root.
  Contraction c = contract_into_root(g, std::vector<int>{1});
  CHECK(c.graph.vertex_count() == 2);
  REQUIRE(c.graph.edge_count() == 1);
  CHECK(c.graph.edge(0).tail == c.graph.root());
  CHECK(c.graph.edge(0).weight == 2);
  CHECK(c.vertex_map[1] == c.graph.root());

  std::vector<int> has_root{0};
  CHECK_THROWS_AS(contract_into_root(g, has_root), std::invalid_argument);
}

TEST_CASE("contraction preserves in-cuts of disjoint sink sets") {
  SplitRng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng.next_below(4));
    WeightedDigraph g = gen_erdos(n, 3 * n, 7, rng);
    std::vector<int> x;
    for (int v = 1; v < n; ++v)
      if (rng.bernoulli(0.3)) x.push_back(v);
    if (static_cast<int>(x.size()) >= n - 2) continue;
    Contraction c = contract_into_root(g, x);

    std::vector<char> in_x(n, 0);
    for (int v : x) in_x[v] = 1;
    // Every sink set disjoint from x keeps its in-cut value.
    std::vector<int> rest;
    for (int v = 1; v < n; ++v)
      if (!in_x[v]) rest.push_back(v);
    for (std::uint32_t bits = 1; bits < (1u << rest.size()); ++bits) {
      std::vector<int> t_old, t_new;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (bits & (1u << i)) {
          t_old.push_back(rest[i]);
          t_new.push_back(c.vertex_map[rest[i]]);
        }
      CHECK(in_cut_value(g, t_old) == in_cut_value(c.graph, t_new));
    }
  }
}

TEST_CASE("graph files parse and serialize") {
  WeightedDigraph g = parse_edge_graph("p ec 2 1\nr 0\na 0 1 5\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.root() == 0);
  CHECK(g.edge(0).weight == 5);

  CHECK_THROWS_AS(parse_edge_graph("p ec 2 1\na 0 5 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_graph("p ec 2 1\np ec 2 1\na 0 1 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_graph("p ec 2 1\nbogus line\na 0 1 1\n"),
                  std::invalid_argument);

  // Round trips are structurally stable.
  SplitRng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(8));
    WeightedDigraph h = gen_erdos(n, 2 * n, 20, rng);
    CHECK(parse_edge_graph(serialize_graph(h)).structurally_equal(h));
  }

  // Random byte soup must either parse or throw, never crash.
  SplitRng fuzz(24);
  const char alphabet[] = "pecvraw 0123456789\n\t-x";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    int len = static_cast<int>(fuzz.next_below(120));
    for (int i = 0; i < len; ++i)
      text.push_back(alphabet[fuzz.next_below(sizeof(alphabet) - 1)]);
    try {
      parse_graph(text);
    } catch (const std::invalid_argument&) {
    } catch (const std::overflow_error&) {
    }
  }

  // Vertex-weighted files carry w lines; unlisted vertices default to 1.
  VertexWeightedDigraph v =
      parse_vertex_graph("p vc 3 2\nr 0\nw 1 4\nw 2 7\na 0 1 1\na 1 2 1\n");
  CHECK(v.weight[0] == 1);
  CHECK(v.weight[1] == 4);
  CHECK(v.weight[2] == 7);
  VertexWeightedDigraph v2 = parse_vertex_graph(serialize_graph(v));
  CHECK(v2.n == v.n);
  CHECK(v2.weight == v.weight);
  CHECK(v2.arcs == v.arcs);
}
