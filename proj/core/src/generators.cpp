#include "dirmincut/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirmincut {

WeightedDigraph gen_erdos(int n, int m, Weight max_weight, SplitRng& rng) {
  if (n < 2) throw std::invalid_argument("gen_erdos needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(m);
  while (static_cast<int>(edges.size()) < m) {
    int t = static_cast<int>(rng.next_below(n));
    int h = static_cast<int>(rng.next_below(n));
    if (t == h) continue;
    Weight w = 1 + static_cast<Weight>(rng.next_below(static_cast<std::uint64_t>(max_weight)));
    edges.push_back({t, h, w});
  }
  return WeightedDigraph::build(n, 0, edges);
}

PlantedCut gen_planted_unbalanced(int n, int sink_size, Weight lambda, SplitRng& rng,
                                  Weight margin) {
  if (sink_size < 1 || sink_size >= n - 1)
    throw std::invalid_argument("sink size must be in [1, n-2]");
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  const int root = 0;
  const Weight heavy = margin * lambda;

  // Sink side: the last sink_size ids, wired as a heavy directed cycle so
  // every proper nonempty subset of it has in-cut >= heavy.
  std::vector<int> sink;
  for (int v = n - sink_size; v < n; ++v) sink.push_back(v);
  std::vector<char> in_sink(n, 0);
  for (int v : sink) in_sink[v] = 1;

  std::vector<Edge> edges;
  // Any sink set containing an outside vertex pays the root edge.
  for (int v = 1; v < n; ++v)
    if (!in_sink[v]) edges.push_back({root, v, heavy});
  if (sink_size > 1)
    for (int i = 0; i < sink_size; ++i)
      edges.push_back({sink[i], sink[(i + 1) % sink_size], heavy});

  // Exactly lambda units entering the planted sink, split over a few arcs
  // from random outside vertices.
  Weight remaining = lambda;
  while (remaining > 0) {
    Weight w = remaining <= 3 ? remaining
                              : 1 + static_cast<Weight>(rng.next_below(
                                        static_cast<std::uint64_t>(remaining)));
    int tail = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - sink_size)));
    int head = sink[rng.next_below(static_cast<std::uint64_t>(sink_size))];
    edges.push_back({tail, head, w});
    remaining -= w;
  }
  // Free return edges from the sink (they never enter any sink set we
  // care about but keep the instance strongly connected-ish).
  for (int v : sink)
    if (rng.bernoulli(0.5)) edges.push_back({v, root, 1 + static_cast<Weight>(rng.next_below(3))});

  PlantedCut out;
  out.graph = WeightedDigraph::build(n, root, edges);
  out.answer.sink_side = sink;
  out.answer.value = lambda;
  out.answer.graph_tag = "input";
  out.answer.witness_origin = "planted";
  return out;
}

PlantedVertexCut gen_planted_vertex(int n, int separator_size, int sink_size,
                                    Weight separator_weight, SplitRng& rng) {
  if (separator_size < 1 || sink_size < 1 || 1 + separator_size + sink_size > n)
    throw std::invalid_argument("tri-partition does not fit");
  const int root = 0;
  // Layout: [root][L rest][X][R].
  const int x_begin = n - separator_size - sink_size;
  const int r_begin = n - sink_size;
  const Weight heavy = 8 * separator_weight * std::max<Weight>(1, separator_size) + 8;

  std::vector<Weight> weights(n, heavy);
  std::vector<int> separator, sink;
  for (int v = x_begin; v < r_begin; ++v) {
    weights[v] = std::max<Weight>(1, separator_weight / separator_size);
    separator.push_back(v);
  }
  for (int v = r_begin; v < n; ++v) sink.push_back(v);

  std::vector<std::pair<int, int>> arcs;
  // Root reaches all of L and X.
  for (int v = 1; v < r_begin; ++v) arcs.emplace_back(root, v);
  // Only X feeds R; every sink vertex is fed by every separator vertex so
  // the full separator is forced.
  for (int x = x_begin; x < r_begin; ++x)
    for (int r = r_begin; r < n; ++r) arcs.emplace_back(x, r);
  // Heavy internal sink cycle keeps sub-sinks expensive.
  if (sink_size > 1)
    for (int i = 0; i < sink_size; ++i)
      arcs.emplace_back(sink[i], sink[(i + 1) % sink_size]);
  // Back edges from R are free.
  for (int v : sink)
    if (rng.bernoulli(0.5)) arcs.emplace_back(v, root);

  PlantedVertexCut out;
  out.graph = VertexWeightedDigraph::build(n, root, arcs, weights);
  out.answer.separator = separator;
  out.answer.sink_component = sink;
  out.answer.value = 0;
  for (int v : separator) out.answer.value += weights[v];
  return out;
}

WeightedDigraph gen_cycle(int n, Weight weight) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, weight});
  return WeightedDigraph::build(n, 0, edges);
}

WeightedDigraph gen_clique(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) edges.push_back({u, v, 1});
  return WeightedDigraph::build(n, 0, edges);
}

VertexWeightedDigraph gen_vertex_clique(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  std::vector<Weight> w(n, 1);
  return VertexWeightedDigraph::build(n, 0, arcs, w);
}

VertexWeightedDigraph gen_vertex_cycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  std::vector<Weight> w(n, 1);
  return VertexWeightedDigraph::build(n, 0, arcs, w);
}

VertexWeightedDigraph gen_vertex_bidirected_cycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < n; ++v) {
    arcs.emplace_back(v, (v + 1) % n);
    arcs.emplace_back((v + 1) % n, v);
  }
  std::vector<Weight> w(n, 1);
  return VertexWeightedDigraph::build(n, 0, arcs, w);
}

VertexWeightedDigraph gen_vertex_random(int n, double arc_prob, Weight max_weight,
                                        SplitRng& rng) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.bernoulli(arc_prob)) arcs.emplace_back(u, v);
  std::vector<Weight> w(n);
  for (int v = 0; v < n; ++v)
    w[v] = 1 + static_cast<Weight>(rng.next_below(static_cast<std::uint64_t>(max_weight)));
  return VertexWeightedDigraph::build(n, 0, arcs, w);
}

}  // namespace dirmincut
