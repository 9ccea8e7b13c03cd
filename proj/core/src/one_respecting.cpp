#include "dirmincut/one_respecting.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirmincut {
namespace {

std::vector<std::vector<int>> undirected_tree_adjacency(const Arborescence& t) {
  std::vector<std::vector<int>> adj(t.size());
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    adj[v].push_back(t.parent[v]);
    adj[t.parent[v]].push_back(v);
  }
  return adj;
}

}  // namespace

int find_centroid(const std::vector<std::vector<int>>& adj,
                  const std::vector<int>& component) {
  if (component.empty()) throw std::invalid_argument("empty tree component");
  const int total = static_cast<int>(component.size());
  if (total == 1) return component[0];

  std::vector<char> in_comp(adj.size(), 0);
  for (int v : component) in_comp[v] = 1;

  // Root the component at component[0]; subtree sizes by iterative DFS.
  std::vector<int> order, parent(adj.size(), -1), size(adj.size(), 1);
  order.reserve(total);
  std::vector<int> stack{component[0]};
  std::vector<char> seen(adj.size(), 0);
  seen[component[0]] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int u : adj[v])
      if (in_comp[u] && !seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        stack.push_back(u);
      }
  }
  if (static_cast<int>(order.size()) != total)
    throw std::invalid_argument("component is not connected in the tree");
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];

  int best = -1;
  for (int v : component) {
    int largest = total - size[v];
    for (int u : adj[v])
      if (in_comp[u] && parent[u] == v) largest = std::max(largest, size[u]);
    if (largest <= total / 2 && (best < 0 || v < best)) best = v;
  }
  if (best < 0) throw std::logic_error("tree component has no centroid");
  return best;
}

CentroidLayers centroid_decomposition(const Arborescence& t) {
  if (!valid_arborescence(t)) throw std::invalid_argument("invalid arborescence");
  auto adj = undirected_tree_adjacency(t);
  std::vector<char> removed(t.size(), 0);
  removed[t.root] = 1;

  auto fragments_after = [&](const std::vector<int>& component) {
    std::vector<std::vector<int>> frags;
    std::vector<char> seen(t.size(), 0);
    for (int v : component) {
      if (removed[v] || seen[v]) continue;
      std::vector<int> frag, stack{v};
      seen[v] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        frag.push_back(x);
        for (int u : adj[x])
          if (!removed[u] && !seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
      }
      std::sort(frag.begin(), frag.end());
      frags.push_back(std::move(frag));
    }
    return frags;
  };

  CentroidLayers out;
  out.layers.emplace_back();  // layer 0 placeholder (C_0 = {root})

  std::vector<int> everyone;
  for (int v = 0; v < t.size(); ++v) everyone.push_back(v);
  std::vector<std::vector<int>> current = fragments_after(everyone);

  while (!current.empty()) {
    CentroidLayers::Layer layer;
    layer.subtrees = current;
    for (const auto& subtree : current) {
      int c = find_centroid(adj, subtree);
      layer.centroids.push_back(c);
      removed[c] = 1;
    }
    std::vector<std::vector<int>> next;
    for (const auto& subtree : current)
      for (auto& frag : fragments_after(subtree)) next.push_back(std::move(frag));
    out.layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return out;
}

std::pair<WeightedDigraph, int> build_layer_graph(const WeightedDigraph& g,
                                                  const CentroidLayers& layers, int i) {
  if (i < 1 || i > layers.depth()) throw std::invalid_argument("layer index out of range");
  const int n = g.vertex_count();
  const int super_sink = n;
  const auto& layer = layers.layers[i];

  std::vector<int> subtree_of(n, -1);
  for (int s = 0; s < static_cast<int>(layer.subtrees.size()); ++s)
    for (int v : layer.subtrees[s]) subtree_of[v] = s;

  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + layer.centroids.size());
  for (const Edge& e : g.edges()) {
    if (subtree_of[e.head] < 0) continue;
    if (subtree_of[e.tail] == subtree_of[e.head]) {
      edges.push_back(e);  // E1
    } else {
      edges.push_back({g.root(), e.head, e.weight});  // E2, parallel edges kept
    }
  }
  for (int c : layer.centroids) edges.push_back({c, super_sink, kInfWeight});  // E3
  return {WeightedDigraph::build(n + 1, g.root(), edges), super_sink};
}

CutResult min_one_respecting_cut(const WeightedDigraph& g, const Arborescence& t,
                                 MaxflowCounter* counter,
                                 std::vector<OneRespectCandidate>* candidates) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("one-respecting solver needs at least two vertices");
  if (t.size() != g.vertex_count() || t.root != g.root() || !valid_arborescence(t))
    throw std::invalid_argument("tree is not a valid arborescence for this graph");
  CentroidLayers layers = centroid_decomposition(t);

  CutResult best;
  best.graph_tag = "input";
  best.witness_origin = "one-respecting";

  for (int i = 1; i <= layers.depth(); ++i) {
    auto [gi, super_sink] = build_layer_graph(g, layers, i);
    FlowResult flow = max_flow(gi, gi.root(), super_sink, counter);

    // Residual adjacency of G_i, reversed, for backward reachability.
    std::vector<std::vector<int>> rin(gi.vertex_count());
    for (int e = 0; e < gi.edge_count(); ++e) {
      const Edge& ge = gi.edge(e);
      if (flow.edge_flow[e] < ge.weight) rin[ge.head].push_back(ge.tail);
      if (flow.edge_flow[e] > 0) rin[ge.tail].push_back(ge.head);
    }

    const auto& layer = layers.layers[i];
    for (int s = 0; s < static_cast<int>(layer.subtrees.size()); ++s) {
      const int u = layer.centroids[s];
      Weight candidate_value = 0;
      for (int e = 0; e < gi.edge_count(); ++e)
        if (gi.edge(e).tail == u && gi.edge(e).head == super_sink)
          candidate_value += flow.edge_flow[e];

      // Vertices of the subtree that can reach u in the residual graph.
      std::vector<char> in_subtree(gi.vertex_count(), 0);
      for (int v : layer.subtrees[s]) in_subtree[v] = 1;
      std::vector<char> reach(gi.vertex_count(), 0);
      std::vector<int> stack{u};
      reach[u] = 1;
      std::vector<int> sink_side{u};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : rin[v])
          if (!reach[w]) {
            reach[w] = 1;
            if (in_subtree[w]) sink_side.push_back(w);
            stack.push_back(w);
          }
      }
      std::sort(sink_side.begin(), sink_side.end());

      if (candidates)
        candidates->push_back({i, u, candidate_value, sink_side});
      if (candidate_value < best.value) {
        best.value = candidate_value;
        best.sink_side = std::move(sink_side);
      }
    }
  }
  return best;
}

}  // namespace dirmincut
