#include "dirmincut/vertex_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirmincut {

VertexWeightedDigraph VertexWeightedDigraph::build(
    int n, int root, std::span<const std::pair<int, int>> arcs,
    std::span<const Weight> weights) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
  if (root < 0 || root >= n) throw std::invalid_argument("root id out of range");
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("weight count must equal vertex count");
  VertexWeightedDigraph g;
  g.n = n;
  g.root = root;
  g.weight.assign(weights.begin(), weights.end());
  for (Weight w : g.weight)
    if (w < 0) throw std::invalid_argument("negative vertex weight");
  g.arcs.reserve(arcs.size());
  for (auto [t, h] : arcs) {
    if (t < 0 || t >= n || h < 0 || h >= n)
      throw std::invalid_argument("vertex id out of range");
    if (t == h) continue;
    g.arcs.emplace_back(t, h);
  }
  return g;
}

std::vector<int> VertexWeightedDigraph::out_neighbors(int v) const {
  std::vector<char> seen(n, 0);
  std::vector<int> out;
  for (auto [t, h] : arcs)
    if (t == v && !seen[h]) {
      seen[h] = 1;
      out.push_back(h);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> VertexWeightedDigraph::in_neighbors(int v) const {
  std::vector<char> seen(n, 0);
  std::vector<int> in;
  for (auto [t, h] : arcs)
    if (h == v && !seen[t]) {
      seen[t] = 1;
      in.push_back(t);
    }
  std::sort(in.begin(), in.end());
  return in;
}

std::vector<int> VertexWeightedDigraph::candidate_sinks() const {
  std::vector<char> excluded(n, 0);
  excluded[root] = 1;
  for (auto [t, h] : arcs)
    if (t == root) excluded[h] = 1;
  std::vector<int> v_prime;
  for (int v = 0; v < n; ++v)
    if (!excluded[v]) v_prime.push_back(v);
  return v_prime;
}

Weight VertexWeightedDigraph::total_weight() const {
  Weight w = 0;
  for (int v = 0; v < n; ++v) {
    w += weight[v];
    if (w >= kInfWeight) return kInfWeight;
  }
  return w;
}

Weight vertex_in_cut_value(const VertexWeightedDigraph& g, std::span<const int> t) {
  if (t.empty()) throw std::invalid_argument("sink set must be nonempty");
  std::vector<char> in_t(g.n, 0);
  for (int v : t) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex id out of range");
    if (v == g.root) throw std::invalid_argument("sink set contains the root");
    in_t[v] = 1;
  }
  std::vector<char> counted(g.n, 0);
  Weight total = 0;
  for (auto [tail, head] : g.arcs) {
    if (in_t[head] && !in_t[tail] && !counted[tail]) {
      counted[tail] = 1;
      total += g.effective_weight(tail);
      if (total >= kInfWeight) return kInfWeight;
    }
  }
  return total;
}

VertexWeightedDigraph reverse(const VertexWeightedDigraph& g) {
  VertexWeightedDigraph r = g;
  for (auto& [t, h] : r.arcs) std::swap(t, h);
  return r;
}

WeightedDigraph split_graph(const VertexWeightedDigraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.arcs.size() + g.n);
  for (int v = 0; v < g.n; ++v)
    edges.push_back({split_in(v), split_out(v), g.effective_weight(v)});
  for (auto [t, h] : g.arcs)
    edges.push_back({split_out(t), split_in(h), g.effective_weight(t)});
  return WeightedDigraph::build(2 * g.n, split_out(g.root), edges);
}

}  // namespace dirmincut
