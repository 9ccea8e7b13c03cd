#include "dirmincut/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirmincut {

WeightedDigraph WeightedDigraph::build(int n, int root, std::span<const Edge> edges) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
  if (root < 0 || root >= n) throw std::invalid_argument("root id out of range");
  WeightedDigraph g;
  g.n_ = n;
  g.root_ = root;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      throw std::invalid_argument("vertex id out of range");
    if (e.weight < 0) throw std::invalid_argument("negative edge weight");
    if (e.tail == e.head) continue;  // self-loops never cross a cut
    if (e.weight == 0) continue;
    g.edges_.push_back(e);
    if (e.weight < kInfWeight) {  // kInfWeight is a capacity sentinel
      g.total_weight_ += e.weight;
      if (g.total_weight_ >= kInfWeight)
        throw std::overflow_error("total weight exceeds 2^62 headroom");
    }
  }
  g.out_adj_.assign(n, {});
  g.in_adj_.assign(n, {});
  for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
    g.out_adj_[g.edges_[id].tail].push_back(id);
    g.in_adj_[g.edges_[id].head].push_back(id);
  }
  return g;
}

bool WeightedDigraph::structurally_equal(const WeightedDigraph& other) const {
  if (n_ != other.n_ || root_ != other.root_ || edges_.size() != other.edges_.size())
    return false;
  auto key = [](const Edge& e) { return std::tuple(e.tail, e.head, e.weight); };
  std::vector<std::tuple<int, int, Weight>> a, b;
  a.reserve(edges_.size());
  b.reserve(edges_.size());
  for (const Edge& e : edges_) a.push_back(key(e));
  for (const Edge& e : other.edges_) b.push_back(key(e));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

WeightedDigraph with_root(const WeightedDigraph& g, int root) {
  return WeightedDigraph::build(g.vertex_count(), root, g.edges());
}

std::vector<char> make_mask(int n, std::span<const int> ids) {
  std::vector<char> mask(n, 0);
  for (int v : ids) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
    mask[v] = 1;
  }
  return mask;
}

namespace {

void check_proper(const WeightedDigraph& g, const std::vector<char>& mask) {
  if (static_cast<int>(mask.size()) != g.vertex_count())
    throw std::invalid_argument("mask size mismatch");
  int cnt = static_cast<int>(std::count(mask.begin(), mask.end(), char{1}));
  if (cnt == 0 || cnt == g.vertex_count())
    throw std::invalid_argument("cut side must be a nonempty proper subset");
}

}  // namespace

Weight out_cut_value(const WeightedDigraph& g, const std::vector<char>& mask) {
  check_proper(g, mask);
  Weight total = 0;
  for (const Edge& e : g.edges())
    if (mask[e.tail] && !mask[e.head]) {
      total += e.weight;
      if (total >= kInfWeight) return kInfWeight;
    }
  return total;
}

Weight out_cut_value(const WeightedDigraph& g, std::span<const int> u) {
  return out_cut_value(g, make_mask(g.vertex_count(), u));
}

Weight in_cut_value(const WeightedDigraph& g, const std::vector<char>& mask) {
  check_proper(g, mask);
  Weight total = 0;
  for (const Edge& e : g.edges())
    if (!mask[e.tail] && mask[e.head]) {
      total += e.weight;
      if (total >= kInfWeight) return kInfWeight;
    }
  return total;
}

Weight in_cut_value(const WeightedDigraph& g, std::span<const int> u) {
  return in_cut_value(g, make_mask(g.vertex_count(), u));
}

WeightedDigraph reverse(const WeightedDigraph& g) {
  std::vector<Edge> rev;
  rev.reserve(g.edges().size());
  for (const Edge& e : g.edges()) rev.push_back({e.head, e.tail, e.weight});
  return WeightedDigraph::build(g.vertex_count(), g.root(), rev);
}

std::vector<char> reachable_from_root(const WeightedDigraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{g.root()};
  seen[g.root()] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : g.out_edges(v)) {
      int h = g.edge(id).head;
      if (!seen[h]) {
        seen[h] = 1;
        stack.push_back(h);
      }
    }
  }
  return seen;
}

Contraction contract_into_root(const WeightedDigraph& g, std::span<const int> x) {
  const int n = g.vertex_count();
  std::vector<char> drop(n, 0);
  for (int v : x) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
    if (v == g.root()) throw std::invalid_argument("cannot contract the root");
    drop[v] = 1;
  }
  if (std::none_of(drop.begin(), drop.end(), [](char c) { return c != 0; })) {
    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;
    return {g, identity};
  }

  std::vector<int> map(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!drop[v]) map[v] = next++;
  int new_root = map[g.root()];
  for (int v = 0; v < n; ++v)
    if (drop[v]) map[v] = new_root;

  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    int t = map[e.tail], h = map[e.head];
    if (t == h) continue;           // became a self-loop
    if (h == new_root) continue;    // remove all edges headed to the root
    edges.push_back({t, h, e.weight});
  }
  return {WeightedDigraph::build(next, new_root, edges), std::move(map)};
}

}  // namespace dirmincut
