#include "dirmincut/maxflow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace dirmincut {
namespace {

// Residual network with paired arcs. arc 2i is edge i, arc 2i+1 its reverse.
class Dinic {
 public:
  explicit Dinic(const WeightedDigraph& g) : g_(g), n_(g.vertex_count()) {
    const auto& edges = g.edges();
    to_.resize(2 * edges.size());
    cap_.resize(2 * edges.size());
    adj_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      to_[2 * i] = edges[i].head;
      cap_[2 * i] = edges[i].weight;
      to_[2 * i + 1] = edges[i].tail;
      cap_[2 * i + 1] = 0;
      adj_[edges[i].tail].push_back(2 * i);
      adj_[edges[i].head].push_back(2 * i + 1);
    }
  }

  FlowResult run(int source, int sink) {
    Weight value = 0;
    while (value < kInfWeight && bfs(source, sink)) {
      it_.assign(n_, 0);
      for (;;) {
        Weight pushed = dfs(source, sink, kInfWeight);
        if (pushed == 0) break;
        value += pushed;
        if (value >= kInfWeight) {
          value = kInfWeight;
          break;
        }
      }
    }
    FlowResult result;
    result.value = value;
    result.source = source;
    result.sink = sink;
    result.edge_flow.resize(g_.edge_count());
    for (int i = 0; i < g_.edge_count(); ++i) result.edge_flow[i] = cap_[2 * i + 1];
    return result;
  }

 private:
  bool bfs(int source, int sink) {
    level_.assign(n_, -1);
    level_[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj_[v]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          q.push(to_[a]);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Weight dfs(int v, int sink, Weight limit) {
    if (v == sink) return limit;
    for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      int a = adj_[v][i];
      int u = to_[a];
      if (cap_[a] > 0 && level_[u] == level_[v] + 1) {
        Weight pushed = dfs(u, sink, std::min(limit, cap_[a]));
        if (pushed > 0) {
          cap_[a] -= pushed;
          cap_[a ^ 1] += pushed;
          return pushed;
        }
      }
    }
    level_[v] = -1;
    return 0;
  }

  const WeightedDigraph& g_;
  int n_;
  std::vector<int> to_;
  std::vector<Weight> cap_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// Residual adjacency reconstructed from a finished flow.
struct Residual {
  std::vector<std::vector<std::pair<int, int>>> out;  // (to, edge id), id<0 = reverse
  explicit Residual(const WeightedDigraph& g, const FlowResult& f) : out(g.vertex_count()) {
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (f.edge_flow[i] < e.weight) out[e.tail].push_back({e.head, i});
      if (f.edge_flow[i] > 0) out[e.head].push_back({e.tail, ~i});
    }
  }
};

}  // namespace

FlowResult max_flow(const WeightedDigraph& g, int source, int sink,
                    MaxflowCounter* counter) {
  if (source == sink) throw std::invalid_argument("max_flow: source equals sink");
  if (source < 0 || source >= g.vertex_count() || sink < 0 || sink >= g.vertex_count())
    throw std::invalid_argument("max_flow: vertex id out of range");
  if (counter) ++counter->calls;
  Dinic dinic(g);
  return dinic.run(source, sink);
}

std::vector<int> min_cut_sink_side(const WeightedDigraph& g, const FlowResult& flow) {
  if (static_cast<int>(flow.edge_flow.size()) != g.edge_count())
    throw std::invalid_argument("flow does not match graph");
  Residual res(g, flow);

  // Maximality check: no residual path source -> sink may remain.
  {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{flow.source};
    seen[flow.source] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == flow.sink)
        throw std::invalid_argument("flow is not maximal: augmenting path exists");
      for (auto [u, id] : res.out[v])
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }

  // Vertices that can reach the sink in the residual graph: walk residual
  // arcs backwards from the sink.
  std::vector<std::vector<int>> rin(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (auto [u, id] : res.out[v]) rin[u].push_back(v);
  std::vector<char> reach(g.vertex_count(), 0);
  std::vector<int> stack{flow.sink};
  reach[flow.sink] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : rin[v])
      if (!reach[u]) {
        reach[u] = 1;
        stack.push_back(u);
      }
  }
  std::vector<int> side;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (reach[v]) side.push_back(v);
  return side;
}

CutResult reference_s_mincut(const WeightedDigraph& g, MaxflowCounter* counter) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("reference_s_mincut needs at least two vertices");
  const int s = g.root();
  CutResult best;
  best.graph_tag = "input";
  best.witness_origin = "reference";
  for (int t = 0; t < g.vertex_count(); ++t) {
    if (t == s) continue;
    FlowResult f = max_flow(g, s, t, counter);
    if (f.value < best.value) {
      best.value = f.value;
      best.sink_side = min_cut_sink_side(g, f);
    }
  }
  return best;
}

}  // namespace dirmincut
