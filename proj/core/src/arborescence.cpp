#include "dirmincut/arborescence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace dirmincut {

bool valid_arborescence(const Arborescence& t) {
  const int n = t.size();
  if (n == 0) return false;
  if (t.root < 0 || t.root >= n) return false;
  if (static_cast<int>(t.parent_edge.size()) != n) return false;
  if (t.parent[t.root] != -1) return false;
  // Walk parents; every vertex must reach the root without cycles.
  std::vector<int> state(n, 0);  // 0 unseen, 1 in progress, 2 done
  state[t.root] = 2;
  for (int v = 0; v < n; ++v) {
    if (state[v]) continue;
    std::vector<int> path;
    int u = v;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = t.parent[u];
      if (u < 0 || u >= n) return false;
    }
    if (state[u] == 1) return false;  // cycle
    for (int w : path) state[w] = 2;
  }
  return true;
}

namespace {

struct LevelEdge {
  int tail;
  int head;
  double cost;
  int below;    // index into the previous level's edge list (or original id)
  int orig_id;  // original edge id, for deterministic tie-breaking
};

bool cheaper(const LevelEdge& a, const LevelEdge& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.orig_id < b.orig_id;
}

// Returns, for every non-root vertex of this level, the index (into
// `edges`) of its chosen incoming edge.
std::vector<int> solve_level(int n, int root, std::vector<LevelEdge> edges) {
  std::vector<int> best(n, -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const LevelEdge& e = edges[i];
    if (e.head == root || e.head == e.tail) continue;
    if (best[e.head] < 0 || cheaper(e, edges[best[e.head]])) best[e.head] = i;
  }
  for (int v = 0; v < n; ++v)
    if (v != root && best[v] < 0)
      throw std::runtime_error("no arborescence exists: vertex unreachable from root");

  // Find a cycle in the parent-pointer functional graph, if any.
  std::vector<int> state(n, 0);
  state[root] = 2;
  std::vector<int> cycle;
  for (int v = 0; v < n && cycle.empty(); ++v) {
    if (state[v]) continue;
    std::vector<int> path;
    int u = v;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = edges[best[u]].tail;
    }
    if (state[u] == 1) {
      // walk path back to u: that's the cycle
      auto it = std::find(path.begin(), path.end(), u);
      cycle.assign(it, path.end());
    }
    for (int w : path) state[w] = 2;
  }
  if (cycle.empty()) {
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v)
      if (v != root) chosen.push_back(best[v]);
    return chosen;
  }

  // Contract the cycle into one supervertex and recurse.
  std::vector<char> in_cycle(n, 0);
  for (int v : cycle) in_cycle[v] = 1;
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!in_cycle[v]) comp[v] = next++;
  const int super = next++;
  for (int v : cycle) comp[v] = super;

  std::vector<LevelEdge> contracted;
  contracted.reserve(edges.size());
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const LevelEdge& e = edges[i];
    int ct = comp[e.tail], ch = comp[e.head];
    if (ct == ch) continue;
    double cost = e.cost;
    if (in_cycle[e.head]) cost -= edges[best[e.head]].cost;
    contracted.push_back({ct, ch, cost, i, e.orig_id});
  }
  // `below` indices survive the recursive solve, so copy them out first.
  std::vector<int> below_of(contracted.size());
  for (int i = 0; i < static_cast<int>(contracted.size()); ++i)
    below_of[i] = contracted[i].below;
  std::vector<int> sub = solve_level(next, comp[root], std::move(contracted));

  // Expand: map sub choices back, then add the cycle's own edges except
  // the one whose head is where the supervertex was entered.
  std::vector<int> chosen;
  int entered_head = -1;
  for (int idx : sub) {
    int level_idx = below_of[idx];
    chosen.push_back(level_idx);
    if (comp[edges[level_idx].head] == super) entered_head = edges[level_idx].head;
  }
  if (entered_head < 0) throw std::logic_error("cycle contraction lost its entry edge");
  for (int v : cycle)
    if (v != entered_head) chosen.push_back(best[v]);
  return chosen;
}

}  // namespace

Arborescence min_cost_arborescence(const WeightedDigraph& g, std::span<const double> cost) {
  const int n = g.vertex_count();
  if (static_cast<int>(cost.size()) != g.edge_count())
    throw std::invalid_argument("cost vector size mismatch");
  for (double c : cost)
    if (!(c >= 0)) throw std::invalid_argument("costs must be nonnegative");
  {
    std::vector<char> seen = reachable_from_root(g);
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw std::runtime_error("no arborescence exists: vertex unreachable from root");
  }

  std::vector<LevelEdge> level;
  level.reserve(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    level.push_back({e.tail, e.head, cost[i], i, i});
  }
  std::vector<int> chosen = solve_level(n, g.root(), std::move(level));

  Arborescence t;
  t.root = g.root();
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  for (int idx : chosen) {
    const Edge& e = g.edge(idx);
    t.parent[e.head] = e.tail;
    t.parent_edge[e.head] = idx;
  }
  if (!valid_arborescence(t))
    throw std::logic_error("min_cost_arborescence produced an invalid tree");
  return t;
}

bool Packing::scaled_loads_within_one(const WeightedDigraph& g) const {
  if (iterations == 0) return false;
  // load_e / gamma_bar <= 1  <=>  use_e / (iters * w_e) <= max load; the
  // max is recomputed here from scratch in exact integer arithmetic.
  long long best_use = 0;
  Weight best_w = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    // compare use_e / w_e vs best_use / best_w
    __int128 lhs = static_cast<__int128>(edge_use[e]) * best_w;
    __int128 rhs = static_cast<__int128>(best_use) * g.edge(e).weight;
    if (lhs > rhs) {
      best_use = edge_use[e];
      best_w = g.edge(e).weight;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    __int128 lhs = static_cast<__int128>(edge_use[e]) * best_w;
    __int128 rhs = static_cast<__int128>(best_use) * g.edge(e).weight;
    if (lhs > rhs) return false;
  }
  return true;
}

bool Packing::gamma_bar_at_most(const WeightedDigraph& g, long long num, long long den,
                                Weight lambda) const {
  if (iterations == 0) return false;
  // gamma_bar <= (num/den)/lambda  <=>  for all e:
  //   use_e * den * lambda <= num * iterations * w_e
  for (int e = 0; e < g.edge_count(); ++e) {
    __int128 lhs = static_cast<__int128>(edge_use[e]) * den;
    lhs *= lambda;
    __int128 rhs = static_cast<__int128>(num) * iterations;
    rhs *= g.edge(e).weight;
    if (lhs > rhs) return false;
  }
  return true;
}

namespace {

double max_load(const std::vector<long long>& use, const WeightedDigraph& g,
                long long iters) {
  double best = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    double load = static_cast<double>(use[e]) /
                  (static_cast<double>(iters) * static_cast<double>(g.edge(e).weight));
    best = std::max(best, load);
  }
  return best;
}

std::uint64_t tree_hash(const Arborescence& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int p : t.parent) {
    h ^= static_cast<std::uint64_t>(p) + 0x9e3779b97f4a7c15ULL;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Packing pack_arborescences(const WeightedDigraph& g, const PackOptions& opts,
                           MaxflowCounter* reference_counter) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 2) throw std::invalid_argument("packing needs at least two vertices");
  {
    std::vector<char> seen = reachable_from_root(g);
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw std::runtime_error("no arborescence exists: vertex unreachable from root");
  }
  Weight w_min = kInfWeight;
  for (const Edge& e : g.edges()) w_min = std::min(w_min, e.weight);
  if (w_min < 1) throw std::invalid_argument("packing requires edge weights >= 1");

  Weight lambda0;
  if (n <= 512) {
    lambda0 = reference_s_mincut(g, reference_counter).value;
  } else if (opts.lambda_hint) {
    lambda0 = *opts.lambda_hint;
  } else {
    throw std::invalid_argument("packing on n > 512 needs a lambda hint");
  }
  if (lambda0 < 1) throw std::runtime_error("packed graph has a zero s-cut");

  const double eps = opts.eps;
  const double omega = 1.0 / static_cast<double>(w_min);
  const double gamma_hat = 1.0 / static_cast<double>(lambda0);
  const double denom = (1 + eps) * std::log1p(eps) - eps;
  long long iters_bound = static_cast<long long>(
      std::ceil((1 + eps) * omega * std::log(std::max(2, m)) / (gamma_hat * denom)));
  iters_bound = std::max<long long>(1, iters_bound);
  if (iters_bound > opts.max_iters)
    throw std::runtime_error("packing iteration bound " + std::to_string(iters_bound) +
                             " exceeds max_iters guard");

  Packing packing;
  packing.lambda0 = lambda0;
  packing.edge_use.assign(m, 0);

  std::vector<double> y(m, 1.0);
  std::vector<double> cost(m);
  std::unordered_map<std::uint64_t, std::vector<int>> seen_trees;

  for (long long t = 1; t <= iters_bound; ++t) {
    for (int e = 0; e < m; ++e)
      cost[e] = y[e] / static_cast<double>(g.edge(e).weight);
    Arborescence tree = min_cost_arborescence(g, cost);

    std::uint64_t h = tree_hash(tree);
    int idx = -1;
    for (int cand : seen_trees[h])
      if (packing.trees[cand] == tree) {
        idx = cand;
        break;
      }
    if (idx < 0) {
      idx = static_cast<int>(packing.trees.size());
      packing.trees.push_back(tree);
      seen_trees[h].push_back(idx);
    }
    packing.iteration_tree.push_back(idx);

    for (int v = 0; v < n; ++v) {
      int e = packing.trees[idx].parent_edge[v];
      if (e < 0) continue;
      ++packing.edge_use[e];
      double f = 1.0 / static_cast<double>(g.edge(e).weight);
      y[e] *= 1.0 + eps * f / omega;
    }
    // Keep y in double range; common rescaling leaves the argmin intact.
    double ymax = *std::max_element(y.begin(), y.end());
    if (ymax > 1e250)
      for (double& v : y) v /= ymax;

    packing.iterations = t;
    if (opts.early_exit && (t % opts.check_interval == 0 || t == iters_bound)) {
      // Exact and conservative: floor(...) never exceeds (1+eps), so an
      // early exit always satisfies the duality certificate.
      long long num = static_cast<long long>(std::floor((1 + eps) * 1e9));
      if (packing.gamma_bar_at_most(g, num, 1000000000LL, lambda0)) break;
    }
  }
  packing.gamma_bar = max_load(packing.edge_use, g, packing.iterations);
  return packing;
}

std::vector<int> sample_arborescences(const Packing& p, int count, SplitRng& rng) {
  if (count < 0) throw std::invalid_argument("negative sample count");
  if (p.iterations == 0 || p.iteration_tree.empty())
    throw std::invalid_argument("cannot sample from an empty packing");
  std::vector<int> picks;
  picks.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint64_t at = rng.next_below(static_cast<std::uint64_t>(p.iteration_tree.size()));
    picks.push_back(p.iteration_tree[static_cast<std::size_t>(at)]);
  }
  return picks;
}

int crossing_count(const Arborescence& t, const std::vector<char>& source_mask) {
  if (static_cast<int>(source_mask.size()) != t.size())
    throw std::invalid_argument("mask size mismatch");
  if (!source_mask[t.root]) throw std::invalid_argument("source side must contain the root");
  int crossings = 0;
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    if (source_mask[t.parent[v]] && !source_mask[v]) ++crossings;
  }
  return crossings;
}

int crossing_count(const Arborescence& t, std::span<const int> source_side) {
  return crossing_count(t, make_mask(t.size(), source_side));
}

}  // namespace dirmincut
