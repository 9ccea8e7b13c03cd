#include "dirmincut/vertex_cut.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dirmincut {
namespace {

double log_n(int n) { return std::log(std::max(2, n)); }

void check_params(Weight kappa, long long k, double eps) {
  if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
}

/// Re-measure a sink component in the input graph: separator is its
/// outside in-neighborhood, value the sum of those effective weights.
VertexCutResult remeasure_impl(const VertexWeightedDigraph& g, std::vector<int> sink,
                               bool root_infinite) {
  std::sort(sink.begin(), sink.end());
  VertexCutResult out;
  std::vector<char> in_sink(g.n, 0);
  for (int v : sink) in_sink[v] = 1;
  std::vector<char> in_sep(g.n, 0);
  for (auto [t, h] : g.arcs)
    if (in_sink[h] && !in_sink[t]) in_sep[t] = 1;
  Weight value = 0;
  for (int v = 0; v < g.n; ++v)
    if (in_sep[v]) {
      out.separator.push_back(v);
      value += root_infinite ? g.effective_weight(v) : g.weight[v];
      if (value >= kInfWeight) value = kInfWeight;
    }
  out.sink_component = std::move(sink);
  out.value = value;
  return out;
}

VertexCutResult remeasure(const VertexWeightedDigraph& g, std::vector<int> sink) {
  return remeasure_impl(g, std::move(sink), /*root_infinite=*/true);
}

/// Global cuts have no privileged vertex; separators use raw weights.
VertexCutResult remeasure_global(const VertexWeightedDigraph& g, std::vector<int> sink) {
  return remeasure_impl(g, std::move(sink), /*root_infinite=*/false);
}

long long sample_count(std::size_t universe, long long per, int n) {
  double c = (static_cast<double>(universe) / static_cast<double>(per)) * 2.0 * log_n(n);
  return std::max<long long>(1, static_cast<long long>(std::ceil(c)));
}

}  // namespace

VertexSparsified vertex_sparsify(const VertexWeightedDigraph& g, Weight kappa,
                                 long long k, double eps, SplitRng& rng,
                                 const VertexCutConfig& cfg) {
  check_params(kappa, k, eps);
  const int n = g.n;

  VertexSparsified out;
  out.tau = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(cfg.c_tau * eps * eps *
                                              static_cast<double>(kappa) /
                                              (static_cast<double>(k) * log_n(n)))));
  out.degree_cap = static_cast<long long>(
      std::ceil(cfg.c_delta * static_cast<double>(k) * log_n(n) / (eps * eps)));
  out.weight_cap = static_cast<Weight>(
      std::ceil(cfg.c_w * static_cast<double>(k) * log_n(n) / (eps * eps)));

  // Auxiliary weight eps*kappa/2k, rounded to the nearest positive
  // multiple of tau; the delta is recorded for downstream thresholds.
  const double aux_exact = eps * static_cast<double>(kappa) / (2.0 * static_cast<double>(k));
  out.aux_weight = std::max<Weight>(
      1, static_cast<Weight>(std::llround(aux_exact / static_cast<double>(out.tau))));
  out.aux_delta = std::abs(aux_exact - static_cast<double>(out.aux_weight) *
                                           static_cast<double>(out.tau));

  // Step 2: randomized rounding of vertex weights to multiples of tau,
  // expressed directly in scaled units. Root weight is pinned to the cap
  // (its effective weight is infinite wherever cuts are formed).
  std::vector<Weight> weight(n);
  for (int v = 0; v < n; ++v) {
    if (v == g.root) {
      weight[v] = out.weight_cap;
      continue;
    }
    Weight x = g.weight[v] / out.tau;
    Weight rem = g.weight[v] % out.tau;
    if (rem > 0 && rng.next_below(static_cast<std::uint64_t>(out.tau)) <
                       static_cast<std::uint64_t>(rem))
      ++x;
    weight[v] = std::min(x, out.weight_cap);  // step 6 truncation
  }

  // Step 7's in-degrees are taken on the graph state after zero-weight
  // tails lost their out-arcs (step 5) and after the auxiliary arcs
  // (step 3, one extra in-arc per vertex) joined.
  std::vector<long long> indeg(n, 0);
  for (auto [t, h] : g.arcs)
    if (weight[t] > 0) ++indeg[h];
  out.root_edge_added.assign(n, 0);
  for (int v = 0; v < n; ++v)
    if (v != g.root && indeg[v] + 1 >= out.degree_cap) out.root_edge_added[v] = 1;

  // Step 3: auxiliary vertex a_v on a root -> a_v -> v path for every
  // other vertex. Step 7 strips the a_v -> v arc of replaced vertices
  // along with the rest of their in-arcs.
  out.aux_of.assign(n, -1);
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.arcs.size() + 2 * (n - 1));
  int next_id = n;
  for (int v = 0; v < n; ++v) {
    if (v == g.root) continue;
    int a = next_id++;
    out.aux_of[v] = a;
    weight.push_back(0);
    weight[a] = std::min(out.aux_weight, out.weight_cap);
    arcs.emplace_back(g.root, a);
    if (!out.root_edge_added[v]) arcs.emplace_back(a, v);
  }

  for (auto [t, h] : g.arcs) {
    if (weight[t] == 0) continue;  // step 5
    if (out.root_edge_added[h]) continue;
    arcs.emplace_back(t, h);
  }
  for (int v = 0; v < n; ++v)
    if (out.root_edge_added[v]) arcs.emplace_back(g.root, v);

  out.graph = VertexWeightedDigraph::build(next_id, g.root, arcs, weight);
  return out;
}

VertexCutResult vertex_cut_from_split_flow(const VertexWeightedDigraph& g,
                                           const WeightedDigraph& split,
                                           const FlowResult& flow) {
  // Residual reachability from the source.
  std::vector<std::vector<int>> rout(split.vertex_count());
  for (int e = 0; e < split.edge_count(); ++e) {
    const Edge& ge = split.edge(e);
    if (flow.edge_flow[e] < ge.weight) rout[ge.tail].push_back(ge.head);
    if (flow.edge_flow[e] > 0) rout[ge.head].push_back(ge.tail);
  }
  std::vector<char> reach(split.vertex_count(), 0);
  std::vector<int> stack{flow.source};
  reach[flow.source] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : rout[v])
      if (!reach[u]) {
        reach[u] = 1;
        stack.push_back(u);
      }
  }
  std::vector<int> sink;
  for (int v = 0; v < g.n; ++v)
    if (!reach[split_in(v)] && !reach[split_out(v)]) sink.push_back(v);
  if (sink.empty()) throw std::runtime_error("split flow yields an empty sink component");
  return remeasure(g, std::move(sink));
}

LocalCutStructure::LocalCutStructure(const VertexWeightedDigraph& g, Weight kappa,
                                     long long k, double eps, SplitRng& rng,
                                     const VertexCutConfig& cfg)
    : input_(&g), kappa_(kappa), k_(k), eps_(eps), cfg_(cfg) {
  check_params(kappa, k, eps);
  sp_ = vertex_sparsify(g, kappa, k, eps, rng, cfg);

  search_budget_ = static_cast<long long>(
      std::ceil(cfg.c_search * static_cast<double>(k) * static_cast<double>(k) *
                log_n(g.n) / (eps * eps)));
  flow_threshold_ =
      static_cast<Weight>(std::floor((1.0 + eps / 2.0) * static_cast<double>(kappa) /
                                     static_cast<double>(sp_.tau))) +
      static_cast<Weight>(k) * sp_.aux_weight;

  // Reversed split graph over the sparsifier's original-id vertices.
  // Auxiliary a_v paths collapse to single (v_out, r_in) arcs carrying
  // a_v's weight; everything else keeps infinite connector capacity with
  // the vertex capacity on the internal (v_in, v_out) arc.
  const int n = g.n;
  node_count_ = 2 * n;
  sink_ = split_in(g.root);
  pristine_.assign(node_count_, {});
  internal_arc_.assign(n, -1);
  aux_arc_.assign(n, -1);

  auto add_arc = [&](int from, int to, Weight cap) {
    int fwd = static_cast<int>(pristine_[from].size());
    int bwd = static_cast<int>(pristine_[to].size());
    pristine_[from].push_back({to, cap, bwd});
    pristine_[to].push_back({from, 0, fwd});
    return fwd;
  };

  for (int v = 0; v < n; ++v) {
    Weight cap = v == g.root ? kInfWeight : sp_.graph.weight[v];
    internal_arc_[v] = add_arc(split_in(v), split_out(v), cap);
  }
  // Arcs of the sparsifier among original ids, reversed: (u, v) becomes
  // (v_out, u_in). Arcs touching auxiliary vertices are re-expressed by
  // the shortcut below.
  for (auto [t, h] : sp_.graph.arcs) {
    if (t >= n || h >= n) continue;
    add_arc(split_out(h), split_in(t), kInfWeight);
  }
  // Shortcut (v_out, r_in) with a_v's weight for every v in V'.
  queryable_.assign(n, 0);
  std::vector<char> root_out(n, 0);
  for (auto [t, h] : sp_.graph.arcs)
    if (t == g.root && h < n) root_out[h] = 1;
  for (int v = 0; v < n; ++v) {
    if (v == g.root) continue;
    if (!root_out[v]) queryable_[v] = 1;
    if (sp_.aux_of[v] >= 0 && queryable_[v])
      aux_arc_[v] = add_arc(split_out(v), sink_, sp_.graph.weight[sp_.aux_of[v]]);
  }
  visit_mark_.assign(node_count_, -1);
}

bool LocalCutStructure::find_augmenting_path(int source, std::vector<int>& path_arcs) {
  // Iterative DFS. At a v_in the internal arc is tried first; at a v_out
  // the arc to r_in is tried first, so the search completes as soon as it
  // meets an unsaturated v_in or v_out as in the saturation analysis.
  ++visit_epoch_;
  ++stats_.searches;
  path_arcs.clear();
  long long traversed = 0;

  struct Frame {
    int node;
    int arc_index;
  };
  std::vector<Frame> stack;

  auto ordered_arcs = [&](int node) {
    // Returns a small priority list of arc indices to try first.
    std::vector<int> order;
    order.reserve(arcs_[node].size());
    if (node % 2 == 1) {  // a v_out: try the r_in arc first
      int v = node / 2;
      if (aux_arc_[v] >= 0) order.push_back(aux_arc_[v]);
    } else {  // a v_in: try the internal arc first
      int v = node / 2;
      if (internal_arc_[v] >= 0) order.push_back(internal_arc_[v]);
    }
    for (int i = 0; i < static_cast<int>(arcs_[node].size()); ++i)
      if (order.empty() || i != order[0]) order.push_back(i);
    return order;
  };

  std::vector<std::vector<int>> order_cache(node_count_);
  std::vector<int> parent_arc(node_count_, -1), parent_node(node_count_, -1);

  visit_mark_[source] = visit_epoch_;
  stack.push_back({source, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (order_cache[f.node].empty()) order_cache[f.node] = ordered_arcs(f.node);
    const auto& order = order_cache[f.node];
    if (f.arc_index >= static_cast<int>(order.size())) {
      stack.pop_back();
      continue;
    }
    int arc_idx = order[f.arc_index++];
    const Arc& a = arcs_[f.node][arc_idx];
    ++traversed;
    ++stats_.arcs_traversed;
    if (a.cap <= 0 || visit_mark_[a.to] == visit_epoch_) continue;
    visit_mark_[a.to] = visit_epoch_;
    parent_arc[a.to] = arc_idx;
    parent_node[a.to] = f.node;
    if (a.to == sink_) {
      int node = sink_;
      while (node != source) {
        path_arcs.push_back(parent_arc[node]);
        path_arcs.push_back(parent_node[node]);
        node = parent_node[node];
      }
      stats_.max_search_arcs = std::max(stats_.max_search_arcs, traversed);
      return true;
    }
    stack.push_back({a.to, 0});
  }
  stats_.max_search_arcs = std::max(stats_.max_search_arcs, traversed);
  return false;
}

std::optional<VertexCutResult> LocalCutStructure::query(int t) {
  const VertexWeightedDigraph& g = *input_;
  if (t < 0 || t >= g.n || t == g.root)
    throw std::invalid_argument("query vertex out of range");
  {
    // t must be in the input graph's V'.
    for (auto [tail, head] : g.arcs)
      if (tail == g.root && head == t)
        throw std::invalid_argument("query vertex is an out-neighbor of the root");
  }
  // Vertices that picked up a root edge inside the sparsifier cannot be
  // in any sink component there.
  if (!queryable_[t]) return std::nullopt;

  arcs_ = pristine_;
  const int source = split_out(t);
  Weight flow = 0;
  std::vector<int> path;
  while (find_augmenting_path(source, path)) {
    ++stats_.augmentations;
    // path holds (arc, node) pairs from sink back to source; push 1 unit.
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
      Arc& a = arcs_[path[i + 1]][path[i]];
      a.cap -= 1;
      arcs_[a.to][a.rev].cap += 1;
    }
    ++flow;
    // Once the padded flow clears the threshold, every sink component
    // with at most k vertices costs more than kappa.
    if (flow > flow_threshold_) return std::nullopt;
  }

  // Saturated v_out accounting: flow through each saturated shortcut
  // equals its capacity, so their count is at most flow / aux capacity.
  long long saturated_vouts = 0;
  for (int v = 0; v < g.n; ++v)
    if (aux_arc_[v] >= 0 && arcs_[split_out(v)][aux_arc_[v]].cap == 0) ++saturated_vouts;
  stats_.max_saturated_vouts = std::max(stats_.max_saturated_vouts, saturated_vouts);
  if (saturated_vouts * sp_.aux_weight > flow) stats_.saturation_ledger_ok = false;

  // No augmenting path: the last search's visit marks are the residual
  // reach set. Sink component = vertices whose v_out was reached.
  std::vector<int> sink;
  for (int v = 0; v < g.n; ++v) {
    if (v == g.root) continue;
    if (visit_mark_[split_out(v)] == visit_epoch_) sink.push_back(v);
  }
  if (sink.empty()) throw std::logic_error("local query lost its own source");
  // Natural termination with flow <= threshold: the cut is genuine; its
  // value is re-measured in the input graph.
  return remeasure(g, std::move(sink));
}

std::optional<VertexCutResult> small_sink_vertex_cut(const VertexWeightedDigraph& g,
                                                     Weight kappa, long long k, double eps,
                                                     SplitRng& rng, MaxflowCounter* counter,
                                                     LocalCutStructure::Stats* stats,
                                                     const VertexCutConfig& cfg) {
  check_params(kappa, k, eps);
  std::vector<int> v_prime = g.candidate_sinks();
  if (v_prime.empty()) return std::nullopt;

  std::optional<VertexCutResult> best;
  for (long long budget = 1; budget <= 2 * k; budget *= 2) {
    SplitRng structure_rng = rng.split();
    LocalCutStructure structure(g, kappa, budget, eps, structure_rng, cfg);
    long long samples = sample_count(v_prime.size(), budget, g.n);
    for (long long i = 0; i < samples; ++i) {
      int t = v_prime[rng.next_below(v_prime.size())];
      if (counter) ++counter->calls;
      auto cut = structure.query(t);
      if (cut && (!best || cut->value < best->value)) best = std::move(cut);
    }
    if (stats) {
      stats->searches += structure.stats().searches;
      stats->augmentations += structure.stats().augmentations;
      stats->arcs_traversed += structure.stats().arcs_traversed;
      stats->max_search_arcs =
          std::max(stats->max_search_arcs, structure.stats().max_search_arcs);
      stats->max_saturated_vouts =
          std::max(stats->max_saturated_vouts, structure.stats().max_saturated_vouts);
    }
  }
  return best;
}

std::optional<VertexCutResult> big_sink_vertex_cut(const VertexWeightedDigraph& g,
                                                   Weight kappa, long long k, double eps,
                                                   SplitRng& rng, MaxflowCounter* counter,
                                                   const VertexCutConfig& cfg) {
  check_params(kappa, k, eps);
  std::vector<int> v_prime = g.candidate_sinks();
  if (v_prime.empty()) return std::nullopt;

  VertexSparsified sp = vertex_sparsify(g, kappa, k, eps, rng, cfg);
  WeightedDigraph split = split_graph(sp.graph);

  std::optional<VertexCutResult> best;
  long long samples = sample_count(v_prime.size(), k, g.n);
  for (long long i = 0; i < samples; ++i) {
    int t = v_prime[rng.next_below(v_prime.size())];
    if (sp.root_edge_added[t]) continue;  // no (root,t)-cut exists in the sparsifier
    FlowResult f = max_flow(split, split.root(), split_in(t), counter);
    if (f.value >= kInfWeight) continue;
    VertexCutResult in_sparsifier = vertex_cut_from_split_flow(sp.graph, split, f);
    // Drop auxiliary ids, re-measure in the input graph.
    std::vector<int> sink;
    for (int v : in_sparsifier.sink_component)
      if (v < g.n) sink.push_back(v);
    if (sink.empty()) continue;
    VertexCutResult cut = remeasure(g, std::move(sink));
    if (!best || cut.value < best->value) best = std::move(cut);
  }
  return best;
}

VertexCutResult approx_rooted_vertex_cut(const VertexWeightedDigraph& g, double eps,
                                         SplitRng& rng, MaxflowCounter* counter,
                                         const VertexCutConfig& cfg) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
  std::vector<int> v_prime = g.candidate_sinks();
  if (v_prime.empty()) {
    // The root dominates every vertex: no genuine cut exists. Report the
    // flagged degenerate separator V minus the root and one heaviest
    // vertex.
    VertexCutResult out;
    out.degenerate = true;
    int keep = -1;
    for (int v = 0; v < g.n; ++v)
      if (v != g.root && (keep < 0 || g.weight[v] > g.weight[keep])) keep = v;
    if (keep < 0) throw std::invalid_argument("graph has no non-root vertex");
    out.sink_component = {keep};
    out.value = 0;
    for (int v = 0; v < g.n; ++v)
      if (v != g.root && v != keep) {
        out.separator.push_back(v);
        out.value += g.weight[v];
      }
    return out;
  }

  const long long small_threshold =
      static_cast<long long>(std::ceil(eps * std::sqrt(static_cast<double>(g.n))));
  Weight total = 0;
  for (int v = 0; v < g.n; ++v)
    if (v != g.root) total += g.weight[v];
  total = std::max<Weight>(1, total);

  std::optional<VertexCutResult> best;
  for (long long k = 1; k <= 2 * static_cast<long long>(v_prime.size()); k *= 2) {
    for (Weight kappa = 1;; kappa *= 2) {
      SplitRng guess_rng = rng.split();
      std::optional<VertexCutResult> cut;
      if (k <= std::max<long long>(1, small_threshold)) {
        cut = small_sink_vertex_cut(g, kappa, k, eps, guess_rng, counter, nullptr, cfg);
      } else {
        cut = big_sink_vertex_cut(g, kappa, k, eps, guess_rng, counter, cfg);
      }
      if (cut && (!best || cut->value < best->value)) best = std::move(cut);
      if (kappa >= total) break;
    }
  }
  if (!best) {
    // Guess loops can come up empty on adversarial instances; any
    // singleton of V' is a genuine fallback cut.
    best = remeasure(g, {v_prime.front()});
    for (int t : v_prime) {
      VertexCutResult cand = remeasure(g, {t});
      if (cand.value < best->value) best = std::move(cand);
    }
  }
  return *best;
}

VertexCutResult approx_global_vertex_cut(const VertexWeightedDigraph& g, double eps,
                                         SplitRng& rng, MaxflowCounter* counter,
                                         const VertexCutConfig& cfg) {
  if (g.n < 2) throw std::invalid_argument("global vertex cut needs two vertices");
  VertexWeightedDigraph rev = reverse(g);

  auto rooted_both_ways = [&](int root) {
    VertexWeightedDigraph fwd = g;
    fwd.root = root;
    VertexCutResult best = approx_rooted_vertex_cut(fwd, eps, rng, counter, cfg);
    VertexWeightedDigraph bwd = rev;
    bwd.root = root;
    VertexCutResult rcut = approx_rooted_vertex_cut(bwd, eps, rng, counter, cfg);
    if (!rcut.degenerate) {
      // A reversed tri-partition (L, X, R) is (R, X, L) in g; the new
      // sink component is everything outside R and X, re-measured in the
      // forward orientation.
      std::vector<char> outside(g.n, 1);
      for (int v : rcut.sink_component) outside[v] = 0;
      for (int v : rcut.separator) outside[v] = 0;
      std::vector<int> sink;
      for (int v = 0; v < g.n; ++v)
        if (outside[v]) sink.push_back(v);
      if (!sink.empty()) {
        VertexCutResult mapped = remeasure_global(g, std::move(sink));
        if (best.degenerate || mapped.value < best.value) best = std::move(mapped);
      }
    }
    return best;
  };

  // Initialize with an arbitrary root, then sample roots by weight.
  VertexCutResult best = rooted_both_ways(0);
  Weight w_total = 0;
  std::vector<Weight> prefix(g.n);
  for (int v = 0; v < g.n; ++v) {
    w_total += std::max<Weight>(1, g.weight[v]);
    prefix[v] = w_total;
  }
  Weight kappa_hat = best.degenerate ? w_total - 1 : std::min<Weight>(best.value, w_total - 1);
  double ratio = static_cast<double>(w_total) /
                 std::max<double>(1.0, static_cast<double>(w_total - kappa_hat));
  long long samples = std::max<long long>(
      1, static_cast<long long>(std::ceil(ratio * 2.0 * log_n(g.n))));
  samples = std::min<long long>(samples, 4LL * g.n);

  for (long long i = 0; i < samples; ++i) {
    Weight pick = static_cast<Weight>(rng.next_below(static_cast<std::uint64_t>(w_total)));
    int root = static_cast<int>(
        std::lower_bound(prefix.begin(), prefix.end(), pick + 1) - prefix.begin());
    VertexCutResult cand = rooted_both_ways(root);
    if (cand.degenerate) continue;
    if (best.degenerate || cand.value < best.value) best = std::move(cand);
  }
  return best;
}

}  // namespace dirmincut
