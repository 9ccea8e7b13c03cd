#pragma once

#include <optional>
#include <vector>

#include "dirmincut/maxflow.hpp"
#include "dirmincut/rng.hpp"
#include "dirmincut/vertex_graph.hpp"

namespace dirmincut {

struct VertexCutConfig {
  double c_tau = 1.0 / 64;
  double c_delta = 64;
  double c_w = 64;
  /// Instrumentation bound: per local search, traversed arcs must stay
  /// under c_search * k^2 * ln(n) / eps^2.
  double c_search = 64;
};

/// Output of the seven-step vertex sparsifier. Vertices 0..n-1 keep their
/// ids; auxiliary vertices a_v occupy ids n.. and sit on root -> a_v -> v
/// paths. tau is the integer scale factor; aux_weight is the scaled
/// weight of each a_v with aux_delta = |eps*kappa/2k - aux_weight*tau|
/// recording the rounding adjustment.
struct VertexSparsified {
  VertexWeightedDigraph graph;
  std::int64_t tau = 1;
  std::vector<int> aux_of;  // v -> id of a_v (or -1 for the root)
  Weight aux_weight = 1;    // scaled
  Weight weight_cap = 1;    // scaled truncation bound
  long long degree_cap = 1; // unweighted in-degree replacement threshold
  double aux_delta = 0.0;
  std::vector<char> root_edge_added;  // step-7 replacements, per vertex
};

VertexSparsified vertex_sparsify(const VertexWeightedDigraph& g, Weight kappa,
                                 long long k, double eps, SplitRng& rng,
                                 const VertexCutConfig& cfg = {});

/// Saturation-aware local Ford-Fulkerson over the reversed split
/// sparsifier. Built once per (kappa, k, eps); queries are independent.
class LocalCutStructure {
 public:
  struct Stats {
    long long searches = 0;
    long long augmentations = 0;
    long long arcs_traversed = 0;
    long long max_search_arcs = 0;
    long long max_saturated_vouts = 0;
    /// Saturated v_out count never exceeds floor(flow / aux capacity).
    bool saturation_ledger_ok = true;
  };

  LocalCutStructure(const VertexWeightedDigraph& g, Weight kappa, long long k,
                    double eps, SplitRng& rng, const VertexCutConfig& cfg = {});

  /// Either the sink component of a minimum (root,t)-vertex cut (value
  /// re-measured in the input graph) or nullopt, declaring that every
  /// (root,t)-cut with at most k sink vertices exceeds kappa.
  std::optional<VertexCutResult> query(int t);

  const Stats& stats() const { return stats_; }
  const VertexSparsified& sparsified() const { return sp_; }
  /// Per-search traversal allowance (c_search * k^2 * ln n / eps^2).
  long long search_budget() const { return search_budget_; }
  /// Per-sink-vertex additive padding in input scale: the rounded
  /// auxiliary weight times tau. Returned cuts can sit up to k times this
  /// above the constrained optimum.
  Weight aux_padding() const { return sp_.aux_weight * sp_.tau; }

 private:
  struct Arc {
    int to;
    Weight cap;
    int rev;
  };

  bool find_augmenting_path(int source, std::vector<int>& path_arcs);

  const VertexWeightedDigraph* input_;
  VertexSparsified sp_;
  Weight kappa_;
  long long k_;
  double eps_;
  VertexCutConfig cfg_;
  long long search_budget_ = 0;
  Weight flow_threshold_ = 0;  // scaled; flow beyond it means "exceeds"

  int node_count_ = 0;
  int sink_ = 0;  // r_in
  std::vector<std::vector<Arc>> pristine_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> internal_arc_;  // per vertex: index of (v_in -> v_out) in arcs_[v_in]
  std::vector<int> aux_arc_;       // per vertex: index of (v_out -> r_in), -1 if none
  std::vector<char> queryable_;    // t in the sparsifier's V'
  std::vector<int> visit_mark_;
  int visit_epoch_ = 0;
  Stats stats_;
};

/// Powers-of-two sweep of the sink-size budget with local queries from
/// sampled seeds; nullopt when no candidate cut was found.
std::optional<VertexCutResult> small_sink_vertex_cut(const VertexWeightedDigraph& g,
                                                     Weight kappa, long long k, double eps,
                                                     SplitRng& rng,
                                                     MaxflowCounter* counter = nullptr,
                                                     LocalCutStructure::Stats* stats = nullptr,
                                                     const VertexCutConfig& cfg = {});

/// Sparsify once, then split-graph maxflows from sampled sinks.
std::optional<VertexCutResult> big_sink_vertex_cut(const VertexWeightedDigraph& g,
                                                   Weight kappa, long long k, double eps,
                                                   SplitRng& rng,
                                                   MaxflowCounter* counter = nullptr,
                                                   const VertexCutConfig& cfg = {});

/// (1+eps)-approximate minimum rooted vertex cut: enumerates kappa and k
/// guesses by powers of two, small-sink for k <= ceil(eps*sqrt(n)),
/// big-sink otherwise; every candidate re-measured in g. When the root
/// dominates every vertex no genuine cut exists and a flagged degenerate
/// result is returned.
VertexCutResult approx_rooted_vertex_cut(const VertexWeightedDigraph& g, double eps,
                                         SplitRng& rng, MaxflowCounter* counter = nullptr,
                                         const VertexCutConfig& cfg = {});

/// Weighted root sampling over both orientations of g.
VertexCutResult approx_global_vertex_cut(const VertexWeightedDigraph& g, double eps,
                                         SplitRng& rng, MaxflowCounter* counter = nullptr,
                                         const VertexCutConfig& cfg = {});

/// Sink component and separator extracted from a maximum flow on
/// split_graph(g) from the root to t; value re-measured in g.
VertexCutResult vertex_cut_from_split_flow(const VertexWeightedDigraph& g,
                                           const WeightedDigraph& split,
                                           const FlowResult& flow);

}  // namespace dirmincut
