#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dirmincut/digraph.hpp"

namespace dirmincut {

/// Vertex-weighted digraph for vertex-cut computations. Arcs are
/// unweighted; the root's weight is treated as infinite wherever cut
/// values are formed (the root is never part of a separator).
struct VertexWeightedDigraph {
  int n = 0;
  int root = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
  std::vector<Weight> weight;             // per vertex, >= 0

  static VertexWeightedDigraph build(int n, int root,
                                     std::span<const std::pair<int, int>> arcs,
                                     std::span<const Weight> weights);

  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;
  /// V' = V minus the root and its out-neighborhood; the only vertices
  /// that can sit in the sink component of a rooted vertex cut.
  std::vector<int> candidate_sinks() const;
  Weight effective_weight(int v) const { return v == root ? kInfWeight : weight[v]; }
  Weight total_weight() const;
};

/// Sum of effective weights of vertices outside T with an arc into T.
/// Saturates at kInfWeight (in particular when the root itself feeds T).
/// T must be nonempty and must not contain the root.
Weight vertex_in_cut_value(const VertexWeightedDigraph& g, std::span<const int> t);

VertexWeightedDigraph reverse(const VertexWeightedDigraph& g);

/// Tri-partition (L, X, R): root in L, no arc from L to R, value = w(X).
struct VertexCutResult {
  std::vector<int> separator;       // X, sorted
  std::vector<int> sink_component;  // R, sorted, nonempty
  Weight value = kInfWeight;
  bool degenerate = false;  // set when no genuine cut exists (root dominates)
};

/// Standard vertex-capacity reduction: v splits into v_in = 2v and
/// v_out = 2v + 1 joined by an edge of capacity w(v); each arc (u, v)
/// becomes (u_out, v_in) with capacity w(u). Root capacities use the
/// effective (infinite) weight. Result has m + n arcs and root 2*root+1.
WeightedDigraph split_graph(const VertexWeightedDigraph& g);

inline int split_in(int v) { return 2 * v; }
inline int split_out(int v) { return 2 * v + 1; }

}  // namespace dirmincut
