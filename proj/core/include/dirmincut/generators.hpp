#pragma once

#include <optional>

#include "dirmincut/digraph.hpp"
#include "dirmincut/rng.hpp"
#include "dirmincut/vertex_graph.hpp"

namespace dirmincut {

/// Random weighted digraph: m arcs with endpoints uniform (no self-loops),
/// weights uniform in [1, max_weight]. Root 0. Reachability not enforced.
WeightedDigraph gen_erdos(int n, int m, Weight max_weight, SplitRng& rng);

/// Instance with a uniquely planted unbalanced s-mincut: the sink side
/// has sink_size vertices and in-cut exactly lambda; every other sink set
/// costs at least margin * lambda by construction (heavy root edges
/// outside the sink, a heavy cycle inside it).
struct PlantedCut {
  WeightedDigraph graph;
  CutResult answer;
};
PlantedCut gen_planted_unbalanced(int n, int sink_size, Weight lambda, SplitRng& rng,
                                  Weight margin = 10);

/// Vertex-weighted instance with a planted tri-partition (L, X, R):
/// the separator X is light, everything else heavy, only X feeds R.
struct PlantedVertexCut {
  VertexWeightedDigraph graph;
  VertexCutResult answer;
};
PlantedVertexCut gen_planted_vertex(int n, int separator_size, int sink_size,
                                    Weight separator_weight, SplitRng& rng);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 with the given weights pattern
/// repeated; root 0.
WeightedDigraph gen_cycle(int n, Weight weight);

/// Complete digraph (both directions) with unit weights; root 0.
WeightedDigraph gen_clique(int n);

/// Unit-weight complete vertex digraph, all vertex weights 1.
VertexWeightedDigraph gen_vertex_clique(int n);
VertexWeightedDigraph gen_vertex_cycle(int n);
/// Cycle with both orientations of every arc (vertex connectivity 2 for
/// n >= 4), unit weights.
VertexWeightedDigraph gen_vertex_bidirected_cycle(int n);
/// Random vertex-weighted digraph with arc probability p.
VertexWeightedDigraph gen_vertex_random(int n, double arc_prob, Weight max_weight,
                                        SplitRng& rng);

}  // namespace dirmincut
