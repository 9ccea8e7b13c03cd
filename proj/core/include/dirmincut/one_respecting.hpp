#pragma once

#include <utility>
#include <vector>

#include "dirmincut/arborescence.hpp"
#include "dirmincut/digraph.hpp"
#include "dirmincut/maxflow.hpp"

namespace dirmincut {

/// Centroid decomposition of an arborescence. layers[i] (i >= 1) holds
/// the vertex-disjoint subtrees P_i alive at layer i and their centroids
/// C_i; layer 0 is implicitly {root}. The C_i partition V and the number
/// of layers is at most floor(log2 n) + 1.
struct CentroidLayers {
  struct Layer {
    std::vector<std::vector<int>> subtrees;  // P_i
    std::vector<int> centroids;              // C_i, aligned with subtrees
  };
  std::vector<Layer> layers;  // index 0 unused; layers 1..l populated

  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

/// Centroid of a connected component of an undirected tree: a vertex whose
/// removal leaves pieces of at most floor(|U|/2) vertices; ties break
/// toward the smallest id. adj is the undirected tree adjacency.
int find_centroid(const std::vector<std::vector<int>>& adj,
                  const std::vector<int>& component);

CentroidLayers centroid_decomposition(const Arborescence& t);

/// Layer graph G_i on V + super-sink t_i = n:
///   E1: edges with both ends in the same subtree of P_i, original weight;
///   E2: for every other edge (u,v) with v inside some subtree, an edge
///       (root, v) of the same weight (parallel edges accumulate);
///   E3: (u, t_i) for every centroid u of C_i, infinite capacity.
std::pair<WeightedDigraph, int> build_layer_graph(const WeightedDigraph& g,
                                                  const CentroidLayers& layers, int i);

struct OneRespectCandidate {
  int layer = 0;
  int centroid = 0;
  Weight value = 0;
  std::vector<int> sink_side;
};

/// Algorithm: one maxflow per layer; per subtree the flow on the
/// centroid's sink edge is a candidate value and the vertices of the
/// subtree that can reach the centroid in the residual graph form the
/// candidate sink side. If some s-mincut 1-respects the tree the minimum
/// candidate is exactly the s-mincut; otherwise it is still a genuine
/// upper-bound s-cut. The tree must span the graph's vertex set; its
/// edges need not belong to the graph.
CutResult min_one_respecting_cut(const WeightedDigraph& g, const Arborescence& t,
                                 MaxflowCounter* counter = nullptr,
                                 std::vector<OneRespectCandidate>* candidates = nullptr);

}  // namespace dirmincut
