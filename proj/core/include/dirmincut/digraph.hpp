#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dirmincut {

using Weight = std::int64_t;

/// Sentinel for "infinite" capacity. Chosen so that sums with real weights
/// (total weight < 2^62) cannot overflow 64-bit arithmetic.
inline constexpr Weight kInfWeight = Weight{1} << 62;

struct Edge {
  int tail = 0;
  int head = 0;
  Weight weight = 0;
};

/// Edge-weighted directed multigraph with a distinguished root vertex.
/// Immutable after construction; safe to share read-only across threads.
/// Normalization at build time drops self-loops (they never cross a cut)
/// and zero-weight edges; parallel edges are kept.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  /// Throws std::invalid_argument on out-of-range ids or negative weights,
  /// std::overflow_error if the total weight leaves no summation headroom.
  static WeightedDigraph build(int n, int root, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int root() const { return root_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  /// Edge ids leaving / entering v.
  std::span<const int> out_edges(int v) const { return out_adj_[v]; }
  std::span<const int> in_edges(int v) const { return in_adj_[v]; }
  Weight total_weight() const { return total_weight_; }

  bool structurally_equal(const WeightedDigraph& other) const;

 private:
  int n_ = 0;
  int root_ = 0;
  Weight total_weight_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_adj_;
  std::vector<std::vector<int>> in_adj_;
};

/// Same graph with a different root.
WeightedDigraph with_root(const WeightedDigraph& g, int root);

/// Weight of edges leaving U (tail in U, head outside). U must be a
/// nonempty proper subset of V.
Weight out_cut_value(const WeightedDigraph& g, const std::vector<char>& mask);
Weight out_cut_value(const WeightedDigraph& g, std::span<const int> u);
/// Weight of edges entering U; equals out_cut_value(reverse(g), U).
Weight in_cut_value(const WeightedDigraph& g, const std::vector<char>& mask);
Weight in_cut_value(const WeightedDigraph& g, std::span<const int> u);

std::vector<char> make_mask(int n, std::span<const int> ids);

WeightedDigraph reverse(const WeightedDigraph& g);

/// Vertices reachable from the root along directed edges.
std::vector<char> reachable_from_root(const WeightedDigraph& g);

struct Contraction {
  WeightedDigraph graph;
  /// input id -> id in the contracted graph (contracted vertices map to
  /// the new root id).
  std::vector<int> vertex_map;
};

/// Merge every vertex of X into the root. With nonempty X, edges whose
/// head lands on the root are removed along with self-loops; an empty X
/// returns the graph unchanged. Throws if X contains the root.
Contraction contract_into_root(const WeightedDigraph& g, std::span<const int> x);

/// A rooted cut: the sink-side vertex set plus its in-cut value, tagged
/// with the graph the value was measured in and the pipeline that found it.
struct CutResult {
  std::vector<int> sink_side;  // sorted, never contains the root
  Weight value = kInfWeight;
  std::string graph_tag;
  std::string witness_origin;
};

}  // namespace dirmincut
