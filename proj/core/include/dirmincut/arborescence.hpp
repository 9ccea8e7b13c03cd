#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dirmincut/digraph.hpp"
#include "dirmincut/maxflow.hpp"
#include "dirmincut/rng.hpp"

namespace dirmincut {

/// Spanning out-tree rooted at the host graph's root, stored as a parent
/// map. parent[root] = -1. parent_edge holds the host edge id when the
/// tree came from that graph (-1 when the edge is synthetic, e.g. a tree
/// read from a file or packed on a different graph).
struct Arborescence {
  int root = 0;
  std::vector<int> parent;
  std::vector<int> parent_edge;

  int size() const { return static_cast<int>(parent.size()); }
  bool operator==(const Arborescence&) const = default;
};

/// Structural validity: n vertices, exactly n-1 parent edges forming an
/// out-tree rooted at root. Does not require edges to exist in any graph.
bool valid_arborescence(const Arborescence& t);

/// Minimum-cost spanning s-arborescence (Chu-Liu/Edmonds with explicit
/// cycle contraction, O(mn)). cost supplies per-edge nonnegative costs;
/// graph weights are ignored. Ties break toward the lowest edge id.
/// Throws when some vertex is unreachable from the root.
Arborescence min_cost_arborescence(const WeightedDigraph& g, std::span<const double> cost);

/// Fractional arborescence packing produced by multiplicative weights.
/// The average of the per-iteration trees has load
/// (use count / iterations) / w(e) on each edge; gamma_bar is the maximum
/// load, and the packing scaled by 1/gamma_bar has value iterations-many
/// trees worth 1/gamma_bar >= lambda0/(1+eps).
struct Packing {
  std::vector<Arborescence> trees;   // distinct trees seen
  std::vector<int> iteration_tree;   // per-iteration index into trees
  std::vector<long long> edge_use;   // per host edge, total use count
  long long iterations = 0;
  double gamma_bar = 0.0;
  Weight lambda0 = 0;  // reference s-mincut of the packed graph

  /// Exact check that every edge load under the 1/gamma_bar scaling is at
  /// most 1, i.e. gamma_bar is genuinely the maximum load.
  bool scaled_loads_within_one(const WeightedDigraph& g) const;
  /// Exact comparison gamma_bar <= (1+eps)/lambda, done in integers.
  bool gamma_bar_at_most(const WeightedDigraph& g, long long num, long long den,
                         Weight lambda) const;
};

struct PackOptions {
  double eps = 0.1;
  long long max_iters = 1 << 20;
  /// Stop as soon as the duality certificate gamma_bar <= (1+eps)/lambda0
  /// holds; the iteration bound guarantees it triggers by N.
  bool early_exit = true;
  long long check_interval = 16;
  /// Used for the iteration bound when the graph is too large for the
  /// n-1-maxflow reference mincut (n > 512).
  std::optional<Weight> lambda_hint;
};

/// Young-style fractional packing: y starts at all-ones, each iteration
/// takes the single min-cost arborescence under costs y_e / w(e) and
/// multiplies y_e by (1 + eps * f_e / omega) on its edges, with
/// f_e = 1/w(e) and width omega = 1/w_min. Runs
/// N = ceil((1+eps) * omega * ln m / (gamma_hat * ((1+eps)ln(1+eps)-eps)))
/// iterations, gamma_hat = 1/lambda0. Requires all weights >= 1 and the
/// root to reach every vertex.
Packing pack_arborescences(const WeightedDigraph& g, const PackOptions& opts = {},
                           MaxflowCounter* reference_counter = nullptr);

/// count independent uniform draws over the packing's iterations;
/// returns indices into Packing::trees.
std::vector<int> sample_arborescences(const Packing& p, int count, SplitRng& rng);

/// Number of tree edges leaving S (tail in S, head outside). The cut with
/// source side S 1-respects the tree iff this equals 1. Root must be in S.
int crossing_count(const Arborescence& t, const std::vector<char>& source_mask);
int crossing_count(const Arborescence& t, std::span<const int> source_side);

}  // namespace dirmincut
