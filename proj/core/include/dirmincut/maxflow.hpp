#pragma once

#include <vector>

#include "dirmincut/digraph.hpp"

namespace dirmincut {

/// An s-t maximum flow: per-edge flow aligned with the host graph's edge
/// list. Capacity and conservation constraints hold by construction.
struct FlowResult {
  Weight value = 0;
  std::vector<Weight> edge_flow;
  int source = 0;
  int sink = 0;
};

/// The pipeline treats maxflow as a black-box subroutine; drivers count
/// invocations against the analytic call-count bounds. Calls are
/// categorized so oracle-style reference computations don't pollute the
/// pipeline ledger.
struct MaxflowCounter {
  long long calls = 0;
};

/// Dinic's algorithm on integer capacities. Deterministic for a fixed
/// graph. Capacities of kInfWeight behave as infinite; the returned value
/// saturates at kInfWeight if no finite cut separates source from sink.
FlowResult max_flow(const WeightedDigraph& g, int source, int sink,
                    MaxflowCounter* counter = nullptr);

/// Vertices that can reach the sink in the residual graph of a maximum
/// flow; the complement's out-cut equals the flow value. Throws if the
/// flow is not maximal (an augmenting path still exists).
std::vector<int> min_cut_sink_side(const WeightedDigraph& g, const FlowResult& flow);

/// Exact s-mincut by n-1 maxflow calls (the mid-scale oracle).
CutResult reference_s_mincut(const WeightedDigraph& g, MaxflowCounter* counter = nullptr);

}  // namespace dirmincut
