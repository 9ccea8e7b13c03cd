#pragma once

#include <optional>
#include <vector>

#include "dirmincut/digraph.hpp"
#include "dirmincut/maxflow.hpp"
#include "dirmincut/rng.hpp"
#include "dirmincut/sparsifier.hpp"

namespace dirmincut {

struct DriverConfig {
  /// Case-split threshold; 0 resolves to ceil(m^(1/3) + sqrt(n)).
  long long k = 0;
  /// Approximation parameter for approx_s_mincut.
  double eps = 0.25;
  std::uint64_t seed = 0xD1CE;
  /// Arborescences sampled per lambda guess; 0 resolves to ceil(2 ln n).
  int trees_per_guess = 0;
  SparsifyVariant variant = SparsifyVariant::kRounding;
  /// Iteration cap handed to the packing; guesses whose bound exceeds it
  /// are skipped (the bracketing guess always fits at desk scale).
  std::optional<long long> maxflow_budget;
  /// Test hook: the balanced case samples every non-root vertex once.
  bool balanced_exhaustive = false;
  SparsifyConfig sparsify;
  double pack_eps = 0.1;
};

/// Pipeline maxflow calls, categorized. reference_calls covers the n-1
/// maxflow reference mincut run inside the packing (instrumentation, not
/// part of the algorithm's F(m,n) budget).
struct DriverStats {
  long long balanced_calls = 0;
  long long one_respect_calls = 0;
  long long reference_calls = 0;
  long long lambda_guesses_run = 0;
  long long lambda_guesses_skipped = 0;
};

long long auto_k(const WeightedDigraph& g);

/// Powers of two from 1 up to 2^ceil(log2 W); contains a lambda guess
/// with lambda <= guess <= 2*lambda for every lambda in [1, W].
std::vector<Weight> estimate_lambda_guesses(const WeightedDigraph& g);

/// Case |T*| > k: sample ceil((n/k) * 2 ln n) sinks with replacement and
/// take the best s-t mincut.
CutResult balanced_case(const WeightedDigraph& g, long long k, SplitRng& rng,
                        DriverStats* stats = nullptr, bool exhaustive = false);

/// Case |T*| <= k: sparsify with this lambda guess, contract the input
/// accordingly, pack arborescences in the sparsifier, and run the
/// one-respecting solver on the contracted original-weight graph for each
/// sampled tree. nullopt when the guess was hopeless (unreachable
/// sparsifier or oversized packing bound).
std::optional<CutResult> unbalanced_case(const WeightedDigraph& g, long long k,
                                         Weight lambda_guess, const DriverConfig& cfg,
                                         SplitRng& rng, DriverStats* stats = nullptr);

/// Exact s-mincut whp: minimum over the balanced case and every lambda
/// guess of the unbalanced case. Every returned cut is re-measured in g.
CutResult exact_s_mincut(const WeightedDigraph& g, const DriverConfig& cfg = {},
                         DriverStats* stats = nullptr);

/// min over root-side orientations: exact_s_mincut on g and on reverse(g)
/// from vertex 0, the reversed result reported with sides swapped back.
CutResult global_mincut(const WeightedDigraph& g, const DriverConfig& cfg = {},
                        DriverStats* stats = nullptr);

/// (1+eps)-approximate s-mincut: the same two-case structure with every
/// maxflow run inside the sparsifier, over paired (k, lambda) guesses.
/// Returned values are re-measured in g, so the certificate is exact.
CutResult approx_s_mincut(const WeightedDigraph& g, double eps,
                          const DriverConfig& cfg = {}, DriverStats* stats = nullptr);

}  // namespace dirmincut
