#pragma once

#include <optional>
#include <vector>

#include "dirmincut/digraph.hpp"
#include "dirmincut/rng.hpp"
#include "dirmincut/vertex_graph.hpp"

namespace dirmincut {

struct Arborescence;  // arborescence.hpp

/// Outcome of a repeated randomized experiment. Confidence limits use the
/// exact binomial (Clopper-Pearson) tail, suitable for small trial counts.
struct TrialReport {
  long long trials = 0;
  long long successes = 0;
  std::vector<double> per_trial_values;
  double confidence_bound = 1.0;

  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

/// Exact one-sided Clopper-Pearson limits on a binomial proportion.
double clopper_pearson_upper(long long successes, long long trials, double alpha);
double clopper_pearson_lower(long long successes, long long trials, double alpha);

/// Exhaustive minimum over all nonempty sink sets T, 2^(n-1) subsets.
/// Ties broken toward the lexicographically smallest sink set. n <= 20.
CutResult brute_force_s_mincut(const WeightedDigraph& g);

/// Exhaustive global minimum over all ordered bipartitions of V.
CutResult brute_force_global_mincut(const WeightedDigraph& g);

/// Exhaustive minimum over tri-partitions (L, X, R). Rooted when rooted
/// is set (root in L); global otherwise. Returns nullopt when no valid
/// cut exists (the root dominates every vertex). n <= 14.
std::optional<VertexCutResult> brute_force_vertex_cut(const VertexWeightedDigraph& g,
                                                      bool rooted = true);

/// Minimum (root,t)-vertex cut restricted to sink components of at most
/// max_sink vertices; nullopt if no such cut exists.
std::optional<VertexCutResult> brute_force_vertex_cut_to(
    const VertexWeightedDigraph& g, int t, int max_sink);

/// All spanning s-arborescences by exhaustive parent-choice product. n <= 6.
std::vector<Arborescence> brute_force_arborescences(const WeightedDigraph& g);

struct SparsifierTrialParams {
  Weight lambda_guess = 1;
  long long k = 1;
  double eps = 0.25;
  int variant = 0;  // 0 = rounding, 1 = binomial
};

/// Runs the chosen sparsifier repeatedly on a small graph and compares,
/// per sink set, the empirical frequency of concentration failures with
/// the analytic Chernoff-style bound for that set. Also verifies per-edge
/// unbiasedness of the rounding step. successes = trials with no
/// structural violation; confidence_bound = the largest per-set 95%
/// Clopper-Pearson lower limit among sets whose analytic bound is < 1
/// (the claim fails when that limit clears the bound).
struct ConcentrationReport {
  TrialReport report;
  bool bounds_respected = true;    // no per-set 95% lower CL above its analytic bound
  bool structure_ok = true;        // weights integral/>=1, degree caps, no edges into root
  double max_mean_relative_error = 0.0;
  long long informative_sets = 0;  // sets with analytic bound < 1
};
ConcentrationReport sparsifier_concentration_trial(const WeightedDigraph& g,
                                                   const SparsifierTrialParams& params,
                                                   long long trials, SplitRng& rng);

/// Per trial: sparsify, pack, sample one arborescence, record whether the
/// planted mincut 1-respects it. successes counts 1-respecting draws.
TrialReport one_respect_probability_trial(const WeightedDigraph& g,
                                          std::span<const int> planted_sink,
                                          long long k, double eps, long long trials,
                                          SplitRng& rng);

}  // namespace dirmincut
