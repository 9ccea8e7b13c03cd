#pragma once

#include <utility>
#include <vector>

#include "dirmincut/digraph.hpp"
#include "dirmincut/rng.hpp"

namespace dirmincut {

/// "Sufficiently small/large" constants, pinned and exposed so tests can
/// tighten or loosen them.
struct SparsifyConfig {
  double c_tau = 1.0 / 64;
  double c_delta = 64;
  /// Force exact Bernoulli summation inside binomial sampling.
  bool exact_binomial = false;
  /// Run the full binomial construction even on the lambda <= 2k fast
  /// path (test hook; the fast path normally returns the input graph).
  bool binomial_force_full = false;
};

enum class SparsifyVariant { kRounding, kBinomial };

/// Exact rational scale factor mapping sparsified weights back to the
/// input scale (tau for the rounding variant, 1/p for the binomial one).
struct Scale {
  std::int64_t num = 1;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct SparsifiedGraph {
  WeightedDigraph graph;
  Scale scale;
  /// input id -> sparsified id; contracted vertices map to the root.
  std::vector<int> vertex_map;
  Weight lambda_guess = 1;
  long long k = 1;
  double eps = 0.25;
};

/// Randomized rounding to multiples of tau, star overlay of weight
/// eps*lambda/2k per non-root vertex, then division by tau. Weights in
/// the result are integers >= 1. tau is returned as the exact rational
/// lambda_guess / q (tau = 1 degenerates to identity rounding).
std::pair<WeightedDigraph, Scale> skeleton_sparsify(const WeightedDigraph& g,
                                                    Weight lambda_guess, long long k,
                                                    double eps, SplitRng& rng,
                                                    const SparsifyConfig& cfg = {});

/// Single pass: every non-root vertex whose unweighted in-degree is at
/// least threshold is contracted into the root (contraction never raises
/// a surviving vertex's in-degree, so one pass reaches the fixpoint).
SparsifiedGraph contract_high_indegree(const WeightedDigraph& g, long long threshold);

/// Binomial resampling B(w, p) with p = min(k/lambda, 1), star overlay of
/// multiplier alpha = ceil(6 ln n / eps'^2), contraction of vertices with
/// in-degree > 3k. lambda <= 2k short-circuits to the input graph.
SparsifiedGraph binomial_sparsify(const WeightedDigraph& g, Weight lambda_guess,
                                  long long k, double eps, SplitRng& rng,
                                  const SparsifyConfig& cfg = {});

SparsifiedGraph partial_sparsify(const WeightedDigraph& g, Weight lambda_guess,
                                 long long k, double eps, SplitRng& rng,
                                 SparsifyVariant variant,
                                 const SparsifyConfig& cfg = {});

/// Internal parameters, exposed for tests and for the driver's
/// guess-deduplication.
struct RoundingParams {
  std::int64_t tau0 = 1;     // integer grid before the divisibility adjustment
  std::int64_t q = 1;        // lambda_guess = q * tau exactly
  Weight star_weight = 1;    // scaled star edge weight, >= 1
  long long threshold = 1;   // in-degree contraction threshold
  bool identity = true;      // tau == 1, rounding is the identity
};
RoundingParams rounding_params(const WeightedDigraph& g, Weight lambda_guess,
                               long long k, double eps, const SparsifyConfig& cfg = {});

/// Star multiplier used by the binomial variant.
Weight binomial_alpha(int n, double eps);
/// Size fraction theta = (eps/2)^3 / 12 below which sink sets are in the
/// binomial variant's concentration regime. Exposed for inspection; no
/// runtime behavior depends on it.
double binomial_theta(double eps);

}  // namespace dirmincut
