#include "dirmincut/sparsifier.hpp"

#include <cmath>
#include <stdexcept>

namespace dirmincut {
namespace {

void check_params(Weight lambda_guess, long long k, double eps) {
  if (lambda_guess < 1) throw std::invalid_argument("lambda guess must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
}

double log_n(const WeightedDigraph& g) {
  return std::log(std::max(2, g.vertex_count()));
}

}  // namespace

RoundingParams rounding_params(const WeightedDigraph& g, Weight lambda_guess,
                               long long k, double eps, const SparsifyConfig& cfg) {
  check_params(lambda_guess, k, eps);
  RoundingParams p;
  double tau0 = std::floor(cfg.c_tau * eps * eps * static_cast<double>(lambda_guess) /
                           (static_cast<double>(k) * log_n(g)));
  p.tau0 = std::max<std::int64_t>(1, static_cast<std::int64_t>(tau0));
  // tau = lambda/q <= tau0 keeps lambda an exact multiple of tau.
  p.q = (lambda_guess + p.tau0 - 1) / p.tau0;
  p.identity = (p.q == lambda_guess);
  double star = eps * static_cast<double>(p.q) / (2.0 * static_cast<double>(k));
  p.star_weight = std::max<Weight>(1, static_cast<Weight>(std::llround(star)));
  p.threshold = static_cast<long long>(
      std::ceil(cfg.c_delta * static_cast<double>(k) * log_n(g) / (eps * eps)));
  return p;
}

std::pair<WeightedDigraph, Scale> skeleton_sparsify(const WeightedDigraph& g,
                                                    Weight lambda_guess, long long k,
                                                    double eps, SplitRng& rng,
                                                    const SparsifyConfig& cfg) {
  RoundingParams p = rounding_params(g, lambda_guess, k, eps, cfg);
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + n);
  for (const Edge& e : g.edges()) {
    // Weight x*tau + y rounds to (x+1)*tau with probability y/tau, in
    // exact integer arithmetic: tau = lambda/q, so y/tau = (w*q mod
    // lambda) / lambda.
    __int128 num = static_cast<__int128>(e.weight) * p.q;
    Weight x = static_cast<Weight>(num / lambda_guess);
    Weight rem = static_cast<Weight>(num % lambda_guess);
    Weight w = x;
    if (rem > 0 && rng.next_below(static_cast<std::uint64_t>(lambda_guess)) <
                       static_cast<std::uint64_t>(rem))
      w = x + 1;
    if (w > 0) edges.push_back({e.tail, e.head, w});
  }
  for (int v = 0; v < n; ++v)
    if (v != g.root()) edges.push_back({g.root(), v, p.star_weight});
  Scale scale{lambda_guess, p.q};
  return {WeightedDigraph::build(n, g.root(), edges), scale};
}

SparsifiedGraph contract_high_indegree(const WeightedDigraph& g, long long threshold) {
  if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
  std::vector<int> contracted;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == g.root()) continue;
    if (static_cast<long long>(g.in_edges(v).size()) >= threshold) contracted.push_back(v);
  }
  Contraction c = contract_into_root(g, contracted);
  SparsifiedGraph out;
  out.graph = std::move(c.graph);
  out.vertex_map = std::move(c.vertex_map);
  return out;
}

Weight binomial_alpha(int n, double eps) {
  double eps_prime = eps / 2.0;
  return static_cast<Weight>(
      std::ceil(6.0 * std::log(std::max(2, n)) / (eps_prime * eps_prime)));
}

double binomial_theta(double eps) {
  double eps_prime = eps / 2.0;
  return eps_prime * eps_prime * eps_prime / 12.0;
}

SparsifiedGraph binomial_sparsify(const WeightedDigraph& g, Weight lambda_guess,
                                  long long k, double eps, SplitRng& rng,
                                  const SparsifyConfig& cfg) {
  check_params(lambda_guess, k, eps);
  const int n = g.vertex_count();

  if (lambda_guess <= 2 * k && !cfg.binomial_force_full) {
    SparsifiedGraph out;
    out.graph = g;
    out.scale = {1, 1};
    out.vertex_map.resize(n);
    for (int v = 0; v < n; ++v) out.vertex_map[v] = v;
    out.lambda_guess = lambda_guess;
    out.k = k;
    out.eps = eps;
    return out;
  }

  const bool identity_p = lambda_guess <= k;  // p = min(k/lambda, 1) = 1
  const double p = identity_p ? 1.0
                              : static_cast<double>(k) / static_cast<double>(lambda_guess);
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + n);
  for (const Edge& e : g.edges()) {
    Weight w = identity_p ? e.weight : rng.binomial(e.weight, p, cfg.exact_binomial);
    if (w > 0) edges.push_back({e.tail, e.head, w});
  }
  const Weight alpha = binomial_alpha(n, eps);
  for (int v = 0; v < n; ++v)
    if (v != g.root()) edges.push_back({g.root(), v, alpha});
  WeightedDigraph h = WeightedDigraph::build(n, g.root(), edges);

  SparsifiedGraph out = contract_high_indegree(h, 3 * k + 1);
  // Edges headed to the root are removed whether or not anything was
  // contracted; they never participate in a rooted cut.
  {
    std::vector<Edge> kept;
    kept.reserve(out.graph.edges().size());
    for (const Edge& e : out.graph.edges())
      if (e.head != out.graph.root()) kept.push_back(e);
    if (kept.size() != out.graph.edges().size())
      out.graph = WeightedDigraph::build(out.graph.vertex_count(), out.graph.root(), kept);
  }
  if (identity_p) {
    out.scale = {1, 1};
  } else {
    out.scale = {lambda_guess, static_cast<std::int64_t>(k)};  // 1/p
  }
  out.lambda_guess = lambda_guess;
  out.k = k;
  out.eps = eps;
  return out;
}

SparsifiedGraph partial_sparsify(const WeightedDigraph& g, Weight lambda_guess,
                                 long long k, double eps, SplitRng& rng,
                                 SparsifyVariant variant, const SparsifyConfig& cfg) {
  switch (variant) {
    case SparsifyVariant::kBinomial:
      return binomial_sparsify(g, lambda_guess, k, eps, rng, cfg);
    case SparsifyVariant::kRounding: {
      RoundingParams p = rounding_params(g, lambda_guess, k, eps, cfg);
      auto [g1, scale] = skeleton_sparsify(g, lambda_guess, k, eps, rng, cfg);
      SparsifiedGraph out = contract_high_indegree(g1, p.threshold);
      out.scale = scale;
      out.lambda_guess = lambda_guess;
      out.k = k;
      out.eps = eps;
      return out;
    }
  }
  throw std::invalid_argument("unknown sparsifier variant");
}

}  // namespace dirmincut
