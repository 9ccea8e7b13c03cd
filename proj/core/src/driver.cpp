#include "dirmincut/driver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dirmincut/arborescence.hpp"
#include "dirmincut/one_respecting.hpp"

namespace dirmincut {
namespace {

int resolved_trees_per_guess(const WeightedDigraph& g, const DriverConfig& cfg) {
  if (cfg.trees_per_guess > 0) return cfg.trees_per_guess;
  return static_cast<int>(std::ceil(2.0 * std::log(std::max(2, g.vertex_count()))));
}

long long balanced_sample_count(int n, long long k) {
  double count = (static_cast<double>(n) / static_cast<double>(k)) * 2.0 *
                 std::log(std::max(2, n));
  return std::max<long long>(1, static_cast<long long>(std::ceil(count)));
}

/// Degenerate cut when the root does not reach everything: the
/// unreachable set has in-cut 0.
std::optional<CutResult> reachability_cut(const WeightedDigraph& g) {
  std::vector<char> seen = reachable_from_root(g);
  std::vector<int> unreachable;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) unreachable.push_back(v);
  if (unreachable.empty()) return std::nullopt;
  CutResult cut;
  cut.sink_side = std::move(unreachable);
  cut.value = 0;
  cut.graph_tag = "input";
  cut.witness_origin = "reachability";
  return cut;
}

CutResult remeasured(const WeightedDigraph& g, std::vector<int> sink_side,
                     const char* origin) {
  CutResult cut;
  cut.value = in_cut_value(g, sink_side);
  cut.sink_side = std::move(sink_side);
  cut.graph_tag = "input";
  cut.witness_origin = origin;
  return cut;
}

void take_min(CutResult& best, CutResult&& candidate) {
  if (candidate.value < best.value) best = std::move(candidate);
}

}  // namespace

long long auto_k(const WeightedDigraph& g) {
  double k = std::ceil(std::cbrt(static_cast<double>(g.edge_count())) +
                       std::sqrt(static_cast<double>(g.vertex_count())));
  return std::max<long long>(1, static_cast<long long>(k));
}

std::vector<Weight> estimate_lambda_guesses(const WeightedDigraph& g) {
  const Weight w = g.total_weight();
  std::vector<Weight> guesses;
  if (w < 1) return guesses;
  Weight guess = 1;
  guesses.push_back(guess);
  while (guess < w) {
    guess *= 2;
    guesses.push_back(guess);
  }
  return guesses;
}

CutResult balanced_case(const WeightedDigraph& g, long long k, SplitRng& rng,
                        DriverStats* stats, bool exhaustive) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("balanced_case needs at least two vertices");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int s = g.root();

  std::vector<int> sinks;
  if (exhaustive) {
    for (int v = 0; v < n; ++v)
      if (v != s) sinks.push_back(v);
  } else {
    long long count = balanced_sample_count(n, k);
    for (long long i = 0; i < count; ++i) {
      int t = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
      if (t >= s) ++t;
      sinks.push_back(t);
    }
  }

  MaxflowCounter counter;
  CutResult best;
  best.graph_tag = "input";
  best.witness_origin = "balanced";
  for (int t : sinks) {
    FlowResult f = max_flow(g, s, t, &counter);
    if (f.value < best.value) {
      best.value = f.value;
      best.sink_side = min_cut_sink_side(g, f);
    }
  }
  if (stats) stats->balanced_calls += counter.calls;
  return best;
}

std::optional<CutResult> unbalanced_case(const WeightedDigraph& g, long long k,
                                         Weight lambda_guess, const DriverConfig& cfg,
                                         SplitRng& rng, DriverStats* stats) {
  SparsifiedGraph sp;
  try {
    sp = partial_sparsify(g, lambda_guess, k, /*eps=*/0.1, rng, cfg.variant, cfg.sparsify);
  } catch (const std::exception&) {
    return std::nullopt;
  }

  // Contract the input by the sparsifier's vertex map: original weights,
  // sparsified vertex set.
  std::vector<int> contracted;
  {
    const int sparsified_root = sp.graph.root();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != g.root() && sp.vertex_map[v] == sparsified_root) contracted.push_back(v);
  }
  Contraction contraction = contract_into_root(g, contracted);
  if (contraction.graph.vertex_count() < 2) return std::nullopt;

  // Inverse of the vertex map, for mapping sink sides back.
  std::vector<int> original_of(contraction.graph.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int nv = contraction.vertex_map[v];
    if (original_of[nv] < 0 || v == g.root()) original_of[nv] = v;
  }

  MaxflowCounter reference_counter;
  PackOptions pack_opts;
  pack_opts.eps = cfg.pack_eps;
  if (cfg.maxflow_budget) pack_opts.max_iters = *cfg.maxflow_budget;
  Packing packing;
  try {
    packing = pack_arborescences(sp.graph, pack_opts, &reference_counter);
  } catch (const std::exception&) {
    if (stats) stats->reference_calls += reference_counter.calls;
    return std::nullopt;
  }
  if (stats) stats->reference_calls += reference_counter.calls;

  MaxflowCounter counter;
  std::optional<CutResult> best;
  for (int tree_idx : sample_arborescences(packing, resolved_trees_per_guess(g, cfg), rng)) {
    CutResult cut = min_one_respecting_cut(contraction.graph, packing.trees[tree_idx],
                                           &counter);
    std::vector<int> original_sink;
    original_sink.reserve(cut.sink_side.size());
    for (int v : cut.sink_side) original_sink.push_back(original_of[v]);
    std::sort(original_sink.begin(), original_sink.end());
    CutResult measured = remeasured(g, std::move(original_sink), "unbalanced");
    if (!best || measured.value < best->value) best = std::move(measured);
  }
  if (stats) stats->one_respect_calls += counter.calls;
  return best;
}

CutResult exact_s_mincut(const WeightedDigraph& g, const DriverConfig& cfg,
                         DriverStats* stats) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("exact_s_mincut needs at least two vertices");
  if (auto degenerate = reachability_cut(g)) return *degenerate;

  const long long k = cfg.k > 0 ? cfg.k : auto_k(g);
  SplitRng rng(cfg.seed);

  SplitRng balanced_rng = rng.split();
  CutResult best = balanced_case(g, k, balanced_rng, stats, cfg.balanced_exhaustive);

  // Identical deterministic sparsifier constructions (identity rounding
  // with the same star weight) are run once.
  std::set<Weight> seen_identity_stars;
  for (Weight lambda_guess : estimate_lambda_guesses(g)) {
    SplitRng guess_rng = rng.split();
    if (cfg.variant == SparsifyVariant::kRounding) {
      RoundingParams params = rounding_params(g, lambda_guess, k, 0.1, cfg.sparsify);
      if (params.identity && !seen_identity_stars.insert(params.star_weight).second) {
        if (stats) ++stats->lambda_guesses_skipped;
        continue;
      }
    }
    auto cut = unbalanced_case(g, k, lambda_guess, cfg, guess_rng, stats);
    if (stats) ++stats->lambda_guesses_run;
    if (cut) take_min(best, std::move(*cut));
  }
  return best;
}

CutResult global_mincut(const WeightedDigraph& g, const DriverConfig& cfg,
                        DriverStats* stats) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("global_mincut needs at least two vertices");
  const int pivot = 0;
  CutResult forward = exact_s_mincut(with_root(g, pivot), cfg, stats);
  CutResult backward = exact_s_mincut(with_root(reverse(g), pivot), cfg, stats);

  if (forward.value <= backward.value) return forward;
  // The reversed cut's source side is the sink side in g.
  std::vector<char> rev_sink = make_mask(g.vertex_count(), backward.sink_side);
  std::vector<int> sink;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!rev_sink[v]) sink.push_back(v);
  CutResult out;
  out.sink_side = std::move(sink);
  out.value = backward.value;
  out.graph_tag = "input";
  out.witness_origin = backward.witness_origin + "-reversed";
  return out;
}

CutResult approx_s_mincut(const WeightedDigraph& g, double eps, const DriverConfig& cfg,
                          DriverStats* stats) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0,1)");
  if (g.vertex_count() < 2)
    throw std::invalid_argument("approx_s_mincut needs at least two vertices");
  if (auto degenerate = reachability_cut(g)) return *degenerate;

  const int n = g.vertex_count();
  const double sparsifier_eps = eps / 3.0;
  SplitRng rng(cfg.seed);

  CutResult best;
  best.graph_tag = "input";
  best.witness_origin = "approx";

  std::vector<long long> k_guesses;
  for (long long k = 1; k < 2LL * n; k *= 2) k_guesses.push_back(k);

  for (long long k : k_guesses) {
    std::set<Weight> seen_identity_stars;
    for (Weight lambda_guess : estimate_lambda_guesses(g)) {
      SplitRng guess_rng = rng.split();
      if (cfg.variant == SparsifyVariant::kRounding) {
        RoundingParams params = rounding_params(g, lambda_guess, k, sparsifier_eps,
                                                cfg.sparsify);
        if (params.identity && !seen_identity_stars.insert(params.star_weight).second) {
          if (stats) ++stats->lambda_guesses_skipped;
          continue;
        }
      }
      SparsifiedGraph sp;
      try {
        sp = partial_sparsify(g, lambda_guess, k, sparsifier_eps, guess_rng, cfg.variant,
                              cfg.sparsify);
      } catch (const std::exception&) {
        continue;
      }
      const WeightedDigraph& h = sp.graph;
      if (h.vertex_count() < 2) continue;

      std::vector<int> original_of(h.vertex_count(), -1);
      for (int v = 0; v < n; ++v) {
        int nv = sp.vertex_map[v];
        if (original_of[nv] < 0 || v == g.root()) original_of[nv] = v;
      }
      auto map_back = [&](const std::vector<int>& sink) {
        std::vector<int> original_sink;
        original_sink.reserve(sink.size());
        for (int v : sink) original_sink.push_back(original_of[v]);
        std::sort(original_sink.begin(), original_sink.end());
        return original_sink;
      };

      // Balanced flows inside the sparsifier.
      {
        MaxflowCounter counter;
        long long samples = balanced_sample_count(h.vertex_count(), k);
        for (long long i = 0; i < samples; ++i) {
          int t = static_cast<int>(
              guess_rng.next_below(static_cast<std::uint64_t>(h.vertex_count() - 1)));
          if (t >= h.root()) ++t;
          FlowResult f = max_flow(h, h.root(), t, &counter);
          std::vector<int> sink = map_back(min_cut_sink_side(h, f));
          if (!sink.empty() && static_cast<int>(sink.size()) < n)
            take_min(best, remeasured(g, std::move(sink), "approx-balanced"));
        }
        if (stats) stats->balanced_calls += counter.calls;
      }

      // Unbalanced pipeline entirely inside the sparsifier.
      {
        std::vector<char> seen = reachable_from_root(h);
        if (std::count(seen.begin(), seen.end(), char{1}) != h.vertex_count()) continue;
        MaxflowCounter reference_counter;
        PackOptions pack_opts;
        pack_opts.eps = cfg.pack_eps;
        if (cfg.maxflow_budget) pack_opts.max_iters = *cfg.maxflow_budget;
        Packing packing;
        try {
          packing = pack_arborescences(h, pack_opts, &reference_counter);
        } catch (const std::exception&) {
          if (stats) stats->reference_calls += reference_counter.calls;
          continue;
        }
        if (stats) stats->reference_calls += reference_counter.calls;
        MaxflowCounter counter;
        for (int tree_idx :
             sample_arborescences(packing, resolved_trees_per_guess(g, cfg), guess_rng)) {
          CutResult cut = min_one_respecting_cut(h, packing.trees[tree_idx], &counter);
          std::vector<int> sink = map_back(cut.sink_side);
          if (!sink.empty() && static_cast<int>(sink.size()) < n)
            take_min(best, remeasured(g, std::move(sink), "approx-unbalanced"));
        }
        if (stats) stats->one_respect_calls += counter.calls;
      }
      if (stats) ++stats->lambda_guesses_run;
    }
  }
  return best;
}

}  // namespace dirmincut
