#include "dirmincut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dirmincut/arborescence.hpp"
#include "dirmincut/sparsifier.hpp"

namespace dirmincut {
namespace {

double log_binom(long long n, long long k) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

// P[X <= x] for X ~ Binomial(n, p), summed in log space.
double binom_cdf(long long x, long long n, double p) {
  if (x < 0) return 0.0;
  if (x >= n) return 1.0;
  if (p <= 0) return 1.0;
  if (p >= 1) return 0.0;
  double total = 0.0;
  for (long long k = 0; k <= x; ++k) {
    double lg = log_binom(n, k) + static_cast<double>(k) * std::log(p) +
                static_cast<double>(n - k) * std::log1p(-p);
    total += std::exp(lg);
  }
  return std::min(1.0, total);
}

// Lexicographic comparison of vertex sets encoded as bitmasks: the set
// owning the lowest id in the symmetric difference is smaller.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

}  // namespace

double clopper_pearson_upper(long long successes, long long trials, double alpha) {
  if (trials <= 0) return 1.0;
  if (successes >= trials) return 1.0;
  double lo = static_cast<double>(successes) / static_cast<double>(trials), hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = (lo + hi) / 2;
    if (binom_cdf(successes, trials, mid) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double clopper_pearson_lower(long long successes, long long trials, double alpha) {
  if (trials <= 0) return 0.0;
  if (successes <= 0) return 0.0;
  double lo = 0.0, hi = static_cast<double>(successes) / static_cast<double>(trials);
  for (int iter = 0; iter < 200; ++iter) {
    double mid = (lo + hi) / 2;
    if (binom_cdf(successes - 1, trials, mid) < 1.0 - alpha)
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

CutResult brute_force_s_mincut(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute force capped at n <= 20");
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  const int s = g.root();

  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != s) others.push_back(v);

  CutResult best;
  best.graph_tag = "input";
  best.witness_origin = "brute-force";
  std::uint32_t best_mask = 0;
  std::vector<char> mask(n, 0);
  const std::uint32_t limit = 1u << others.size();
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    std::fill(mask.begin(), mask.end(), 0);
    std::uint32_t vertex_mask = 0;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (bits & (1u << i)) {
        mask[others[i]] = 1;
        vertex_mask |= 1u << others[i];
      }
    Weight value = in_cut_value(g, mask);
    if (value < best.value ||
        (value == best.value && mask_lex_less(vertex_mask, best_mask))) {
      best.value = value;
      best_mask = vertex_mask;
      best.sink_side.clear();
      for (int v = 0; v < n; ++v)
        if (mask[v]) best.sink_side.push_back(v);
    }
  }
  return best;
}

CutResult brute_force_global_mincut(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute force capped at n <= 20");
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  CutResult best;
  best.graph_tag = "input";
  best.witness_origin = "brute-force-global";
  std::vector<char> mask(n, 0);
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t bits = 1; bits + 1 < limit; ++bits) {
    for (int v = 0; v < n; ++v) mask[v] = (bits >> v) & 1u;
    Weight value = in_cut_value(g, mask);
    if (value < best.value) {
      best.value = value;
      best.sink_side.clear();
      for (int v = 0; v < n; ++v)
        if (mask[v]) best.sink_side.push_back(v);
    }
  }
  return best;
}

std::optional<VertexCutResult> brute_force_vertex_cut(const VertexWeightedDigraph& g,
                                                      bool rooted) {
  if (g.n > 14) throw std::invalid_argument("vertex brute force capped at n <= 14");
  if (g.n < 2) throw std::invalid_argument("need at least two vertices");

  std::optional<VertexCutResult> best;
  std::vector<char> in_r(g.n, 0);
  const std::uint32_t limit = 1u << g.n;
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    if (rooted && (bits >> g.root) & 1u) continue;
    int r_size = 0;
    for (int v = 0; v < g.n; ++v) {
      in_r[v] = (bits >> v) & 1u;
      r_size += in_r[v];
    }
    if (r_size == g.n) continue;

    // X = in-neighborhood of R outside R; valid only if the remaining L
    // is nonempty and, when rooted, the root is not forced into X.
    std::vector<char> in_x(g.n, 0);
    for (auto [t, h] : g.arcs)
      if (in_r[h] && !in_r[t]) in_x[t] = 1;
    Weight value = 0;
    int x_size = 0;
    bool root_in_x = false;
    for (int v = 0; v < g.n; ++v)
      if (in_x[v]) {
        ++x_size;
        value += g.weight[v];
        if (v == g.root) root_in_x = true;
      }
    if (rooted && root_in_x) continue;
    if (!rooted && root_in_x) {
      // Global cuts have no infinite vertex; the root may sit in X.
      root_in_x = false;
    }
    if (r_size + x_size == g.n) continue;  // L empty

    if (!best || value < best->value) {
      VertexCutResult cut;
      for (int v = 0; v < g.n; ++v) {
        if (in_r[v]) cut.sink_component.push_back(v);
        else if (in_x[v]) cut.separator.push_back(v);
      }
      cut.value = value;
      best = std::move(cut);
    }
  }
  return best;
}

std::optional<VertexCutResult> brute_force_vertex_cut_to(const VertexWeightedDigraph& g,
                                                         int t, int max_sink) {
  if (g.n > 14) throw std::invalid_argument("vertex brute force capped at n <= 14");
  if (t == g.root) throw std::invalid_argument("t must differ from the root");

  std::optional<VertexCutResult> best;
  std::vector<char> in_r(g.n, 0);
  const std::uint32_t limit = 1u << g.n;
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    if (!((bits >> t) & 1u)) continue;
    if ((bits >> g.root) & 1u) continue;
    int r_size = 0;
    for (int v = 0; v < g.n; ++v) {
      in_r[v] = (bits >> v) & 1u;
      r_size += in_r[v];
    }
    if (r_size > max_sink) continue;

    std::vector<char> in_x(g.n, 0);
    bool root_in_x = false;
    for (auto [tail, head] : g.arcs)
      if (in_r[head] && !in_r[tail]) {
        in_x[tail] = 1;
        if (tail == g.root) root_in_x = true;
      }
    if (root_in_x) continue;
    Weight value = 0;
    int x_size = 0;
    for (int v = 0; v < g.n; ++v)
      if (in_x[v]) {
        ++x_size;
        value += g.weight[v];
      }
    if (r_size + x_size == g.n) continue;

    if (!best || value < best->value) {
      VertexCutResult cut;
      for (int v = 0; v < g.n; ++v) {
        if (in_r[v]) cut.sink_component.push_back(v);
        else if (in_x[v]) cut.separator.push_back(v);
      }
      cut.value = value;
      best = std::move(cut);
    }
  }
  return best;
}

std::vector<Arborescence> brute_force_arborescences(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  if (n > 6) throw std::invalid_argument("arborescence enumeration capped at n <= 6");
  const int s = g.root();

  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != s) others.push_back(v);

  std::vector<Arborescence> out;
  std::vector<int> choice(others.size(), 0);
  for (;;) {
    Arborescence t;
    t.root = s;
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    bool feasible = true;
    for (std::size_t i = 0; i < others.size() && feasible; ++i) {
      int v = others[i];
      auto in_edges = g.in_edges(v);
      if (static_cast<int>(in_edges.size()) <= choice[i]) {
        feasible = false;
        break;
      }
      int e = in_edges[choice[i]];
      t.parent[v] = g.edge(e).tail;
      t.parent_edge[v] = e;
    }
    if (feasible && valid_arborescence(t)) out.push_back(t);

    // Odometer over parent-edge choices.
    std::size_t i = 0;
    for (; i < others.size(); ++i) {
      ++choice[i];
      if (choice[i] < static_cast<int>(g.in_edges(others[i]).size())) break;
      choice[i] = 0;
    }
    if (i == others.size()) break;
  }
  return out;
}

ConcentrationReport sparsifier_concentration_trial(const WeightedDigraph& g,
                                                   const SparsifierTrialParams& params,
                                                   long long trials, SplitRng& rng) {
  const int n = g.vertex_count();
  if (n > 10) throw std::invalid_argument("concentration trial capped at n <= 10");
  const int s = g.root();
  const bool binomial = params.variant == 1;
  const double eps_prime = params.eps / 2.0;
  SparsifyConfig cfg;
  cfg.binomial_force_full = true;  // exercise the sampling path even at small lambda

  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != s) others.push_back(v);
  const std::uint32_t sets = 1u << others.size();

  // Per sink set: exact in-cut in g, analytic two-sided failure bound.
  std::vector<double> exact_cut(sets, 0), bound(sets, 1);
  std::vector<long long> violations(sets, 0);
  RoundingParams rp = rounding_params(g, params.lambda_guess, params.k, params.eps);
  const double tau = static_cast<double>(params.lambda_guess) / static_cast<double>(rp.q);
  const double p = std::min(1.0, static_cast<double>(params.k) /
                                     static_cast<double>(params.lambda_guess));
  std::vector<char> mask(n, 0);
  for (std::uint32_t bits = 1; bits < sets; ++bits) {
    std::fill(mask.begin(), mask.end(), 0);
    int size = 0;
    for (std::size_t i = 0; i < others.size(); ++i)
      if (bits & (1u << i)) {
        mask[others[i]] = 1;
        ++size;
      }
    double cut = static_cast<double>(in_cut_value(g, mask));
    exact_cut[bits] = cut;
    if (binomial) {
      // Chernoff: 2 exp(-p * cut * eps'^2 / 3).
      bound[bits] = std::min(1.0, 2.0 * std::exp(-p * cut * eps_prime * eps_prime / 3.0));
    } else {
      // Additive form with gamma = eps * lambda * |T| / 2k, per side
      // exp(-eps * gamma / tau).
      double gamma = params.eps * static_cast<double>(params.lambda_guess) *
                     static_cast<double>(size) / (2.0 * static_cast<double>(params.k));
      bound[bits] = std::min(1.0, 2.0 * std::exp(-params.eps * gamma / tau));
    }
  }

  // Per-edge unbiasedness accumulators (rounding variant only). Surviving
  // rounded edges keep their input order and precede the star block, so
  // they match back by (tail, head); the trial instance must be free of
  // parallel edges for this accounting.
  std::vector<double> edge_weight_sum(g.edge_count(), 0.0);
  if (!binomial) {
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
      if (std::find(seen.begin(), seen.end(), std::pair(e.tail, e.head)) != seen.end())
        throw std::invalid_argument("concentration trial instance has parallel edges");
      seen.emplace_back(e.tail, e.head);
    }
  }

  ConcentrationReport out;
  out.report.trials = trials;
  for (long long trial = 0; trial < trials; ++trial) {
    SplitRng trial_rng = rng.split();
    bool structural_ok = true;

    if (binomial) {
      SparsifiedGraph sp =
          binomial_sparsify(g, params.lambda_guess, params.k, params.eps, trial_rng, cfg);
      const Weight alpha = binomial_alpha(n, params.eps);
      // Structural scan: integral weights (by type), no edges headed to
      // the root after contraction, surviving in-degrees at most 3k.
      for (const Edge& e : sp.graph.edges())
        if (e.head == sp.graph.root()) structural_ok = false;
      for (int v = 0; v < sp.graph.vertex_count(); ++v)
        if (v != sp.graph.root() &&
            static_cast<long long>(sp.graph.in_edges(v).size()) > 3 * params.k)
          structural_ok = false;
      // Cut accounting needs the uncontracted star overlay; skip sets that
      // lost vertices to contraction.
      for (std::uint32_t bits = 1; bits < sets; ++bits) {
        int size = 0;
        bool intact = true;
        std::vector<int> members;
        for (std::size_t i = 0; i < others.size(); ++i)
          if (bits & (1u << i)) {
            ++size;
            int nv = sp.vertex_map[others[i]];
            if (nv == sp.graph.root()) intact = false;
            members.push_back(nv);
          }
        if (!intact) continue;
        double sampled = static_cast<double>(in_cut_value(sp.graph, members)) -
                         static_cast<double>(alpha) * size;  // strip the star
        double expect = p * exact_cut[bits];
        if (sampled < (1 - eps_prime) * expect || sampled > (1 + eps_prime) * expect)
          ++violations[bits];
      }
    } else {
      auto [h, scale] = skeleton_sparsify(g, params.lambda_guess, params.k, params.eps,
                                          trial_rng, cfg);
      for (const Edge& e : h.edges())
        if (e.weight < 1) structural_ok = false;
      const double tau_actual = scale.value();
      for (std::uint32_t bits = 1; bits < sets; ++bits) {
        int size = 0;
        std::vector<int> members;
        for (std::size_t i = 0; i < others.size(); ++i)
          if (bits & (1u << i)) {
            ++size;
            members.push_back(others[i]);
          }
        // w2 = rounded in-cut before the star: subtract the star's
        // contribution, then undo the scaling.
        double w3 = static_cast<double>(in_cut_value(h, members)) * tau_actual;
        double w2 = w3 - static_cast<double>(rp.star_weight) * tau_actual * size;
        double slack = params.eps * exact_cut[bits] +
                       params.eps * static_cast<double>(params.lambda_guess) * size /
                           (2.0 * static_cast<double>(params.k));
        if (std::abs(w2 - exact_cut[bits]) > slack + 1e-9) ++violations[bits];
      }
      // Per-edge unbiasedness: the star block is the last n-1 edges;
      // everything before it maps back by endpoint pair.
      const int surviving = h.edge_count() - (n - 1);
      for (int i = 0; i < surviving; ++i) {
        const Edge& he = h.edge(i);
        for (int e = 0; e < g.edge_count(); ++e)
          if (g.edge(e).tail == he.tail && g.edge(e).head == he.head) {
            edge_weight_sum[e] += static_cast<double>(he.weight) * tau_actual;
            break;
          }
      }
    }

    if (structural_ok) ++out.report.successes;
    out.structure_ok = out.structure_ok && structural_ok;
  }

  if (!binomial && trials > 0) {
    for (int e = 0; e < g.edge_count(); ++e) {
      double mean = edge_weight_sum[e] / static_cast<double>(trials);
      double exact = static_cast<double>(g.edge(e).weight);
      out.max_mean_relative_error =
          std::max(out.max_mean_relative_error, std::abs(mean - exact) / exact);
    }
  }

  // The Chernoff claim fails only if the empirical rate significantly
  // exceeds the analytic bound: the one-sided 95% lower confidence limit
  // must not clear it.
  double worst_lower = 0.0;
  for (std::uint32_t bits = 1; bits < sets; ++bits) {
    if (bound[bits] >= 1.0) continue;
    ++out.informative_sets;
    double lower = clopper_pearson_lower(violations[bits], trials, 0.05);
    worst_lower = std::max(worst_lower, lower);
    if (lower > bound[bits]) out.bounds_respected = false;
  }
  out.report.confidence_bound = worst_lower;
  return out;
}

TrialReport one_respect_probability_trial(const WeightedDigraph& g,
                                          std::span<const int> planted_sink,
                                          long long k, double eps, long long trials,
                                          SplitRng& rng) {
  if (g.vertex_count() > 8)
    throw std::invalid_argument("one-respect trial capped at n <= 8");
  if (static_cast<long long>(planted_sink.size()) > k)
    throw std::invalid_argument("planted sink side exceeds k");

  std::vector<char> sink_mask = make_mask(g.vertex_count(), planted_sink);

  TrialReport report;
  report.trials = trials;
  for (long long trial = 0; trial < trials; ++trial) {
    SplitRng trial_rng = rng.split();
    SparsifiedGraph sp = partial_sparsify(g, std::max<Weight>(1, in_cut_value(g, sink_mask)),
                                          k, eps, trial_rng, SparsifyVariant::kRounding);
    // The planted sink must survive for the trial to make sense.
    bool intact = true;
    std::vector<char> source_mask(sp.graph.vertex_count(), 1);
    for (int v : planted_sink) {
      int nv = sp.vertex_map[v];
      if (nv == sp.graph.root()) intact = false;
      else source_mask[nv] = 0;
    }
    if (!intact) {
      report.per_trial_values.push_back(0);
      continue;
    }
    Packing packing;
    try {
      PackOptions opts;
      opts.early_exit = false;
      packing = pack_arborescences(sp.graph, opts);
    } catch (const std::exception&) {
      report.per_trial_values.push_back(0);
      continue;
    }
    int pick = sample_arborescences(packing, 1, trial_rng)[0];
    int crossings = crossing_count(packing.trees[pick], source_mask);
    report.per_trial_values.push_back(crossings);
    if (crossings == 1) ++report.successes;
  }
  report.confidence_bound = clopper_pearson_lower(report.successes, report.trials, 0.05);
  return report;
}

}  // namespace dirmincut
