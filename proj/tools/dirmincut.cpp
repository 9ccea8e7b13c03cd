// Command-line surface for the directed mincut library: exact and
// approximate edge cuts, vertex cuts, sparsifier/packing inspection,
// verification sweeps, benchmarks, and instance generators.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirmincut/arborescence.hpp"
#include "dirmincut/driver.hpp"
#include "dirmincut/generators.hpp"
#include "dirmincut/graph_io.hpp"
#include "dirmincut/maxflow.hpp"
#include "dirmincut/one_respecting.hpp"
#include "dirmincut/oracle.hpp"
#include "dirmincut/sparsifier.hpp"
#include "dirmincut/verify.hpp"
#include "dirmincut/vertex_cut.hpp"

namespace {

using dirmincut::Weight;
using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 0xD1CE;

struct Timings {
  std::vector<std::pair<std::string, double>> stages;
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

  void stage(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - mark).count();
    stages.emplace_back(name, ms);
    mark = now;
  }
};

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << ' ';
    out << ids[i];
  }
  return out.str();
}

// Timings are wall-clock and excluded from JSON so that identical seeds
// produce byte-identical reports.
void emit_cut(const dirmincut::CutResult& cut, const dirmincut::DriverStats& stats,
              const Timings& timings, bool as_json) {
  if (as_json) {
    Json j;
    j["value"] = cut.value;
    j["sink_side"] = cut.sink_side;
    j["witness"] = cut.witness_origin;
    j["maxflow_calls"] = Json{{"balanced", stats.balanced_calls},
                              {"one_respect", stats.one_respect_calls},
                              {"reference", stats.reference_calls}};
    j["lambda_guesses"] = Json{{"run", stats.lambda_guesses_run},
                               {"skipped", stats.lambda_guesses_skipped}};
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << "value=" << cut.value << '\n';
  std::cout << "sink_side=" << join_ids(cut.sink_side) << '\n';
  std::cout << "witness=" << cut.witness_origin << '\n';
  std::cout << "maxflow_calls_balanced=" << stats.balanced_calls << '\n';
  std::cout << "maxflow_calls_one_respect=" << stats.one_respect_calls << '\n';
  std::cout << "maxflow_calls_reference=" << stats.reference_calls << '\n';
  std::cout << "lambda_guesses_run=" << stats.lambda_guesses_run << '\n';
  for (const auto& [name, ms] : timings.stages)
    std::cout << "time_ms_" << name << '=' << ms << '\n';
}

dirmincut::WeightedDigraph load_edge_graph(const std::string& path, int root_override) {
  dirmincut::ParsedGraph parsed = dirmincut::load_graph_file(path);
  if (parsed.is_vertex)
    throw std::invalid_argument("expected an edge-capacitated (p ec) graph file");
  if (root_override >= 0)
    return dirmincut::with_root(parsed.edge_graph, root_override);
  return std::move(parsed.edge_graph);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact and approximate minimum cuts in weighted digraphs"};
  app.require_subcommand(1);

  std::string file, tree_file, out_file, variant_name = "rounding", suite, model = "erdos";
  std::string corpus_dir;
  std::vector<std::string> bench_files;
  int root = -1;
  long long opt_k = 0;
  double eps = 0.25;
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false, global_mode = false;
  Weight lambda_guess = 1;
  int gen_n = 16, gen_m = 0, gen_k = 3;
  Weight gen_lambda = 8, gen_maxw = 10;

  auto add_common = [&](CLI::App* cmd, bool needs_file) {
    cmd->add_option("--seed", seed, "rng seed");
    cmd->add_flag("--json", as_json, "machine-readable output");
    if (needs_file) cmd->add_option("file", file, "graph file")->required();
  };

  CLI::App* exact = app.add_subcommand("exact", "exact s-mincut");
  exact->add_option("--root", root, "root vertex");
  exact->add_option("--k", opt_k, "case-split threshold (0 = auto)");
  add_common(exact, true);

  CLI::App* approx = app.add_subcommand("approx", "(1+eps)-approximate s-mincut");
  approx->add_option("--root", root, "root vertex");
  approx->add_option("--k", opt_k, "case-split threshold (0 = auto)");
  approx->add_option("--eps", eps, "approximation parameter");
  add_common(approx, true);

  CLI::App* global = app.add_subcommand("global", "global mincut");
  global->add_option("--k", opt_k, "case-split threshold (0 = auto)");
  add_common(global, true);

  CLI::App* vertex = app.add_subcommand("vertex-approx", "approximate vertex mincut");
  vertex->add_option("--root", root, "root vertex");
  vertex->add_flag("--global", global_mode, "global instead of rooted");
  vertex->add_option("--eps", eps, "approximation parameter");
  add_common(vertex, true);

  CLI::App* sparsify = app.add_subcommand("sparsify", "partial sparsification");
  sparsify->add_option("--variant", variant_name, "rounding|binomial");
  sparsify->add_option("--lambda", lambda_guess, "mincut estimate")->required();
  sparsify->add_option("--k", opt_k, "sink-size parameter")->required();
  sparsify->add_option("--eps", eps, "approximation parameter");
  sparsify->add_option("--out", out_file, "write the sparsified graph here");
  sparsify->add_option("--root", root, "root vertex");
  add_common(sparsify, true);

  CLI::App* pack = app.add_subcommand("pack", "fractional arborescence packing");
  pack->add_option("--eps", eps, "packing accuracy");
  pack->add_option("--root", root, "root vertex");
  add_common(pack, true);

  CLI::App* one_respect = app.add_subcommand("one-respect", "1-respecting mincut");
  one_respect->add_option("--tree", tree_file, "arborescence file (a <tail> <head> lines)")
      ->required();
  one_respect->add_option("--root", root, "root vertex");
  add_common(one_respect, true);

  CLI::App* verify = app.add_subcommand("verify", "oracle verification sweeps");
  verify->add_option("--suite", suite, "exact|approx|vertex|sparsifier|packing")->required();
  add_common(verify, false);

  CLI::App* bench = app.add_subcommand("bench", "per-instance timing and call counts");
  bench->add_option("files", bench_files, "graph files");
  bench->add_option("--k", opt_k, "case-split threshold (0 = auto)");
  add_common(bench, false);

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->add_option("--model", model, "erdos|planted-unbalanced|planted-vertex|cycle|clique");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--m", gen_m, "edge count (erdos; 0 = 3n)");
  gen->add_option("--k", gen_k, "planted sink / separator size");
  gen->add_option("--lambda", gen_lambda, "planted cut value");
  gen->add_option("--max-weight", gen_maxw, "max edge weight");
  gen->add_option("--out", out_file, "output file")->required();
  add_common(gen, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  if (exact->parsed()) {
    Timings timings;
    dirmincut::WeightedDigraph g = load_edge_graph(file, root);
    timings.stage("load");
    dirmincut::DriverConfig cfg;
    cfg.k = opt_k;
    cfg.seed = seed;
    dirmincut::DriverStats stats;
    dirmincut::CutResult cut = dirmincut::exact_s_mincut(g, cfg, &stats);
    timings.stage("solve");
    emit_cut(cut, stats, timings, as_json);
    return 0;
  }
  if (approx->parsed()) {
    Timings timings;
    dirmincut::WeightedDigraph g = load_edge_graph(file, root);
    timings.stage("load");
    dirmincut::DriverConfig cfg;
    cfg.k = opt_k;
    cfg.seed = seed;
    dirmincut::DriverStats stats;
    dirmincut::CutResult cut = dirmincut::approx_s_mincut(g, eps, cfg, &stats);
    timings.stage("solve");
    emit_cut(cut, stats, timings, as_json);
    return 0;
  }
  if (global->parsed()) {
    Timings timings;
    dirmincut::WeightedDigraph g = load_edge_graph(file, -1);
    timings.stage("load");
    dirmincut::DriverConfig cfg;
    cfg.k = opt_k;
    cfg.seed = seed;
    dirmincut::DriverStats stats;
    dirmincut::CutResult cut = dirmincut::global_mincut(g, cfg, &stats);
    timings.stage("solve");
    emit_cut(cut, stats, timings, as_json);
    return 0;
  }
  if (vertex->parsed()) {
    dirmincut::ParsedGraph parsed = dirmincut::load_graph_file(file);
    if (!parsed.is_vertex)
      throw std::invalid_argument("vertex-approx needs a vertex-weighted (p vc) file");
    dirmincut::VertexWeightedDigraph g = parsed.vertex_graph;
    if (root >= 0) g.root = root;
    dirmincut::SplitRng rng(seed);
    dirmincut::VertexCutResult cut =
        global_mode ? dirmincut::approx_global_vertex_cut(g, eps, rng)
                    : dirmincut::approx_rooted_vertex_cut(g, eps, rng);
    if (as_json) {
      Json j;
      j["value"] = cut.value;
      j["separator"] = cut.separator;
      j["sink_component"] = cut.sink_component;
      j["degenerate"] = cut.degenerate;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "value=" << cut.value << '\n';
      std::cout << "separator=" << join_ids(cut.separator) << '\n';
      std::cout << "sink_component=" << join_ids(cut.sink_component) << '\n';
      if (cut.degenerate) std::cout << "degenerate=1\n";
    }
    return cut.degenerate ? 1 : 0;
  }
  if (sparsify->parsed()) {
    dirmincut::WeightedDigraph g = load_edge_graph(file, root);
    dirmincut::SparsifyVariant variant = variant_name == "binomial"
                                             ? dirmincut::SparsifyVariant::kBinomial
                                             : dirmincut::SparsifyVariant::kRounding;
    if (variant_name != "binomial" && variant_name != "rounding")
      throw CLI::ValidationError("--variant must be rounding or binomial");
    dirmincut::SplitRng rng(seed);
    dirmincut::SparsifiedGraph sp =
        dirmincut::partial_sparsify(g, lambda_guess, opt_k, eps, rng, variant);
    dirmincut::CutResult mincut = dirmincut::reference_s_mincut(sp.graph);
    if (!out_file.empty())
      dirmincut::write_file(out_file, dirmincut::serialize_graph(sp.graph));
    if (as_json) {
      Json j;
      j["scale_num"] = sp.scale.num;
      j["scale_den"] = sp.scale.den;
      j["edges"] = sp.graph.edge_count();
      j["vertices"] = sp.graph.vertex_count();
      j["mincut"] = mincut.value;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "scale=" << sp.scale.num << '/' << sp.scale.den << '\n';
      std::cout << "edges=" << sp.graph.edge_count() << '\n';
      std::cout << "vertices=" << sp.graph.vertex_count() << '\n';
      std::cout << "mincut=" << mincut.value << '\n';
    }
    return 0;
  }
  if (pack->parsed()) {
    dirmincut::WeightedDigraph g = load_edge_graph(file, root);
    dirmincut::PackOptions opts;
    opts.eps = eps;
    dirmincut::Packing packing = dirmincut::pack_arborescences(g, opts);
    bool loads_ok = packing.scaled_loads_within_one(g);
    if (as_json) {
      Json j;
      j["iterations"] = packing.iterations;
      j["distinct_trees"] = packing.trees.size();
      j["gamma_bar"] = packing.gamma_bar;
      j["packing_value"] = 1.0 / packing.gamma_bar;
      j["scaled_max_load_within_one"] = loads_ok;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "iterations=" << packing.iterations << '\n';
      std::cout << "distinct_trees=" << packing.trees.size() << '\n';
      std::cout << "gamma_bar=" << packing.gamma_bar << '\n';
      std::cout << "packing_value=" << 1.0 / packing.gamma_bar << '\n';
      std::cout << "scaled_max_load_within_one=" << (loads_ok ? 1 : 0) << '\n';
    }
    return 0;
  }
  if (one_respect->parsed()) {
    dirmincut::WeightedDigraph g = load_edge_graph(file, root);
    std::ifstream in(tree_file);
    if (!in) throw std::runtime_error("cannot open tree file '" + tree_file + "'");
    dirmincut::Arborescence t;
    t.root = g.root();
    t.parent.assign(g.vertex_count(), -1);
    t.parent_edge.assign(g.vertex_count(), -1);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string kind;
      if (!(fields >> kind) || kind == "c") continue;
      int tail, head;
      if (kind != "a" || !(fields >> tail >> head))
        throw std::invalid_argument("tree file lines must be 'a <tail> <head>'");
      if (tail < 0 || tail >= g.vertex_count() || head < 0 || head >= g.vertex_count())
        throw std::invalid_argument("tree vertex id out of range");
      t.parent[head] = tail;
    }
    // User-supplied trees must use edges of the graph.
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v == t.root) continue;
      bool found = false;
      for (int e : g.in_edges(v))
        if (g.edge(e).tail == t.parent[v]) {
          t.parent_edge[v] = e;
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("tree edge missing from the graph");
    }
    dirmincut::MaxflowCounter counter;
    dirmincut::CutResult cut = dirmincut::min_one_respecting_cut(g, t, &counter);
    if (as_json) {
      Json j;
      j["value"] = cut.value;
      j["sink_side"] = cut.sink_side;
      j["maxflow_calls"] = counter.calls;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "value=" << cut.value << '\n';
      std::cout << "sink_side=" << join_ids(cut.sink_side) << '\n';
      std::cout << "maxflow_calls=" << counter.calls << '\n';
    }
    return 0;
  }
  if (verify->parsed()) {
    dirmincut::SuiteReport report = dirmincut::run_verify_suite(suite, seed);
    if (as_json) {
      Json j;
      j["suite"] = report.suite;
      j["pass"] = report.pass();
      Json checks = Json::array();
      for (const auto& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      j["checks"] = checks;
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& c : report.checks)
        std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " (" << c.detail
                  << ")\n";
      std::cout << "suite=" << report.suite << " result="
                << (report.pass() ? "pass" : "fail") << '\n';
    }
    return report.pass() ? 0 : 1;
  }
  if (bench->parsed()) {
    std::cout << "instance,n,m,wall_ms,balanced_calls,one_respect_calls,reference_calls,"
                 "balanced_bound,one_respect_bound\n";
    for (const std::string& path : bench_files) {
      dirmincut::WeightedDigraph g = load_edge_graph(path, -1);
      dirmincut::DriverConfig cfg;
      cfg.k = opt_k;
      cfg.seed = seed;
      dirmincut::DriverStats stats;
      auto start = std::chrono::steady_clock::now();
      dirmincut::exact_s_mincut(g, cfg, &stats);
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      long long k = cfg.k > 0 ? cfg.k : dirmincut::auto_k(g);
      long long balanced_bound = static_cast<long long>(std::ceil(
          (static_cast<double>(g.vertex_count()) / static_cast<double>(k)) * 2.0 *
          std::log(std::max(2, g.vertex_count()))));
      int trees = static_cast<int>(
          std::ceil(2.0 * std::log(std::max(2, g.vertex_count()))));
      long long layers =
          static_cast<long long>(std::floor(std::log2(g.vertex_count()))) + 1;
      std::cout << path << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << ms
                << ',' << stats.balanced_calls << ',' << stats.one_respect_calls << ','
                << stats.reference_calls << ',' << balanced_bound << ','
                << stats.lambda_guesses_run * trees * layers << '\n';
    }
    return 0;
  }
  if (gen->parsed()) {
    dirmincut::SplitRng rng(seed);
    if (model == "erdos") {
      int m = gen_m > 0 ? gen_m : 3 * gen_n;
      dirmincut::WeightedDigraph g = dirmincut::gen_erdos(gen_n, m, gen_maxw, rng);
      dirmincut::write_file(out_file, dirmincut::serialize_graph(g));
    } else if (model == "planted-unbalanced") {
      dirmincut::PlantedCut planted =
          dirmincut::gen_planted_unbalanced(gen_n, gen_k, gen_lambda, rng);
      dirmincut::write_file(out_file, dirmincut::serialize_graph(planted.graph));
      std::ostringstream answer;
      answer << "value " << planted.answer.value << '\n';
      answer << "sink " << join_ids(planted.answer.sink_side) << '\n';
      dirmincut::write_file(out_file + ".answer", answer.str());
    } else if (model == "planted-vertex") {
      dirmincut::PlantedVertexCut planted =
          dirmincut::gen_planted_vertex(gen_n, gen_k, gen_k, gen_lambda, rng);
      dirmincut::write_file(out_file, dirmincut::serialize_graph(planted.graph));
      std::ostringstream answer;
      answer << "value " << planted.answer.value << '\n';
      answer << "separator " << join_ids(planted.answer.separator) << '\n';
      answer << "sink " << join_ids(planted.answer.sink_component) << '\n';
      dirmincut::write_file(out_file + ".answer", answer.str());
    } else if (model == "cycle") {
      dirmincut::write_file(out_file,
                            dirmincut::serialize_graph(dirmincut::gen_cycle(gen_n, gen_maxw)));
    } else if (model == "clique") {
      dirmincut::write_file(out_file,
                            dirmincut::serialize_graph(dirmincut::gen_clique(gen_n)));
    } else {
      throw CLI::ValidationError("unknown generator model '" + model + "'");
    }
    if (!as_json) std::cout << "wrote " << out_file << '\n';
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
