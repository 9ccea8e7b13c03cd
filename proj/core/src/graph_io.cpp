#include "dirmincut/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dirmincut {
namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  bool next_line(std::vector<std::string_view>& fields) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      fields.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
      }
      if (!fields.empty()) return true;
    }
    return false;
  }
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::invalid_argument("parse error at line " + std::to_string(line) + ": " + what);
}

long long to_ll(std::string_view s, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    parse_fail(line, "malformed number '" + std::string(s) + "'");
  return value;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  Tokenizer tok{text};
  std::vector<std::string_view> f;

  bool have_problem = false;
  bool is_vertex = false;
  long long n = 0, m = 0;
  int root = 0;
  bool have_root = false;
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> arcs;
  std::vector<Weight> weights;
  std::vector<char> weight_set;

  while (tok.next_line(f)) {
    const int line = tok.line_no;
    if (f[0] == "c") continue;
    if (f[0] == "p") {
      if (have_problem) parse_fail(line, "duplicate problem line");
      if (f.size() != 4) parse_fail(line, "problem line needs 'p ec|vc <n> <m>'");
      if (f[1] == "ec") is_vertex = false;
      else if (f[1] == "vc") is_vertex = true;
      else parse_fail(line, "unknown problem kind '" + std::string(f[1]) + "'");
      n = to_ll(f[2], line);
      m = to_ll(f[3], line);
      if (n <= 0 || m < 0) parse_fail(line, "invalid sizes");
      have_problem = true;
      weights.assign(n, 1);
      weight_set.assign(n, 0);
      continue;
    }
    if (!have_problem) parse_fail(line, "problem line must come first");
    if (f[0] == "r") {
      if (have_root) parse_fail(line, "duplicate root line");
      if (f.size() != 2) parse_fail(line, "root line needs 'r <id>'");
      long long r = to_ll(f[1], line);
      if (r < 0 || r >= n) parse_fail(line, "root id out of range");
      root = static_cast<int>(r);
      have_root = true;
      continue;
    }
    if (f[0] == "a") {
      if (f.size() != 3 && f.size() != 4) parse_fail(line, "arc line needs 'a <tail> <head> [weight]'");
      long long t = to_ll(f[1], line), h = to_ll(f[2], line);
      long long w = f.size() == 4 ? to_ll(f[3], line) : 1;
      if (t < 0 || t >= n || h < 0 || h >= n) parse_fail(line, "id out of range");
      if (w < 0) parse_fail(line, "negative weight");
      edges.push_back({static_cast<int>(t), static_cast<int>(h), w});
      arcs.emplace_back(static_cast<int>(t), static_cast<int>(h));
      continue;
    }
    if (f[0] == "w") {
      if (!is_vertex) parse_fail(line, "w line in an ec file");
      if (f.size() != 3) parse_fail(line, "weight line needs 'w <vertex> <weight>'");
      long long v = to_ll(f[1], line), w = to_ll(f[2], line);
      if (v < 0 || v >= n) parse_fail(line, "id out of range");
      if (w < 0) parse_fail(line, "negative weight");
      if (weight_set[v]) parse_fail(line, "duplicate weight line for vertex " + std::to_string(v));
      weights[v] = w;
      weight_set[v] = 1;
      continue;
    }
    parse_fail(line, "unknown line kind '" + std::string(f[0]) + "'");
  }
  if (!have_problem) throw std::invalid_argument("parse error: missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw std::invalid_argument("parse error: arc count " + std::to_string(edges.size()) +
                                " does not match problem line m=" + std::to_string(m));

  ParsedGraph out;
  out.is_vertex = is_vertex;
  if (is_vertex) {
    out.vertex_graph =
        VertexWeightedDigraph::build(static_cast<int>(n), root, arcs, weights);
  } else {
    out.edge_graph = WeightedDigraph::build(static_cast<int>(n), root, edges);
  }
  return out;
}

WeightedDigraph parse_edge_graph(std::string_view text) {
  ParsedGraph p = parse_graph(text);
  if (p.is_vertex) throw std::invalid_argument("expected an edge-capacitated (p ec) file");
  return std::move(p.edge_graph);
}

VertexWeightedDigraph parse_vertex_graph(std::string_view text) {
  ParsedGraph p = parse_graph(text);
  if (!p.is_vertex) throw std::invalid_argument("expected a vertex-weighted (p vc) file");
  return std::move(p.vertex_graph);
}

std::string serialize_graph(const WeightedDigraph& g) {
  std::ostringstream out;
  out << "p ec " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  out << "r " << g.root() << '\n';
  for (const Edge& e : g.edges())
    out << "a " << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
  return out.str();
}

std::string serialize_graph(const VertexWeightedDigraph& g) {
  std::ostringstream out;
  out << "p vc " << g.n << ' ' << g.arcs.size() << '\n';
  out << "r " << g.root << '\n';
  for (int v = 0; v < g.n; ++v) out << "w " << v << ' ' << g.weight[v] << '\n';
  for (auto [t, h] : g.arcs) out << "a " << t << ' ' << h << " 1\n";
  return out.str();
}

ParsedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
}

}  // namespace dirmincut
