#pragma once

#include <string>
#include <string_view>

#include "dirmincut/digraph.hpp"
#include "dirmincut/vertex_graph.hpp"

namespace dirmincut {

/// Line-oriented text format shared by both graph kinds:
///   c <comment>
///   p ec <n> <m>     edge-capacitated, or
///   p vc <n> <m>     vertex-weighted
///   r <root-id>
///   a <tail> <head> <weight>    one per arc (weight ignored for vc)
///   w <vertex> <weight>         vc only; unlisted vertices default to 1
/// Ids are 0-based decimal. The p line must come first; a missing r line
/// means root 0.
struct ParsedGraph {
  bool is_vertex = false;
  WeightedDigraph edge_graph;
  VertexWeightedDigraph vertex_graph;
};

ParsedGraph parse_graph(std::string_view text);
/// Convenience wrappers that throw if the file is the other kind.
WeightedDigraph parse_edge_graph(std::string_view text);
VertexWeightedDigraph parse_vertex_graph(std::string_view text);

std::string serialize_graph(const WeightedDigraph& g);
std::string serialize_graph(const VertexWeightedDigraph& g);

ParsedGraph load_graph_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace dirmincut
