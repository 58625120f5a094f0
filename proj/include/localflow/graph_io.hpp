#pragma once

// JSON encoding of graphs and flows.
//
//   graph: {"quantum": "p/q", "degree_bound": d, "capacity_bound_ticks": M,
//           "nodes": [{"id", "color": "R"|"S"|"T"}],
//           "edges": [{"id", "a", "b", "cap_ab", "cap_ba"}],
//           "metadata": {...}}            (metadata optional)
//   flow:  {"edge_values": [{"id", "f_ab"}]}

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "localflow/graph.hpp"

namespace localflow {

struct InstanceMetadata {
  std::string family;
  std::uint64_t gen_seed = 0;
  std::optional<Ticks> known_max_flow;
};

struct GraphDocument {
  ColoredGraph graph;
  std::optional<InstanceMetadata> metadata;
};

nlohmann::json graph_to_json(const ColoredGraph& g,
                             const std::optional<InstanceMetadata>& meta = std::nullopt);
// Throws InputError naming the offending field.
GraphDocument graph_from_json(const nlohmann::json& j);

nlohmann::json flow_to_json(const ColoredGraph& g, const Flow& f);
// Throws InputError on malformed JSON, PreconditionError on unknown edges.
Flow flow_from_json(const ColoredGraph& g, const nlohmann::json& j);

GraphDocument read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace localflow
