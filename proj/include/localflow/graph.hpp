#pragma once

// Colored bounded-degree networks, antisymmetric flows and rooted
// neighborhoods.
//
// A ColoredGraph stores its nodes and edges as given (ids are arbitrary
// non-negative integers) together with dense indices used by the algorithms.
// Every undirected edge yields two arcs: arc 2*i is edge i in the a->b
// orientation, arc 2*i+1 the b->a orientation.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "localflow/rational.hpp"

namespace localflow {

using NodeId = std::int64_t;
using EdgeId = std::int64_t;
using Ticks = std::int64_t;
using NodeIndex = std::int32_t;
using ArcIndex = std::int32_t;

enum class Color : std::uint8_t { kRegular, kSource, kTarget };

char color_letter(Color c);

enum class Orientation : std::uint8_t { kAB, kBA };

struct DirectedEdgeRef {
  EdgeId edge = 0;
  Orientation orientation = Orientation::kAB;

  DirectedEdgeRef operator-() const {
    return {edge, orientation == Orientation::kAB ? Orientation::kBA
                                                  : Orientation::kAB};
  }
  auto operator<=>(const DirectedEdgeRef&) const = default;
};

std::string to_string(const DirectedEdgeRef& e);

struct NodeSpec {
  NodeId id = 0;
  Color color = Color::kRegular;
  bool operator==(const NodeSpec&) const = default;
};

struct EdgeSpec {
  EdgeId id = 0;
  NodeId a = 0;
  NodeId b = 0;
  Ticks cap_ab = 0;
  Ticks cap_ba = 0;
  bool operator==(const EdgeSpec&) const = default;
};

enum class ViolationKind : std::uint8_t {
  kBadParameter,
  kDuplicateNode,
  kNegativeNodeId,
  kDuplicateEdge,
  kNegativeEdgeId,
  kUnknownEndpoint,
  kSelfLoop,
  kDegreeExceeded,
  kCapacityNegative,
  kCapacityAboveBound,
  // flow checks
  kFlowSizeMismatch,
  kCapacityExceeded,
  kConservation,
  kSourceInflow,
  kTargetOutflow,
};

struct Violation {
  ViolationKind kind;
  std::int64_t subject;  // offending node or edge id (-1 for global)
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class ColoredGraph {
 public:
  ColoredGraph() = default;
  // Never throws on model violations; they are reported by validate_graph.
  ColoredGraph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges,
               int degree_bound, Ticks capacity_bound,
               Rational quantum = Rational(1));

  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  int degree_bound() const { return degree_bound_; }
  Ticks capacity_bound() const { return capacity_bound_; }
  const Rational& quantum() const { return quantum_; }

  std::optional<NodeIndex> find_node(NodeId id) const;
  std::optional<std::size_t> find_edge(EdgeId id) const;
  std::optional<ArcIndex> find_arc(const DirectedEdgeRef& e) const;

  NodeId node_id(NodeIndex v) const { return nodes_[v].id; }
  Color color(NodeIndex v) const { return nodes_[v].color; }

  static std::size_t edge_of(ArcIndex a) { return static_cast<std::size_t>(a) >> 1; }
  static ArcIndex reverse(ArcIndex a) { return a ^ 1; }
  static bool is_ab(ArcIndex a) { return (a & 1) == 0; }
  NodeIndex tail(ArcIndex a) const { return arc_tail_[a]; }
  NodeIndex head(ArcIndex a) const { return arc_tail_[reverse(a)]; }
  Ticks capacity(ArcIndex a) const {
    const EdgeSpec& e = edges_[edge_of(a)];
    return is_ab(a) ? e.cap_ab : e.cap_ba;
  }
  DirectedEdgeRef arc_ref(ArcIndex a) const {
    return {edges_[edge_of(a)].id, is_ab(a) ? Orientation::kAB : Orientation::kBA};
  }

  // Arcs leaving v, ordered by edge id. Edges with an unknown endpoint or a
  // self-loop are not indexed.
  std::span<const ArcIndex> arcs_from(NodeIndex v) const {
    return {adjacency_.data() + adjacency_begin_[v],
            adjacency_.data() + adjacency_begin_[v + 1]};
  }

  const ValidationReport& validation() const { return validation_; }
  bool valid() const { return validation_.ok(); }

  std::size_t count(Color c) const;

 private:
  std::vector<NodeSpec> nodes_;
  std::vector<EdgeSpec> edges_;
  int degree_bound_ = 1;
  Ticks capacity_bound_ = 1;
  Rational quantum_{1};

  std::unordered_map<NodeId, NodeIndex> node_index_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  std::vector<NodeIndex> arc_tail_;  // -1 when the endpoint is unknown
  std::vector<std::size_t> adjacency_begin_;
  std::vector<ArcIndex> adjacency_;
  ValidationReport validation_;
};

// Signed flow in ticks, one value per undirected edge in the a->b direction.
// The b->a value is the negation, so antisymmetry holds structurally.
class Flow {
 public:
  Flow() = default;
  explicit Flow(std::size_t edge_count) : f_ab_(edge_count, 0) {}
  explicit Flow(const ColoredGraph& g) : Flow(g.edge_count()) {}

  // Throws PreconditionError on an edge id that is not in g or listed twice.
  static Flow from_edge_values(const ColoredGraph& g,
                               std::span<const std::pair<EdgeId, Ticks>> values);

  std::size_t size() const { return f_ab_.size(); }
  Ticks f_ab(std::size_t edge_index) const { return f_ab_[edge_index]; }
  Ticks on_arc(ArcIndex a) const {
    const Ticks v = f_ab_[ColoredGraph::edge_of(a)];
    return ColoredGraph::is_ab(a) ? v : -v;
  }
  // Throws PreconditionError for an unknown edge.
  Ticks at(const ColoredGraph& g, const DirectedEdgeRef& e) const;

  // f(a) += amount, and therefore f(-a) -= amount.
  void push(ArcIndex a, Ticks amount) {
    f_ab_[ColoredGraph::edge_of(a)] += ColoredGraph::is_ab(a) ? amount : -amount;
  }

  std::span<const Ticks> values() const { return f_ab_; }
  bool operator==(const Flow&) const = default;

 private:
  std::vector<Ticks> f_ab_;
};

// Flow scaled by a positive integer denominator: edge value = sum_ab / m.
// Used for averages of m flows, checked exactly without division.
struct ScaledFlow {
  std::vector<Ticks> sum_ab;
  std::int64_t m = 1;
};

using NeighborhoodCenter = std::variant<NodeId, DirectedEdgeRef>;

struct NeighborhoodView {
  NeighborhoodCenter center;
  int radius = 0;
  ColoredGraph subgraph;  // induced; original node and edge ids
};

ValidationReport validate_graph(const ColoredGraph& g);

// Throws PreconditionError naming the first violation.
void require_valid(const ColoredGraph& g);

std::vector<DirectedEdgeRef> out_edges(const ColoredGraph& g, NodeId v);

NeighborhoodView neighborhood(const ColoredGraph& g,
                              const NeighborhoodCenter& center, int radius);

// Hop distance from the center (node, or nearer endpoint of the edge) for
// every node index; -1 beyond `max_radius`.
std::vector<int> hop_distances(const ColoredGraph& g,
                               std::span<const NodeIndex> sources,
                               int max_radius);

ValidationReport validate_flow(const ColoredGraph& g, const Flow& f);
ValidationReport validate_flow(const ColoredGraph& g, const ScaledFlow& f);

Ticks flow_value(const ColoredGraph& g, const Flow& f);
Rational flow_value(const ColoredGraph& g, const ScaledFlow& f);

}  // namespace localflow
