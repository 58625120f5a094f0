#include "localflow/graph.hpp"

#include <algorithm>
#include <numeric>

#include "localflow/errors.hpp"

namespace localflow {

char color_letter(Color c) {
  switch (c) {
    case Color::kRegular: return 'R';
    case Color::kSource: return 'S';
    case Color::kTarget: return 'T';
  }
  return '?';
}

std::string to_string(const DirectedEdgeRef& e) {
  return std::to_string(e.edge) + (e.orientation == Orientation::kAB ? ":AB" : ":BA");
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

ColoredGraph::ColoredGraph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges,
                           int degree_bound, Ticks capacity_bound, Rational quantum)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      degree_bound_(degree_bound),
      capacity_bound_(capacity_bound),
      quantum_(quantum) {
  auto& bad = validation_.violations;
  if (degree_bound_ < 1) {
    bad.push_back({ViolationKind::kBadParameter, -1, "degree bound must be positive"});
  }
  if (capacity_bound_ < 1) {
    bad.push_back({ViolationKind::kBadParameter, -1, "capacity bound must be positive"});
  }
  if (quantum_ <= 0) {
    bad.push_back({ViolationKind::kBadParameter, -1, "tick quantum must be positive"});
  }

  node_index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const NodeId id = nodes_[i].id;
    if (id < 0) {
      bad.push_back({ViolationKind::kNegativeNodeId, id,
                     "negative node id " + std::to_string(id)});
    }
    if (!node_index_.emplace(id, static_cast<NodeIndex>(i)).second) {
      bad.push_back({ViolationKind::kDuplicateNode, id,
                     "duplicate node id " + std::to_string(id)});
    }
  }

  edge_index_.reserve(edges_.size());
  arc_tail_.assign(2 * edges_.size(), -1);
  std::vector<std::size_t> degree(nodes_.size(), 0);
  std::vector<bool> indexed(edges_.size(), false);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const EdgeSpec& e = edges_[i];
    const std::string tag = "edge " + std::to_string(e.id);
    if (e.id < 0) {
      bad.push_back({ViolationKind::kNegativeEdgeId, e.id, "negative edge id " + std::to_string(e.id)});
    }
    if (!edge_index_.emplace(e.id, i).second) {
      bad.push_back({ViolationKind::kDuplicateEdge, e.id, "duplicate " + tag});
    }
    if (e.cap_ab < 0 || e.cap_ba < 0) {
      bad.push_back({ViolationKind::kCapacityNegative, e.id, "negative capacity at " + tag});
    }
    if (e.cap_ab > capacity_bound_ || e.cap_ba > capacity_bound_) {
      bad.push_back({ViolationKind::kCapacityAboveBound, e.id, "capacity above M at " + tag});
    }
    const auto ia = node_index_.find(e.a);
    const auto ib = node_index_.find(e.b);
    if (ia == node_index_.end() || ib == node_index_.end()) {
      bad.push_back({ViolationKind::kUnknownEndpoint, e.id, "unknown endpoint at " + tag});
      continue;
    }
    if (e.a == e.b) {
      bad.push_back({ViolationKind::kSelfLoop, e.id, "self-loop at " + tag});
      continue;
    }
    arc_tail_[2 * i] = ia->second;
    arc_tail_[2 * i + 1] = ib->second;
    ++degree[ia->second];
    ++degree[ib->second];
    indexed[i] = true;
  }

  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (degree_bound_ >= 1 && degree[v] > static_cast<std::size_t>(degree_bound_)) {
      bad.push_back({ViolationKind::kDegreeExceeded, nodes_[v].id,
                     "degree bound exceeded at node " + std::to_string(nodes_[v].id)});
    }
  }

  adjacency_begin_.assign(nodes_.size() + 1, 0);
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    adjacency_begin_[v + 1] = adjacency_begin_[v] + degree[v];
  }
  adjacency_.assign(adjacency_begin_.back(), 0);
  std::vector<std::size_t> fill(adjacency_begin_.begin(), adjacency_begin_.end() - 1);
  // Visiting edges by increasing id makes every adjacency list id-ordered.
  std::vector<std::size_t> by_id(edges_.size());
  std::iota(by_id.begin(), by_id.end(), 0);
  std::stable_sort(by_id.begin(), by_id.end(), [&](std::size_t x, std::size_t y) {
    return edges_[x].id < edges_[y].id;
  });
  for (std::size_t i : by_id) {
    if (!indexed[i]) continue;
    const auto a = static_cast<ArcIndex>(2 * i);
    adjacency_[fill[arc_tail_[a]]++] = a;
    adjacency_[fill[arc_tail_[a + 1]]++] = a + 1;
  }
}

std::optional<NodeIndex> ColoredGraph::find_node(NodeId id) const {
  const auto it = node_index_.find(id);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ColoredGraph::find_edge(EdgeId id) const {
  const auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArcIndex> ColoredGraph::find_arc(const DirectedEdgeRef& e) const {
  const auto i = find_edge(e.edge);
  if (!i) return std::nullopt;
  return static_cast<ArcIndex>(2 * *i + (e.orientation == Orientation::kAB ? 0 : 1));
}

std::size_t ColoredGraph::count(Color c) const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [c](const NodeSpec& n) { return n.color == c; }));
}

Flow Flow::from_edge_values(const ColoredGraph& g,
                            std::span<const std::pair<EdgeId, Ticks>> values) {
  Flow f(g);
  std::vector<bool> seen(g.edge_count(), false);
  for (const auto& [id, value] : values) {
    const auto i = g.find_edge(id);
    if (!i) throw PreconditionError("flow keyed on unknown edge " + std::to_string(id));
    if (seen[*i]) throw PreconditionError("flow lists edge " + std::to_string(id) + " twice");
    seen[*i] = true;
    f.f_ab_[*i] = value;
  }
  return f;
}

Ticks Flow::at(const ColoredGraph& g, const DirectedEdgeRef& e) const {
  const auto a = g.find_arc(e);
  if (!a) throw PreconditionError("unknown edge " + std::to_string(e.edge));
  return on_arc(*a);
}

ValidationReport validate_graph(const ColoredGraph& g) { return g.validation(); }

void require_valid(const ColoredGraph& g) {
  if (!g.valid()) {
    throw PreconditionError("invalid graph: " + g.validation().violations.front().message);
  }
}

std::vector<DirectedEdgeRef> out_edges(const ColoredGraph& g, NodeId v) {
  const auto idx = g.find_node(v);
  if (!idx) throw PreconditionError("unknown node " + std::to_string(v));
  std::vector<DirectedEdgeRef> out;
  for (ArcIndex a : g.arcs_from(*idx)) out.push_back(g.arc_ref(a));
  return out;
}

std::vector<int> hop_distances(const ColoredGraph& g, std::span<const NodeIndex> sources,
                               int max_radius) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeIndex> queue;
  queue.reserve(g.node_count());
  for (NodeIndex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeIndex v = queue[head];
    if (dist[v] >= max_radius) continue;
    for (ArcIndex a : g.arcs_from(v)) {
      const NodeIndex w = g.head(a);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

NeighborhoodView neighborhood(const ColoredGraph& g, const NeighborhoodCenter& center,
                              int radius) {
  if (radius < 0) throw PreconditionError("negative neighborhood radius");
  std::vector<NodeIndex> sources;
  if (const auto* v = std::get_if<NodeId>(&center)) {
    const auto idx = g.find_node(*v);
    if (!idx) throw PreconditionError("unknown center node " + std::to_string(*v));
    sources.push_back(*idx);
  } else {
    const auto& e = std::get<DirectedEdgeRef>(center);
    const auto a = g.find_arc(e);
    if (!a || g.tail(*a) < 0 || g.head(*a) < 0) {
      throw PreconditionError("unknown center edge " + std::to_string(e.edge));
    }
    sources.push_back(g.tail(*a));
    sources.push_back(g.head(*a));
  }
  const std::vector<int> dist = hop_distances(g, sources, radius);

  std::vector<NodeSpec> nodes;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (dist[v] >= 0) nodes.push_back(g.nodes()[v]);
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto a = static_cast<ArcIndex>(2 * i);
    const NodeIndex x = g.tail(a);
    const NodeIndex y = g.head(a);
    if (x >= 0 && y >= 0 && dist[x] >= 0 && dist[y] >= 0) edges.push_back(g.edges()[i]);
  }
  return {center, radius,
          ColoredGraph(std::move(nodes), std::move(edges), g.degree_bound(),
                       g.capacity_bound(), g.quantum())};
}

namespace {

// Shared checker: edge values are sum_ab / m with m > 0.
ValidationReport check_flow(const ColoredGraph& g, std::span<const Ticks> sum_ab,
                            std::int64_t m) {
  if (sum_ab.size() != g.edge_count()) {
    throw PreconditionError("flow is keyed on a different edge set than the graph");
  }
  ValidationReport report;
  auto& bad = report.violations;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeSpec& e = g.edges()[i];
    if (sum_ab[i] > m * e.cap_ab || -sum_ab[i] > m * e.cap_ba) {
      bad.push_back({ViolationKind::kCapacityExceeded, e.id,
                     "capacity exceeded at edge " + std::to_string(e.id)});
    }
  }
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    Ticks net = 0;
    for (ArcIndex a : g.arcs_from(static_cast<NodeIndex>(v))) {
      const Ticks x = sum_ab[ColoredGraph::edge_of(a)];
      net += ColoredGraph::is_ab(a) ? x : -x;
    }
    const NodeSpec& node = g.nodes()[v];
    const std::string tag = "node " + std::to_string(node.id);
    switch (node.color) {
      case Color::kRegular:
        if (net != 0) bad.push_back({ViolationKind::kConservation, node.id, "conservation violated at " + tag});
        break;
      case Color::kSource:
        if (net < 0) bad.push_back({ViolationKind::kSourceInflow, node.id, "net inflow at source " + tag});
        break;
      case Color::kTarget:
        if (net > 0) bad.push_back({ViolationKind::kTargetOutflow, node.id, "net outflow at target " + tag});
        break;
    }
  }
  return report;
}

Ticks source_outflow(const ColoredGraph& g, std::span<const Ticks> sum_ab) {
  Ticks total = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (g.nodes()[v].color != Color::kSource) continue;
    for (ArcIndex a : g.arcs_from(static_cast<NodeIndex>(v))) {
      const Ticks x = sum_ab[ColoredGraph::edge_of(a)];
      total += ColoredGraph::is_ab(a) ? x : -x;
    }
  }
  return total;
}

}  // namespace

ValidationReport validate_flow(const ColoredGraph& g, const Flow& f) {
  return check_flow(g, f.values(), 1);
}

ValidationReport validate_flow(const ColoredGraph& g, const ScaledFlow& f) {
  if (f.m <= 0) throw PreconditionError("scaled flow needs a positive denominator");
  return check_flow(g, f.sum_ab, f.m);
}

Ticks flow_value(const ColoredGraph& g, const Flow& f) {
  const auto report = validate_flow(g, f);
  if (!report.ok()) throw PreconditionError("invalid flow: " + report.violations.front().message);
  return source_outflow(g, f.values());
}

Rational flow_value(const ColoredGraph& g, const ScaledFlow& f) {
  const auto report = validate_flow(g, f);
  if (!report.ok()) throw PreconditionError("invalid flow: " + report.violations.front().message);
  return Rational(source_outflow(g, f.sum_ab), f.m);
}

}  // namespace localflow
