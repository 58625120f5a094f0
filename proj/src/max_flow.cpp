#include "localflow/max_flow.hpp"

#include <algorithm>
#include <limits>

#include "localflow/errors.hpp"

namespace localflow {
namespace {

// Residual network over the graph's arcs plus a virtual source wired to
// every S node and a virtual sink wired from every T node.
class ResidualNetwork {
 public:
  explicit ResidualNetwork(const ColoredGraph& g) : g_(g) {
    const auto n = static_cast<NodeIndex>(g.node_count());
    source_ = n;
    sink_ = n + 1;
    const Ticks inf = static_cast<Ticks>(g.degree_bound()) * g.capacity_bound() *
                          static_cast<Ticks>(std::max<std::size_t>(g.node_count(), 1)) +
                      1;
    to_.reserve(2 * g.edge_count() + 2 * g.node_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto a = static_cast<ArcIndex>(2 * i);
      to_.push_back(g.head(a));
      to_.push_back(g.tail(a));
      residual_.push_back(g.capacity(a));
      residual_.push_back(g.capacity(a + 1));
    }
    for (NodeIndex v = 0; v < n; ++v) {
      if (g.color(v) == Color::kSource) add_pair(source_, v, inf);
      if (g.color(v) == Color::kTarget) add_pair(v, sink_, inf);
    }
    adj_begin_.assign(static_cast<std::size_t>(n) + 3, 0);
    for (std::size_t a = 0; a < to_.size(); ++a) ++adj_begin_[tail_of(static_cast<ArcIndex>(a)) + 1];
    for (std::size_t v = 1; v < adj_begin_.size(); ++v) adj_begin_[v] += adj_begin_[v - 1];
    adj_.assign(to_.size(), 0);
    std::vector<std::size_t> fill(adj_begin_.begin(), adj_begin_.end() - 1);
    for (std::size_t a = 0; a < to_.size(); ++a) {
      adj_[fill[tail_of(static_cast<ArcIndex>(a))]++] = static_cast<ArcIndex>(a);
    }
  }

  Ticks run() {
    Ticks total = 0;
    while (build_levels()) {
      current_.assign(adj_begin_.begin(), adj_begin_.end() - 1);
      while (const Ticks pushed = augment_once()) total += pushed;
    }
    return total;
  }

  Flow flow() const {
    Flow f(g_);
    for (std::size_t i = 0; i < g_.edge_count(); ++i) {
      const auto a = static_cast<ArcIndex>(2 * i);
      f.push(a, g_.capacity(a) - residual_[a]);
    }
    return f;
  }

  std::vector<NodeId> source_side() const {
    std::vector<bool> seen(adj_begin_.size() - 1, false);
    std::vector<NodeIndex> queue{source_};
    seen[source_] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (std::size_t k = adj_begin_[queue[h]]; k < adj_begin_[queue[h] + 1]; ++k) {
        const ArcIndex a = adj_[k];
        if (residual_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = true;
          queue.push_back(to_[a]);
        }
      }
    }
    std::vector<NodeId> side;
    for (NodeIndex v = 0; v < source_; ++v) {
      if (seen[v]) side.push_back(g_.node_id(v));
    }
    std::sort(side.begin(), side.end());
    return side;
  }

 private:
  NodeIndex tail_of(ArcIndex a) const { return to_[a ^ 1]; }

  void add_pair(NodeIndex from, NodeIndex to, Ticks cap) {
    to_.push_back(to);
    to_.push_back(from);
    residual_.push_back(cap);
    residual_.push_back(0);
  }

  bool build_levels() {
    level_.assign(adj_begin_.size() - 1, -1);
    std::vector<NodeIndex> queue{source_};
    level_[source_] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const NodeIndex v = queue[h];
      for (std::size_t k = adj_begin_[v]; k < adj_begin_[v + 1]; ++k) {
        const ArcIndex a = adj_[k];
        if (residual_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  // One source->sink path in the level graph, found with current-arc
  // pointers; returns the amount pushed (0 when the level graph is blocked).
  Ticks augment_once() {
    std::vector<ArcIndex>& path = path_;
    path.clear();
    NodeIndex v = source_;
    while (v != sink_) {
      bool advanced = false;
      for (std::size_t& k = current_[v]; k < adj_begin_[v + 1]; ++k) {
        const ArcIndex a = adj_[k];
        if (residual_[a] > 0 && level_[to_[a]] == level_[v] + 1) {
          path.push_back(a);
          v = to_[a];
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (v == source_) return 0;
      level_[v] = -1;  // dead end
      const ArcIndex back = path.back();
      path.pop_back();
      v = tail_of(back);
      ++current_[v];
    }
    Ticks amount = std::numeric_limits<Ticks>::max();
    for (ArcIndex a : path) amount = std::min(amount, residual_[a]);
    for (ArcIndex a : path) {
      residual_[a] -= amount;
      residual_[a ^ 1] += amount;
    }
    return amount;
  }

  const ColoredGraph& g_;
  NodeIndex source_ = 0;
  NodeIndex sink_ = 0;
  std::vector<NodeIndex> to_;
  std::vector<Ticks> residual_;
  std::vector<std::size_t> adj_begin_;
  std::vector<ArcIndex> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> current_;
  std::vector<ArcIndex> path_;
};

}  // namespace

MaxFlowResult max_flow(const ColoredGraph& g) {
  require_valid(g);
  ResidualNetwork net(g);
  const Ticks pushed = net.run();
  MaxFlowResult result{net.flow(), pushed, net.source_side()};
  if (flow_value(g, result.flow) != pushed) {
    throw std::logic_error("max_flow: pushed amount disagrees with flow value");
  }
  return result;
}

std::optional<int> shortest_residual_path_length(const ColoredGraph& g, const Flow& f,
                                                 std::optional<int> l_max) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeIndex> queue;
  queue.reserve(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (g.nodes()[v].color == Color::kSource) {
      dist[v] = 0;
      queue.push_back(static_cast<NodeIndex>(v));
    }
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const NodeIndex v = queue[h];
    if (l_max && dist[v] >= *l_max) break;  // BFS order: the rest are no closer
    for (ArcIndex a : g.arcs_from(v)) {
      if (f.on_arc(a) >= g.capacity(a)) continue;
      const NodeIndex w = g.head(a);
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      if (g.color(w) == Color::kTarget) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::optional<int> shortest_augmenting_path_length(const ColoredGraph& g, const Flow& f,
                                                   std::optional<int> l_max) {
  const auto report = validate_flow(g, f);
  if (!report.ok()) throw PreconditionError("invalid flow: " + report.violations.front().message);
  return shortest_residual_path_length(g, f, l_max);
}

Ticks cut_capacity(const ColoredGraph& g, const std::vector<NodeId>& side) {
  std::vector<bool> in(g.node_count(), false);
  for (NodeId id : side) {
    const auto v = g.find_node(id);
    if (!v) throw PreconditionError("unknown node " + std::to_string(id));
    in[*v] = true;
  }
  Ticks total = 0;
  for (std::size_t i = 0; i < 2 * g.edge_count(); ++i) {
    const auto a = static_cast<ArcIndex>(i);
    if (g.tail(a) < 0) continue;
    if (in[g.tail(a)] && !in[g.head(a)]) total += g.capacity(a);
  }
  return total;
}

}  // namespace localflow
