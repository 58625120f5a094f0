#include "localflow/paths.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "localflow/errors.hpp"
#include "localflow/hash.hpp"

namespace localflow {

CanonicalKey AugPathCandidate::canonical_key() const {
  CanonicalKey key;
  key.reserve(nodes.size() + edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    key.push_back(nodes[i]);
    key.push_back(edges[i].edge);
  }
  if (!nodes.empty()) key.push_back(nodes.back());
  return key;
}

void PathSet::add(std::span<const ArcIndex> path) {
  arcs_.insert(arcs_.end(), path.begin(), path.end());
  offsets_.push_back(arcs_.size());
}

PathSet PathSet::subset(std::span<const std::size_t> indices) const {
  PathSet out;
  for (std::size_t i : indices) out.add(arcs(i));
  return out;
}

AugPathCandidate PathSet::candidate(const ColoredGraph& g, std::size_t i) const {
  AugPathCandidate u;
  const auto path = arcs(i);
  u.nodes.reserve(path.size() + 1);
  u.edges.reserve(path.size());
  u.nodes.push_back(g.node_id(g.tail(path.front())));
  for (ArcIndex a : path) {
    u.edges.push_back(g.arc_ref(a));
    u.nodes.push_back(g.node_id(g.head(a)));
  }
  return u;
}

CanonicalKey PathSet::canonical_key(const ColoredGraph& g, std::size_t i) const {
  const auto path = arcs(i);
  CanonicalKey key;
  key.reserve(2 * path.size() + 1);
  for (ArcIndex a : path) {
    key.push_back(g.node_id(g.tail(a)));
    key.push_back(g.edges()[ColoredGraph::edge_of(a)].id);
  }
  key.push_back(g.node_id(g.head(path.back())));
  return key;
}

std::uint64_t path_count_bound(const ColoredGraph& g, int l) {
  std::uint64_t bound = g.count(Color::kSource);
  for (int i = 0; i < l && bound != 0; ++i) {
    const auto d = static_cast<std::uint64_t>(g.degree_bound());
    if (bound > std::numeric_limits<std::uint64_t>::max() / d) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    bound *= d;
  }
  return bound;
}

namespace {

class Enumerator {
 public:
  Enumerator(const ColoredGraph& g, int l, InteriorPolicy interior, PathSet& out)
      : g_(g), l_(l), interior_(interior), on_path_(g.node_count(), false), out_(out) {
    stack_.reserve(static_cast<std::size_t>(l));
  }

  void from(NodeIndex s) {
    on_path_[s] = true;
    extend(s);
    on_path_[s] = false;
  }

 private:
  void extend(NodeIndex v) {
    for (ArcIndex a : g_.arcs_from(v)) {
      const NodeIndex w = g_.head(a);
      if (on_path_[w]) continue;
      stack_.push_back(a);
      const Color c = g_.color(w);
      if (c == Color::kTarget) out_.add(stack_);
      const bool may_continue =
          static_cast<int>(stack_.size()) < l_ &&
          (interior_ == InteriorPolicy::kAnyColor || c == Color::kRegular);
      if (may_continue) {
        on_path_[w] = true;
        extend(w);
        on_path_[w] = false;
      }
      stack_.pop_back();
    }
  }

  const ColoredGraph& g_;
  int l_;
  InteriorPolicy interior_;
  std::vector<bool> on_path_;
  std::vector<ArcIndex> stack_;
  PathSet& out_;
};

}  // namespace

PathSet enumerate_paths(const ColoredGraph& g, int l, InteriorPolicy interior) {
  require_valid(g);
  if (l < 1) throw PreconditionError("path length bound l must be at least 1");
  PathSet out;
  Enumerator walk(g, l, interior, out);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (g.color(static_cast<NodeIndex>(v)) == Color::kSource) walk.from(static_cast<NodeIndex>(v));
  }
  if (out.size() > path_count_bound(g, l)) {
    throw std::logic_error("enumerate_paths: path count exceeds |S| * d^l");
  }
  return out;
}

std::uint64_t label_hash(std::span<const std::int64_t> canonical_key, std::uint64_t seed) {
  return sequence_hash(seed, canonical_key);
}

OrderKey path_key(const AugPathCandidate& u, std::uint64_t seed) {
  CanonicalKey key = u.canonical_key();
  const std::uint64_t h = label_hash(key, seed);
  return {u.length(), h, std::move(key)};
}

bool intersects(const AugPathCandidate& u, const AugPathCandidate& v) {
  std::unordered_set<EdgeId> ids;
  for (const auto& e : u.edges) ids.insert(e.edge);
  return std::any_of(v.edges.begin(), v.edges.end(),
                     [&](const DirectedEdgeRef& e) { return ids.contains(e.edge); });
}

LabeledPaths label_paths(const ColoredGraph& g, PathSet paths, std::uint64_t seed) {
  LabeledPaths out;
  out.seed = seed;
  out.labels.resize(paths.size());
  CanonicalKey scratch;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    scratch = paths.canonical_key(g, i);
    out.labels[i] = label_hash(scratch, seed);
  }
  out.order.resize(paths.size());
  std::iota(out.order.begin(), out.order.end(), 0u);
  std::sort(out.order.begin(), out.order.end(), [&](std::uint32_t x, std::uint32_t y) {
    const int lx = paths.length(x);
    const int ly = paths.length(y);
    if (lx != ly) return lx < ly;
    if (out.labels[x] != out.labels[y]) return out.labels[x] < out.labels[y];
    return paths.canonical_key(g, x) < paths.canonical_key(g, y);
  });
  out.paths = std::move(paths);
  return out;
}

int ChainDepthTable::max_depth() const {
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

ChainDepthTable chain_depth_all(const ColoredGraph& g, const LabeledPaths& labeled) {
  // Visiting in key order, every smaller-key path sharing an edge with u is
  // already final, so the best predecessor is the running maximum over u's
  // edges.
  std::vector<int> edge_best(g.edge_count(), 0);
  ChainDepthTable table;
  table.depth.assign(labeled.paths.size(), 0);
  for (const std::uint32_t i : labeled.order) {
    int best = 0;
    for (ArcIndex a : labeled.paths.arcs(i)) best = std::max(best, edge_best[ColoredGraph::edge_of(a)]);
    const int d = best + 1;
    table.depth[i] = d;
    for (ArcIndex a : labeled.paths.arcs(i)) {
      int& slot = edge_best[ColoredGraph::edge_of(a)];
      slot = std::max(slot, d);
    }
  }
  return table;
}

ChainDepthTable chain_depth_all(const ColoredGraph& g, const PathSet& paths, std::uint64_t seed) {
  return chain_depth_all(g, label_paths(g, paths, seed));
}

Ticks residual_capacity(const ColoredGraph& g, const Flow& f, std::span<const ArcIndex> arcs) {
  Ticks cap = std::numeric_limits<Ticks>::max();
  for (ArcIndex a : arcs) cap = std::min(cap, g.capacity(a) - f.on_arc(a));
  return cap;
}

Ticks residual_capacity(const ColoredGraph& g, const Flow& f, const AugPathCandidate& u) {
  const auto report = validate_flow(g, f);
  if (!report.ok()) throw PreconditionError("invalid flow: " + report.violations.front().message);
  if (u.edges.empty()) throw PreconditionError("empty path");
  std::vector<ArcIndex> arcs;
  for (const auto& e : u.edges) {
    const auto a = g.find_arc(e);
    if (!a) throw PreconditionError("path uses unknown edge " + std::to_string(e.edge));
    arcs.push_back(*a);
  }
  return residual_capacity(g, f, arcs);
}

}  // namespace localflow
