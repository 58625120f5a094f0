#pragma once

// Slow reference implementations used only by tests. None of them share code
// paths with the library beyond the graph container and the label hash.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "localflow/graph.hpp"
#include "localflow/paths.hpp"

namespace oracle {

using namespace localflow;

// A directed edge as read straight from the edge list.
struct Arc {
  NodeId from;
  NodeId to;
  EdgeId edge;
  bool ab;
  Ticks cap;
};

inline std::vector<Arc> arcs_of(const ColoredGraph& g) {
  std::vector<Arc> out;
  for (const auto& e : g.edges()) {
    out.push_back({e.a, e.b, e.id, true, e.cap_ab});
    out.push_back({e.b, e.a, e.id, false, e.cap_ba});
  }
  return out;
}

inline std::map<NodeId, Color> colors_of(const ColoredGraph& g) {
  std::map<NodeId, Color> c;
  for (const auto& v : g.nodes()) c[v.id] = v.color;
  return c;
}

// Undirected hop distances between every pair, by Floyd-Warshall.
inline std::map<std::pair<NodeId, NodeId>, int> all_pairs_hops(const ColoredGraph& g) {
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<NodeId> ids;
  for (const auto& v : g.nodes()) ids.push_back(v.id);
  const std::size_t n = ids.size();
  std::map<NodeId, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[ids[i]] = i;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  for (const auto& e : g.edges()) {
    dist[at[e.a]][at[e.b]] = std::min(dist[at[e.a]][at[e.b]], 1);
    dist[at[e.b]][at[e.a]] = std::min(dist[at[e.b]][at[e.a]], 1);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  std::map<std::pair<NodeId, NodeId>, int> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dist[i][j] < inf) out[{ids[i], ids[j]}] = dist[i][j];
  return out;
}

// Paths as node_0, edge_0, ..., node_k id sequences, grown breadth-first by
// length over the raw edge list.
inline std::set<std::vector<std::int64_t>> brute_paths(const ColoredGraph& g, int l,
                                                       bool regular_interior) {
  const auto color = colors_of(g);
  const auto arcs = arcs_of(g);
  std::set<std::vector<std::int64_t>> found;
  std::vector<std::vector<std::int64_t>> frontier;
  for (const auto& [id, c] : color)
    if (c == Color::kSource) frontier.push_back({id});
  for (int len = 1; len <= l; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& p : frontier) {
      const NodeId last = p.back();
      if (p.size() > 1 && regular_interior && color.at(last) != Color::kRegular) continue;
      for (const Arc& a : arcs) {
        if (a.from != last) continue;
        bool seen = false;
        for (std::size_t i = 0; i < p.size(); i += 2) seen |= p[i] == a.to;
        if (seen) continue;
        auto q = p;
        q.push_back(a.edge);
        q.push_back(a.to);
        if (color.at(a.to) == Color::kTarget) found.insert(q);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return found;
}

// Our own flow checker: capacity, conservation at R, sign constraints at S/T.
inline bool flow_ok(const ColoredGraph& g, const std::map<EdgeId, Ticks>& f) {
  std::map<NodeId, Ticks> net_out;
  for (const auto& e : g.edges()) {
    const Ticks v = f.count(e.id) ? f.at(e.id) : 0;
    if (v > e.cap_ab || -v > e.cap_ba) return false;
    net_out[e.a] += v;
    net_out[e.b] -= v;
  }
  for (const auto& v : g.nodes()) {
    const Ticks out = net_out[v.id];
    if (v.color == Color::kRegular && out != 0) return false;
    if (v.color == Color::kSource && out < 0) return false;
    if (v.color == Color::kTarget && out > 0) return false;
  }
  return true;
}

inline Ticks value_of(const ColoredGraph& g, const std::map<EdgeId, Ticks>& f) {
  const auto color = colors_of(g);
  Ticks total = 0;
  for (const auto& e : g.edges()) {
    const Ticks v = f.count(e.id) ? f.at(e.id) : 0;
    if (color.at(e.a) == Color::kSource) total += v;
    if (color.at(e.b) == Color::kSource) total -= v;
  }
  return total;
}

// Minimum over X with S inside and T outside of the capacity leaving X.
// Exponential in |R|.
inline Ticks min_cut_brute(const ColoredGraph& g) {
  std::vector<NodeId> regular;
  std::map<NodeId, Color> color = colors_of(g);
  for (const auto& [id, c] : color)
    if (c == Color::kRegular) regular.push_back(id);
  Ticks best = std::numeric_limits<Ticks>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << regular.size()); ++mask) {
    std::set<NodeId> side;
    for (const auto& [id, c] : color)
      if (c == Color::kSource) side.insert(id);
    for (std::size_t i = 0; i < regular.size(); ++i)
      if (mask >> i & 1) side.insert(regular[i]);
    Ticks cut = 0;
    for (const Arc& a : arcs_of(g))
      if (side.count(a.from) && !side.count(a.to)) cut += a.cap;
    best = std::min(best, cut);
  }
  return best;
}

// Maximum value over every integer assignment of f_ab in [-cap_ba, cap_ab].
inline Ticks max_flow_exhaustive(const ColoredGraph& g) {
  const auto& edges = g.edges();
  std::map<EdgeId, Ticks> f;
  Ticks best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == edges.size()) {
      if (flow_ok(g, f)) best = std::max(best, value_of(g, f));
      return;
    }
    for (Ticks v = -edges[i].cap_ba; v <= edges[i].cap_ab; ++v) {
      f[edges[i].id] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

inline std::uint64_t assignment_count(const ColoredGraph& g) {
  std::uint64_t total = 1;
  for (const auto& e : g.edges()) {
    const std::uint64_t choices = static_cast<std::uint64_t>(e.cap_ab + e.cap_ba + 1);
    if (total > (std::uint64_t{1} << 40) / choices) return std::numeric_limits<std::uint64_t>::max();
    total *= choices;
  }
  return total;
}

// Longest chain (strictly decreasing keys, consecutive paths share an edge
// id) starting at each path, by exhaustive depth-first search.
struct ChainPath {
  int length;
  std::uint64_t label;
  std::vector<std::int64_t> key;  // canonical key
  std::set<EdgeId> edges;
};

inline ChainPath chain_path(const AugPathCandidate& u, std::uint64_t seed) {
  ChainPath p;
  p.length = u.length();
  p.key = u.canonical_key();
  p.label = label_hash(p.key, seed);
  for (const auto& e : u.edges) p.edges.insert(e.edge);
  return p;
}

inline bool key_less(const ChainPath& a, const ChainPath& b) {
  return std::tie(a.length, a.label, a.key) < std::tie(b.length, b.label, b.key);
}

inline bool share_edge(const ChainPath& a, const ChainPath& b) {
  for (EdgeId e : a.edges)
    if (b.edges.count(e)) return true;
  return false;
}

inline std::vector<int> brute_chain_depths(const std::vector<ChainPath>& paths) {
  std::function<int(std::size_t)> longest = [&](std::size_t i) {
    int best = 1;
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (key_less(paths[j], paths[i]) && share_edge(paths[i], paths[j])) {
        best = std::max(best, 1 + longest(j));
      }
    }
    return best;
  };
  std::vector<int> out;
  for (std::size_t i = 0; i < paths.size(); ++i) out.push_back(longest(i));
  return out;
}

// Number of chains the exhaustive search would walk; used to skip
// infeasible cases.
inline double chain_walk_count(const std::vector<ChainPath>& paths) {
  std::vector<std::size_t> order(paths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key_less(paths[a], paths[b]); });
  std::vector<double> walks(paths.size(), 1);
  double total = 0;
  for (std::size_t x = 0; x < order.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y)
      if (share_edge(paths[order[x]], paths[order[y]])) walks[order[x]] += walks[order[y]];
    total += walks[order[x]];
  }
  return total;
}

}  // namespace oracle
