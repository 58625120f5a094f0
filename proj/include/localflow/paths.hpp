#pragma once

// Candidate augmenting paths, their seeded ordering keys and chain depths.
//
// A candidate is a vertex-simple directed path of at most l edges from an S
// node to a T node. Paths are ordered by (length, label hash, canonical key);
// the hash is a pure function of the seed and the path's node/edge ids, so a
// path gets the same key in any subgraph that keeps the original ids.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "localflow/graph.hpp"

namespace localflow {

enum class InteriorPolicy : std::uint8_t {
  kAnyColor,     // interior nodes may be S or T
  kRegularOnly,  // interior nodes must be R
};

// node_0, edge_0, node_1, ..., edge_{k-1}, node_k (original ids). Injective
// even with parallel edges.
using CanonicalKey = std::vector<std::int64_t>;

struct AugPathCandidate {
  std::vector<NodeId> nodes;
  std::vector<DirectedEdgeRef> edges;

  int length() const { return static_cast<int>(edges.size()); }
  CanonicalKey canonical_key() const;
  bool operator==(const AugPathCandidate&) const = default;
};

struct OrderKey {
  int length = 0;
  std::uint64_t hash_label = 0;
  CanonicalKey tiebreak;

  auto operator<=>(const OrderKey&) const = default;
};

// Flat storage of paths as arc sequences of one graph.
class PathSet {
 public:
  PathSet() : offsets_{0} {}

  std::size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }
  int length(std::size_t i) const { return static_cast<int>(offsets_[i + 1] - offsets_[i]); }
  std::span<const ArcIndex> arcs(std::size_t i) const {
    return {arcs_.data() + offsets_[i], arcs_.data() + offsets_[i + 1]};
  }
  std::size_t total_arcs() const { return arcs_.size(); }

  void add(std::span<const ArcIndex> path);
  PathSet subset(std::span<const std::size_t> indices) const;

  AugPathCandidate candidate(const ColoredGraph& g, std::size_t i) const;
  CanonicalKey canonical_key(const ColoredGraph& g, std::size_t i) const;

 private:
  std::vector<ArcIndex> arcs_;
  std::vector<std::size_t> offsets_;
};

// All candidate paths with 1..l edges. Capacities are not consulted. Throws
// PreconditionError on an invalid graph or l < 1.
PathSet enumerate_paths(const ColoredGraph& g, int l,
                        InteriorPolicy interior = InteriorPolicy::kAnyColor);

std::uint64_t label_hash(std::span<const std::int64_t> canonical_key, std::uint64_t seed);
OrderKey path_key(const AugPathCandidate& u, std::uint64_t seed);

bool intersects(const AugPathCandidate& u, const AugPathCandidate& v);

// Paths with their labels and the permutation that sorts them by OrderKey.
struct LabeledPaths {
  PathSet paths;
  std::vector<std::uint64_t> labels;  // aligned with paths
  std::vector<std::uint32_t> order;   // path indices by increasing key
  std::uint64_t seed = 0;

  OrderKey key(const ColoredGraph& g, std::size_t i) const {
    return {paths.length(i), labels[i], paths.canonical_key(g, i)};
  }
};

LabeledPaths label_paths(const ColoredGraph& g, PathSet paths, std::uint64_t seed);

// depth(u) = 1 + max{depth(v) : v intersects u, key(v) < key(u)}; the
// length of the longest chain whose first (largest-key) element is u.
struct ChainDepthTable {
  std::vector<int> depth;  // aligned with the path set
  int max_depth() const;
};

ChainDepthTable chain_depth_all(const ColoredGraph& g, const LabeledPaths& labeled);
ChainDepthTable chain_depth_all(const ColoredGraph& g, const PathSet& paths,
                                std::uint64_t seed);

// min over the path's arcs of c(e) - f(e). Throws PreconditionError when f
// is not valid for g or the path is not a path of g.
Ticks residual_capacity(const ColoredGraph& g, const Flow& f, const AugPathCandidate& u);
Ticks residual_capacity(const ColoredGraph& g, const Flow& f, std::span<const ArcIndex> arcs);

// Saturating |S| * d^l, the branching bound on the number of candidates.
std::uint64_t path_count_bound(const ColoredGraph& g, int l);

}  // namespace localflow
