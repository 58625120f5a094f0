#include "localflow/generators.hpp"

#include <cmath>
#include <numeric>

#include "localflow/errors.hpp"
#include "localflow/hash.hpp"

namespace localflow {

const char* to_string(Family f) {
  switch (f) {
    case Family::kPathBundle: return "path_bundle";
    case Family::kGrid: return "grid";
    case Family::kRandomBounded: return "random_bounded";
    case Family::kLayered: return "layered";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "path_bundle") return Family::kPathBundle;
  if (name == "grid") return Family::kGrid;
  if (name == "random_bounded") return Family::kRandomBounded;
  if (name == "layered") return Family::kLayered;
  throw InputError("unknown instance family '" + name + "'");
}

namespace {

class Builder {
 public:
  Builder(const InstanceSpec& spec, std::uint64_t stream)
      : spec_(spec), rng_(mix64(spec.gen_seed) ^ stream) {}

  NodeId add_node(Color c) {
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({id, c});
    degree_.push_back(0);
    return id;
  }

  Color coin_color() {
    const double u = rng_.unit();
    if (u < spec_.rho_s) return Color::kSource;
    if (u < spec_.rho_s + spec_.rho_t) return Color::kTarget;
    return Color::kRegular;
  }

  Ticks random_cap() { return random_in(spec_.min_cap, spec_.m_ticks); }
  Ticks random_in(Ticks lo, Ticks hi) {
    return lo + static_cast<Ticks>(rng_.below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool can_link(NodeId a, NodeId b) const {
    return a != b && degree_[a] < spec_.d && degree_[b] < spec_.d;
  }

  void add_edge(NodeId a, NodeId b, Ticks cap_ab, Ticks cap_ba) {
    edges_.push_back({static_cast<EdgeId>(edges_.size()), a, b, cap_ab, cap_ba});
    ++degree_[a];
    ++degree_[b];
  }

  void add_random_edge(NodeId a, NodeId b) {
    const Ticks ab = random_cap();
    add_edge(a, b, ab, random_cap());
  }

  NodeId node_count() const { return static_cast<NodeId>(nodes_.size()); }
  SplitMix64& rng() { return rng_; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[rng_.below(i)]);
    }
  }

  ColoredGraph finish() {
    return ColoredGraph(std::move(nodes_), std::move(edges_), spec_.d, spec_.m_ticks,
                        spec_.quantum);
  }

 private:
  const InstanceSpec& spec_;
  SplitMix64 rng_;
  std::vector<NodeSpec> nodes_;
  std::vector<EdgeSpec> edges_;
  std::vector<int> degree_;
};

void check_common(const InstanceSpec& spec) {
  if (spec.d < 1) throw InputError("degree bound d must be positive");
  if (spec.m_ticks < 1) throw InputError("capacity bound M must be positive");
  if (spec.quantum <= 0) throw InputError("quantum must be positive");
  if (spec.min_cap < 0 || spec.min_cap > spec.m_ticks) {
    throw InputError("min_cap must lie in [0, M]");
  }
  if (spec.rho_s < 0 || spec.rho_t < 0 || spec.rho_s + spec.rho_t > 1) {
    throw InputError("color fractions must be non-negative with rho_S + rho_T <= 1");
  }
}

Instance path_bundle(const InstanceSpec& spec) {
  if (spec.bottlenecks.empty()) throw InputError("path_bundle needs at least one bottleneck");
  if (spec.path_length < 1) throw InputError("path_bundle path_length must be positive");
  if (spec.d < 2 && spec.path_length > 1) throw InputError("path_bundle needs d >= 2");
  Builder b(spec, 0x70617468ULL);
  Ticks known = 0;
  for (const Ticks c : spec.bottlenecks) {
    if (c < 0 || c > spec.m_ticks) throw InputError("bottleneck outside [0, M]");
    known += c;
    std::vector<NodeId> chain{b.add_node(Color::kSource)};
    for (int i = 1; i < spec.path_length; ++i) chain.push_back(b.add_node(Color::kRegular));
    chain.push_back(b.add_node(Color::kTarget));
    const auto tight = static_cast<int>(b.rng().below(static_cast<std::uint64_t>(spec.path_length)));
    for (int i = 0; i < spec.path_length; ++i) {
      const Ticks forward = i == tight ? c : b.random_in(c, spec.m_ticks);
      b.add_edge(chain[i], chain[i + 1], forward, b.random_cap());
    }
  }
  return {b.finish(), {to_string(spec.family), spec.gen_seed, known}};
}

Instance grid(const InstanceSpec& spec) {
  if (spec.d < 4) throw InputError("grid needs d >= 4");
  int w = spec.width;
  int h = spec.height;
  if (w <= 0 || h <= 0) {
    if (spec.n < 1) throw InputError("grid needs n >= 1 or explicit width/height");
    w = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(spec.n)))));
    h = std::max(1, (spec.n + w - 1) / w);
  }
  Builder b(spec, 0x67726964ULL);
  for (int i = 0; i < w * h; ++i) b.add_node(b.coin_color());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const NodeId v = y * w + x;
      if (x + 1 < w) b.add_random_edge(v, v + 1);
      if (y + 1 < h) b.add_random_edge(v, v + w);
    }
  }
  return {b.finish(), {to_string(spec.family), spec.gen_seed, std::nullopt}};
}

Instance random_bounded(const InstanceSpec& spec) {
  if (spec.n < 1) throw InputError("random_bounded needs n >= 1");
  Builder b(spec, 0x72616e64ULL);
  for (int i = 0; i < spec.n; ++i) b.add_node(b.coin_color());
  const int rounds = spec.rounds > 0 ? spec.rounds : spec.d;
  std::vector<NodeId> perm(static_cast<std::size_t>(spec.n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int r = 0; r < rounds; ++r) {
    b.shuffle(perm);
    for (std::size_t i = 0; i + 1 < perm.size(); i += 2) {
      if (b.can_link(perm[i], perm[i + 1])) b.add_random_edge(perm[i], perm[i + 1]);
    }
  }
  return {b.finish(), {to_string(spec.family), spec.gen_seed, std::nullopt}};
}

Instance layered(const InstanceSpec& spec) {
  const int layers = spec.layers > 0 ? spec.layers : 4;
  if (layers < 2) throw InputError("layered needs at least two layers");
  if (spec.n < layers) throw InputError("layered needs n >= layers");
  if (spec.d < 2) throw InputError("layered needs d >= 2");
  const int width = spec.n / layers;
  Builder b(spec, 0x6c617965ULL);
  std::vector<std::vector<NodeId>> layer(static_cast<std::size_t>(layers));
  for (int k = 0; k < layers; ++k) {
    const Color c = k == 0 ? Color::kSource : (k == layers - 1 ? Color::kTarget : Color::kRegular);
    for (int i = 0; i < width; ++i) layer[k].push_back(b.add_node(c));
  }
  // Random matchings between consecutive layers, half the degree budget to
  // each side, plus one intra-layer matching for the regular layers.
  const int rounds = std::max(1, spec.d / 2);
  for (int k = 0; k + 1 < layers; ++k) {
    for (int r = 0; r < rounds; ++r) {
      std::vector<NodeId> next = layer[k + 1];
      b.shuffle(next);
      for (int i = 0; i < width; ++i) {
        if (b.can_link(layer[k][i], next[i])) b.add_random_edge(layer[k][i], next[i]);
      }
    }
  }
  for (int k = 1; k + 1 < layers; ++k) {
    std::vector<NodeId> perm = layer[k];
    b.shuffle(perm);
    for (std::size_t i = 0; i + 1 < perm.size(); i += 2) {
      if (b.can_link(perm[i], perm[i + 1])) b.add_random_edge(perm[i], perm[i + 1]);
    }
  }
  return {b.finish(), {to_string(spec.family), spec.gen_seed, std::nullopt}};
}

}  // namespace

Instance generate(const InstanceSpec& spec) {
  check_common(spec);
  switch (spec.family) {
    case Family::kPathBundle: return path_bundle(spec);
    case Family::kGrid: return grid(spec);
    case Family::kRandomBounded: return random_bounded(spec);
    case Family::kLayered: return layered(spec);
  }
  throw InputError("unknown family");
}

}  // namespace localflow
