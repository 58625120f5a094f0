#pragma once

#include <optional>
#include <vector>

#include "localflow/graph.hpp"

namespace localflow {

struct MaxFlowResult {
  Flow flow;
  Ticks value = 0;
  // Nodes reachable from S in the residual graph of `flow`, ascending ids.
  std::vector<NodeId> residual_cut;
};

// Exact maximum flow over all valid multisource-multitarget flows. S and T
// are wired to a virtual source/sink; augmentation is along shortest residual
// paths, one BFS level graph at a time. Throws PreconditionError on an
// invalid graph.
MaxFlowResult max_flow(const ColoredGraph& g);

// Edge count of the shortest directed S->T path in the residual graph
// {e : f(e) < c(e)}; nullopt when there is none of length <= l_max
// (l_max = nullopt means unbounded). Throws PreconditionError if f is not a
// valid flow of g.
std::optional<int> shortest_augmenting_path_length(const ColoredGraph& g, const Flow& f,
                                                   std::optional<int> l_max = std::nullopt);

// Same search without re-validating f; for callers that maintain validity.
std::optional<int> shortest_residual_path_length(const ColoredGraph& g, const Flow& f,
                                                 std::optional<int> l_max);

// Sum of c(e) over arcs leaving `side` into its complement.
Ticks cut_capacity(const ColoredGraph& g, const std::vector<NodeId>& side);

}  // namespace localflow
