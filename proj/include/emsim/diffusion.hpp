#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "emsim/graph.hpp"
#include "emsim/rng.hpp"

namespace emsim {

struct ActivationResult {
  std::vector<NodeId> activated;  // sorted ascending; always contains the seeds
  int rounds = 0;                 // diffusion steps that activated someone new
};

// Independent cascade: seeds start active; when a node activates it gets one
// chance to activate each inactive out-neighbor with the edge's probability.
// The frontier is processed in ascending node id and each edge is tested at
// most once per run.  edge_tests (optional) receives per-edge test counts in
// canonical edge order -- used by tests to audit the once-per-edge contract.
ActivationResult simulate_ic(const SocialNetwork& net, std::span<const NodeId> seeds, Rng& rng,
                             std::vector<int>* edge_tests = nullptr);

// One possible world: the subgraph where each edge was kept with its
// probability.  Reachability in a live graph is distributed exactly like IC
// activation, which the tests exploit as an oracle.
struct LiveGraph {
  int n = 0;
  std::vector<std::vector<NodeId>> adj;
};

LiveGraph sample_live_graph(const SocialNetwork& net, Rng& rng);

std::vector<NodeId> reachable(const LiveGraph& g, std::span<const NodeId> seeds);

// All 2^|E| live graphs with their probabilities (they sum to 1).  Guarded:
// |E| > max_edges throws CapabilityError.
std::vector<std::pair<LiveGraph, double>> enumerate_live_graphs(const SocialNetwork& net,
                                                                int max_edges = 20);

}  // namespace emsim
