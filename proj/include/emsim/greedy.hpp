#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "emsim/estimation.hpp"
#include "emsim/scenario.hpp"

namespace emsim {

// The manipulator's classification of voters, computed from its limited
// knowledge: true positions only, never the per-voter perceived views.
//   manipulable (M): predicted to switch to the target if reached
//   switchers_to[c]: predicted to switch to c != current vote if reached
// Prediction replays the influence rule on true positions; under zero noise
// it coincides with the real dynamics.
struct ManipulableSet {
  std::vector<NodeId> manipulable;                // sorted ascending
  std::vector<std::vector<NodeId>> switchers_to;  // indexed by candidate id
  std::vector<uint8_t> weights;                   // weights[v] = 1 iff v in M
  std::vector<CandidateId> predicted_current;     // manipulator's predicted votes
};

ManipulableSet manipulable_set(const Electorate& e, double delta);

struct GreedyOptions {
  bool exact = false;     // evaluate sigma_w by live-graph enumeration (tiny instances)
  bool lazy = false;      // CELF-style priority re-evaluation; exhaustive when false
  int64_t mc_runs = 300;  // cascades per evaluation in Monte-Carlo mode
  int threads = 1;
};

// Hill-climbing weighted influence maximization: budget iterations, each
// adding the node with the best evaluated sigma_w(S + u); ties go to the
// smallest node id.  Returns min(budget, n) distinct seeds, sorted.
std::vector<NodeId> greedy_seed_selection(const SocialNetwork& net,
                                          std::span<const uint8_t> weights, int budget,
                                          const GreedyOptions& opts, Rng& rng);

// Exact expected total activated weight, by live-graph enumeration.
double exact_sigma_w(const SocialNetwork& net, std::span<const uint8_t> weights,
                     std::span<const NodeId> seeds, int max_edges = 20);

// X(S) = E[max_{c != target} |switchers_to[c] ∩ activated(S)|]: the expected
// collateral boost handed to the strongest rival.  MC and exact variants.
double x_of_s(const Scenario& s, std::span<const NodeId> seeds, int64_t runs, Rng& rng);
double x_of_s_exact(const Scenario& s, std::span<const NodeId> seeds, int max_edges = 20);

// Exact E[ΔMoV(S)] by live-graph enumeration with a full sticky re-tally per
// world (deliberately not sharing the incremental path used by estimate_dmov,
// so the two act as independent routes in tests).
double exact_expected_dmov(const Scenario& s, std::span<const NodeId> seeds, int max_edges = 20);

struct BruteForceResult {
  std::vector<NodeId> seeds;  // lexicographically smallest maximizer
  double expected_dmov = 0.0;
};

// Exhaustive optimum of exact E[ΔMoV] over all seed sets of size <= budget.
// Guarded: C(n, budget) * 2^|E| must stay <= 1e7.
BruteForceResult brute_force_optimal(const Scenario& s, int budget);

}  // namespace emsim
