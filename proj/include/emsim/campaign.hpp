#pragma once

#include <string>
#include <vector>

#include "emsim/greedy.hpp"
#include "emsim/heuristics.hpp"
#include "emsim/rng.hpp"
#include "emsim/scenario.hpp"

namespace emsim {

// One manipulator campaign: in each round pick seeds with the configured
// algorithm, run one cascade, pull every activated voter's position toward
// the target's perceived position, and retally with sticky ties.

struct CampaignConfig {
  std::string algorithm = "greedy-apx";  // "greedy-apx" or a heuristic catalog name
  double budget_fraction = 0.10;         // B / |V|, in (0, 1]
  double delta = 0.3;                    // influence step, in (0, 2]
  int rounds = 10;
  bool stop_at_unanimity = true;
  GreedyOptions greedy;          // used when algorithm == "greedy-apx"
  HeuristicOptions heuristic;    // used for catalog algorithms

  void validate(int n_voters) const;
};

// floor(fraction * n) clamped to at least one seed.
int derived_budget(double budget_fraction, int n_voters);

struct RoundReport {
  int round = 0;  // 1-based
  std::vector<NodeId> seeds;
  int activated_count = 0;
  VoteTally tally_after;
  int64_t mov_after = 0;
  int64_t cumulative_dmov = 0;   // MoV(after this round) - MoV(initial)
  double normalized_dmov = 0.0;  // cumulative_dmov / initial upper bound (0 if bound is 0)
  double seed_selection_seconds = 0.0;
};

struct CampaignState {
  Scenario scenario;  // electorate evolves; network and views stay fixed
  int64_t initial_mov = 0;
  int64_t normalizer = 0;  // ΔMoV upper bound of the initial electorate
  int rounds_done = 0;
};

CampaignState make_campaign_state(const Scenario& s, const CampaignConfig& config);

// Advances the state by one round and reports it.  Seed-selection wall time
// covers only the selection call.
RoundReport run_round(CampaignState& state, const CampaignConfig& config, Rng& rng);

// Runs up to config.rounds rounds, stopping early after the round that makes
// the electorate unanimous for the target when stop_at_unanimity is set.
// Deterministic in the rng state: per-round streams are derived from one
// master draw.
std::vector<RoundReport> run_campaign(const Scenario& s, const CampaignConfig& config, Rng& rng);

}  // namespace emsim
