#pragma once

#include <vector>

#include "emsim/graph.hpp"
#include "emsim/model.hpp"

namespace emsim {

// A manipulation instance: the electorate, the social network carrying the
// campaign messages (node v is voter v), and the manipulation parameters.
struct Scenario {
  Electorate electorate;
  SocialNetwork net;
  double delta = 0.3;  // maximum ideological shift per received message
  int budget = 1;      // influencers selected per round
  int rounds = 10;

  void validate() const;
};

// Single-round outcome table: a voter's vote only changes if she is
// activated, in which case it becomes `influenced` (position moved by delta
// toward the perceived target, sticky re-vote).  Lets one-round ΔMoV be
// evaluated per activation set in O(|activated|).
struct OneRoundVotes {
  std::vector<CandidateId> current;
  std::vector<CandidateId> influenced;
  VoteTally base;

  // ΔMoV for a given activated set, relative to the base tally.
  int64_t dmov_for(std::span<const NodeId> activated, CandidateId c_star) const;
};

OneRoundVotes one_round_votes(const Scenario& s);

// Worst-case one-round ΔMoV, |V| - |V_c*| + |V_cbar| (every non-supporter
// defects from the runner-up to the target); also the normalizer used for
// reporting normalized ΔMoV.
int64_t dmov_bound(const VoteTally& t, CandidateId c_star);

}  // namespace emsim
