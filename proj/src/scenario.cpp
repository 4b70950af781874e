#include "emsim/scenario.hpp"

#include <string>

#include "emsim/errors.hpp"

namespace emsim {

void Scenario::validate() const {
  electorate.validate();
  if (net.num_nodes() != electorate.num_voters())
    throw ConfigError("scenario: network has " + std::to_string(net.num_nodes()) +
                      " nodes but the electorate has " + std::to_string(electorate.num_voters()) +
                      " voters");
  if (!(delta >= 0.0)) throw ConfigError("scenario: delta must be >= 0");
  if (budget < 1) throw ConfigError("scenario: budget must be >= 1");
  if (rounds < 1) throw ConfigError("scenario: rounds must be >= 1");
}

OneRoundVotes one_round_votes(const Scenario& s) {
  const Electorate& e = s.electorate;
  OneRoundVotes out;
  out.current = e.votes.empty() ? compute_votes(e) : e.votes;
  out.base = tally_votes(out.current, e.num_candidates());
  int n = e.num_voters();
  out.influenced.resize(static_cast<size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    double moved = apply_influence(e.voters[static_cast<size_t>(v)].position,
                                   e.views(v, e.target), s.delta);
    auto row = e.views.row(v);
    out.influenced[static_cast<size_t>(v)] =
        preferred_candidate(moved, row, out.current[static_cast<size_t>(v)]);
  }
  return out;
}

int64_t OneRoundVotes::dmov_for(std::span<const NodeId> activated, CandidateId c_star) const {
  VoteTally after = base;
  for (NodeId v : activated) {
    CandidateId was = current[static_cast<size_t>(v)];
    CandidateId now = influenced[static_cast<size_t>(v)];
    if (was != now) {
      after.votes[static_cast<size_t>(was)]--;
      after.votes[static_cast<size_t>(now)]++;
    }
  }
  return delta_mov(base, after, c_star);
}

int64_t dmov_bound(const VoteTally& t, CandidateId c_star) {
  int64_t n = 0;
  for (int64_t v : t.votes) n += v;
  int64_t best_other = 0;
  bool seen = false;
  for (size_t c = 0; c < t.votes.size(); ++c) {
    if (static_cast<CandidateId>(c) == c_star) continue;
    if (!seen || t.votes[c] > best_other) best_other = t.votes[c];
    seen = true;
  }
  return n - t.votes[static_cast<size_t>(c_star)] + best_other;
}

}  // namespace emsim
