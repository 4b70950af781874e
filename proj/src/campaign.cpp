#include "emsim/campaign.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "emsim/diffusion.hpp"
#include "emsim/errors.hpp"

namespace emsim {

int derived_budget(double budget_fraction, int n_voters) {
  if (!(budget_fraction > 0.0 && budget_fraction <= 1.0))
    throw ConfigError("budget_fraction must be in (0, 1]");
  if (n_voters < 1) throw ConfigError("derived_budget: need at least one voter");
  // The nudge keeps exact products like 0.3 * 10 from flooring one short.
  int b = static_cast<int>(std::floor(budget_fraction * n_voters + 1e-9));
  return std::max(1, b);
}

void CampaignConfig::validate(int n_voters) const {
  derived_budget(budget_fraction, n_voters);
  if (!(delta > 0.0 && delta <= 2.0)) throw ConfigError("campaign: delta must be in (0, 2]");
  if (rounds < 1) throw ConfigError("campaign: rounds must be >= 1");
  if (algorithm != "greedy-apx" && !is_known_heuristic(algorithm))
    throw ConfigError("campaign: unknown algorithm '" + algorithm + "'");
}

CampaignState make_campaign_state(const Scenario& s, const CampaignConfig& config) {
  config.validate(s.electorate.num_voters());
  CampaignState state;
  state.scenario = s;
  state.scenario.delta = config.delta;
  state.scenario.budget = derived_budget(config.budget_fraction, s.electorate.num_voters());
  state.scenario.rounds = config.rounds;
  state.scenario.validate();
  const Electorate& e = state.scenario.electorate;
  VoteTally initial = tally_votes(e.votes, e.num_candidates());
  state.initial_mov = margin_of_victory(initial, s.electorate.target);
  state.normalizer = dmov_bound(initial, s.electorate.target);
  return state;
}

RoundReport run_round(CampaignState& state, const CampaignConfig& config, Rng& rng) {
  Electorate& e = state.scenario.electorate;
  int budget = state.scenario.budget;

  RoundReport report;
  report.round = ++state.rounds_done;

  auto t0 = std::chrono::steady_clock::now();
  if (config.algorithm == "greedy-apx") {
    ManipulableSet ms = manipulable_set(e, state.scenario.delta);
    report.seeds = greedy_seed_selection(state.scenario.net, ms.weights, budget, config.greedy, rng);
  } else {
    report.seeds =
        select_seeds_heuristic(config.algorithm, state.scenario, budget, config.heuristic);
  }
  auto t1 = std::chrono::steady_clock::now();
  report.seed_selection_seconds = std::chrono::duration<double>(t1 - t0).count();

  ActivationResult cascade = simulate_ic(state.scenario.net, report.seeds, rng);
  report.activated_count = static_cast<int>(cascade.activated.size());
  for (NodeId v : cascade.activated) {
    Voter& voter = e.voters[static_cast<size_t>(v)];
    voter.position = apply_influence(voter.position, e.views(v, e.target), state.scenario.delta);
  }
  int64_t target_before =
      tally_votes(e.votes, e.num_candidates()).votes[static_cast<size_t>(e.target)];
  e.votes = compute_votes(e);

  VoteTally after = tally_votes(e.votes, e.num_candidates());
  if (after.votes[static_cast<size_t>(e.target)] < target_before)
    throw std::logic_error("campaign: target supporters decreased within a round");
  report.tally_after = after;
  report.mov_after = margin_of_victory(after, e.target);
  report.cumulative_dmov = report.mov_after - state.initial_mov;
  report.normalized_dmov =
      state.normalizer > 0
          ? static_cast<double>(report.cumulative_dmov) / static_cast<double>(state.normalizer)
          : 0.0;
  return report;
}

std::vector<RoundReport> run_campaign(const Scenario& s, const CampaignConfig& config, Rng& rng) {
  CampaignState state = make_campaign_state(s, config);
  uint64_t master = rng.next_u64();
  std::vector<RoundReport> reports;
  reports.reserve(static_cast<size_t>(config.rounds));
  int n = s.electorate.num_voters();
  for (int r = 0; r < config.rounds; ++r) {
    Rng round_rng = Rng::derive(master, {static_cast<uint64_t>(r)});
    reports.push_back(run_round(state, config, round_rng));
    const RoundReport& last = reports.back();
    if (config.stop_at_unanimity &&
        last.tally_after.votes[static_cast<size_t>(s.electorate.target)] == n)
      break;
  }
  return reports;
}

}  // namespace emsim
