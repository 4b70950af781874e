// Tests for multi-round campaigns: budget derivation, config validation,
// round mechanics (movement toward the perceived target, sticky retally),
// early stopping, and the reporting invariants.

#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "emsim/campaign.hpp"
#include "emsim/errors.hpp"
#include "emsim/graph.hpp"
#include "emsim/model.hpp"
#include "emsim/rng.hpp"

using namespace emsim;

namespace {

std::vector<Candidate> cands(std::vector<double> xs) {
  std::vector<Candidate> out;
  for (size_t i = 0; i < xs.size(); ++i) out.push_back({static_cast<CandidateId>(i), xs[i]});
  return out;
}

std::vector<Voter> voters_at(std::vector<double> xs) {
  std::vector<Voter> out;
  for (size_t i = 0; i < xs.size(); ++i) out.push_back({static_cast<NodeId>(i), xs[i]});
  return out;
}

ViewMatrix exact_views(const std::vector<Candidate>& cs, int n) {
  ViewMatrix vm(n, static_cast<int>(cs.size()));
  for (int v = 0; v < n; ++v)
    for (size_t c = 0; c < cs.size(); ++c)
      vm.at(v, static_cast<CandidateId>(c)) = cs[c].position;
  return vm;
}

Scenario random_scenario(uint64_t seed, int n, bool noisy_views) {
  Rng rng = Rng::derive(7400, {seed});
  int m = 2 + static_cast<int>(rng.below(3));
  std::vector<Candidate> cs;
  for (int c = 0; c < m; ++c) cs.push_back({c, rng.uniform(-1.0, 1.0)});
  std::vector<Voter> vs;
  for (int v = 0; v < n; ++v) vs.push_back({v, rng.uniform(-1.0, 1.0)});
  NoiseSpec noise = noisy_views ? NoiseSpec::gaussian(0.0, 0.05) : NoiseSpec::zero();
  ViewMatrix vm = sample_views(cs, n, noise, rng);
  Scenario s;
  s.electorate =
      make_electorate(cs, vs, vm, static_cast<CandidateId>(rng.below(static_cast<uint64_t>(m))));
  s.net = SocialNetwork(n);
  for (int i = 0; i < 2 * n; ++i) {
    NodeId u = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
    NodeId v = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
    if (u != v) s.net.add_edge(u, v, rng.uniform01());
  }
  return s;
}

bool reports_equal_ignoring_time(const std::vector<RoundReport>& a,
                                 const std::vector<RoundReport>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].round != b[i].round) return false;
    if (a[i].seeds != b[i].seeds) return false;
    if (a[i].activated_count != b[i].activated_count) return false;
    if (a[i].tally_after.votes != b[i].tally_after.votes) return false;
    if (a[i].mov_after != b[i].mov_after) return false;
    if (a[i].cumulative_dmov != b[i].cumulative_dmov) return false;
    if (a[i].normalized_dmov != b[i].normalized_dmov) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("derived budget: floor of the fraction, at least one seed") {
  CHECK(derived_budget(0.05, 20) == 1);
  CHECK(derived_budget(0.10, 20) == 2);
  CHECK(derived_budget(0.15, 20) == 3);
  CHECK(derived_budget(0.30, 10) == 3);  // the 1e-9 nudge keeps 0.3*10 at 3
  CHECK(derived_budget(1.0, 5) == 5);
  CHECK(derived_budget(0.04, 20) == 1);  // floor gives 0, clamped up
  CHECK(derived_budget(0.01, 3) == 1);
  CHECK(derived_budget(0.999, 1000) == 999);

  CHECK_THROWS_AS(derived_budget(0.0, 20), ConfigError);
  CHECK_THROWS_AS(derived_budget(-0.1, 20), ConfigError);
  CHECK_THROWS_AS(derived_budget(1.01, 20), ConfigError);
  CHECK_THROWS_AS(derived_budget(0.5, 0), ConfigError);
}

TEST_CASE("campaign config validation") {
  CampaignConfig c;
  CHECK_NOTHROW(c.validate(20));

  CampaignConfig bad = c;
  bad.delta = 0.0;
  CHECK_THROWS_AS(bad.validate(20), ConfigError);
  bad = c;
  bad.delta = 2.5;
  CHECK_THROWS_AS(bad.validate(20), ConfigError);
  bad = c;
  bad.rounds = 0;
  CHECK_THROWS_AS(bad.validate(20), ConfigError);
  bad = c;
  bad.budget_fraction = 0.0;
  CHECK_THROWS_AS(bad.validate(20), ConfigError);
  bad = c;
  bad.algorithm = "SPnothing";
  CHECK_THROWS_AS(bad.validate(20), ConfigError);

  CampaignConfig h = c;
  h.algorithm = "SPpagerank1.0_manipstar_pos";  // alias counts as known
  CHECK_NOTHROW(h.validate(20));
}

TEST_CASE("campaign state carries the config into the scenario") {
  Scenario s = random_scenario(1, 12, false);
  CampaignConfig config;
  config.budget_fraction = 0.25;
  config.delta = 0.7;
  config.rounds = 4;
  CampaignState state = make_campaign_state(s, config);
  CHECK(state.scenario.delta == 0.7);
  CHECK(state.scenario.budget == 3);  // floor(0.25 * 12)
  CHECK(state.scenario.rounds == 4);
  CHECK(state.rounds_done == 0);

  VoteTally initial = tally_votes(s.electorate.votes, s.electorate.num_candidates());
  CHECK(state.initial_mov == margin_of_victory(initial, s.electorate.target));
  CHECK(state.normalizer == dmov_bound(initial, s.electorate.target));
}

TEST_CASE("voters move toward the perceived target, not the true position") {
  // true target at +0.5, but the voter perceives it at -0.8
  auto cs = cands({0.5, -0.5});
  ViewMatrix vm(1, 2);
  vm.at(0, 0) = -0.8;
  vm.at(0, 1) = -0.5;
  Electorate e = make_electorate(cs, voters_at({0.0}), vm, 0);
  REQUIRE(e.votes == std::vector<CandidateId>{1});  // |0-(-0.5)| < |0-(-0.8)|

  Scenario s;
  s.electorate = e;
  s.net = SocialNetwork(1);
  CampaignConfig config;
  config.algorithm = "SPoutdeg";
  config.budget_fraction = 1.0;
  config.delta = 0.3;
  config.rounds = 1;
  Rng rng(42);
  auto reports = run_campaign(s, config, rng);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].seeds == std::vector<NodeId>{0});
  CHECK(reports[0].activated_count == 1);
  // moved toward the view at -0.8 (to -0.3), not toward +0.5 (to +0.3)
  // (run_campaign works on a copy, so probe via a fresh round on the state)
  CampaignState state = make_campaign_state(s, config);
  Rng rng2(42);
  run_round(state, config, rng2);
  CHECK(state.scenario.electorate.voters[0].position == -0.3);
  CHECK(s.electorate.voters[0].position == 0.0);  // the input is untouched
}

TEST_CASE("saturated campaign reaches unanimity in one round") {
  // zero-noise views, a p=1 directed cycle, everyone seeded, delta = 2
  int n = 9;
  auto cs = cands({-0.6, 0.1, 0.8});
  std::vector<double> xs;
  Rng pos_rng(520);
  for (int v = 0; v < n; ++v) xs.push_back(pos_rng.uniform(-1.0, 1.0));
  Electorate e = make_electorate(cs, voters_at(xs), exact_views(cs, n), 2);
  Scenario s;
  s.electorate = e;
  s.net = SocialNetwork(n);
  for (NodeId v = 0; v < n; ++v) s.net.add_edge(v, (v + 1) % n, 1.0);

  CampaignConfig config;
  config.algorithm = "SPoutdeg";
  config.budget_fraction = 1.0;
  config.delta = 2.0;
  config.rounds = 10;

  Rng rng(99);
  auto reports = run_campaign(s, config, rng);
  REQUIRE(reports.size() == 1);  // unanimity stops the campaign
  const RoundReport& r = reports[0];
  CHECK(r.activated_count == n);
  CHECK(r.tally_after.votes[2] == n);
  CHECK(r.mov_after == n);
  CHECK(r.normalized_dmov == 1.0);  // cumulative == normalizer exactly

  SUBCASE("without early stopping every round is reported") {
    Rng rng2(99);
    config.stop_at_unanimity = false;
    auto all = run_campaign(s, config, rng2);
    REQUIRE(all.size() == 10);
    for (const auto& rep : all) {
      CHECK(rep.tally_after.votes[2] == n);
      CHECK(rep.normalized_dmov == 1.0);
    }
    for (int i = 0; i < 10; ++i) CHECK(all[static_cast<size_t>(i)].round == i + 1);
  }
}

TEST_CASE("zero-probability edges confine influence to the seeds") {
  Scenario s = random_scenario(4, 15, false);
  s.net.map_probabilities([](NodeId, NodeId, double) { return 0.0; });
  CampaignConfig config;
  config.algorithm = "SPneig2";
  config.budget_fraction = 0.2;  // 3 seeds
  config.rounds = 3;
  Rng rng(11);
  auto reports = run_campaign(s, config, rng);
  for (const auto& r : reports) {
    CHECK(r.seeds.size() == 3);
    CHECK(r.activated_count == 3);
  }
}

TEST_CASE("campaigns replay exactly from the rng seed") {
  SUBCASE("heuristic seed selection") {
    Scenario s = random_scenario(8, 20, true);
    CampaignConfig config;
    config.algorithm = "SPpagerank1.0_pos";
    config.budget_fraction = 0.1;
    config.rounds = 6;
    Rng a(777), b(777), c(778);
    auto ra = run_campaign(s, config, a);
    auto rb = run_campaign(s, config, b);
    CHECK(reports_equal_ignoring_time(ra, rb));
    auto rc = run_campaign(s, config, c);
    // a different stream should at least differ somewhere over 6 rounds
    bool same = reports_equal_ignoring_time(ra, rc);
    CHECK(!same);
  }
  SUBCASE("monte-carlo greedy seed selection") {
    Scenario s = random_scenario(9, 14, false);
    CampaignConfig config;
    config.algorithm = "greedy-apx";
    config.greedy.mc_runs = 40;
    config.budget_fraction = 0.15;
    config.rounds = 3;
    Rng a(31337), b(31337);
    auto ra = run_campaign(s, config, a);
    auto rb = run_campaign(s, config, b);
    CHECK(reports_equal_ignoring_time(ra, rb));
  }
}

TEST_CASE("reporting invariants hold over random campaigns") {
  int checked_rounds = 0;
  for (uint64_t rep = 0; rep < 60; ++rep) {
    Scenario s = random_scenario(100 + rep, 12, rep % 2 == 0);
    CampaignConfig config;
    config.algorithm = (rep % 3 == 0)   ? "SPoutdeg"
                       : (rep % 3 == 1) ? "SPpagerank0.5_pos"
                                        : "greedy-apx";
    config.greedy.mc_runs = 25;
    config.budget_fraction = 0.05 + 0.1 * static_cast<double>(rep % 4);
    config.delta = 0.2 + 0.15 * static_cast<double>(rep % 3);
    config.rounds = 3;
    Rng rng = Rng::derive(7500, {rep});
    auto reports = run_campaign(s, config, rng);
    REQUIRE(!reports.empty());
    CHECK(reports.size() <= 3);

    const Electorate& e0 = s.electorate;
    VoteTally initial = tally_votes(e0.votes, e0.num_candidates());
    int64_t mov0 = margin_of_victory(initial, e0.target);
    int64_t bound = dmov_bound(initial, e0.target);
    int64_t prev_target_votes = initial.votes[static_cast<size_t>(e0.target)];
    int budget = derived_budget(config.budget_fraction, 12);

    for (size_t i = 0; i < reports.size(); ++i) {
      const RoundReport& r = reports[i];
      CHECK(r.round == static_cast<int>(i) + 1);
      CHECK(r.seeds.size() == static_cast<size_t>(budget));
      for (NodeId v : r.seeds) {
        CHECK(v >= 0);
        CHECK(v < 12);
      }
      CHECK(r.activated_count >= static_cast<int>(r.seeds.size()));
      CHECK(r.activated_count <= 12);

      // the target never loses supporters
      int64_t target_votes = r.tally_after.votes[static_cast<size_t>(e0.target)];
      CHECK(target_votes >= prev_target_votes);
      prev_target_votes = target_votes;

      CHECK(r.mov_after == margin_of_victory(r.tally_after, e0.target));
      CHECK(r.cumulative_dmov == r.mov_after - mov0);
      if (bound > 0) {
        CHECK(r.normalized_dmov ==
              static_cast<double>(r.cumulative_dmov) / static_cast<double>(bound));
        CHECK(r.normalized_dmov >= -1.0);
        CHECK(r.normalized_dmov <= 1.0);
      } else {
        CHECK(r.normalized_dmov == 0.0);
      }
      CHECK(r.seed_selection_seconds >= 0.0);
      ++checked_rounds;
    }
  }
  CHECK(checked_rounds >= 60);
}

TEST_CASE("already-unanimous electorates report zero and stop") {
  auto cs = cands({0.2, -0.7});
  Electorate e = make_electorate(cs, voters_at({0.2, 0.3, 0.1}), exact_views(cs, 3), 0);
  REQUIRE(tally_votes(e.votes, 2).votes[0] == 3);
  Scenario s;
  s.electorate = e;
  s.net = SocialNetwork(3);
  s.net.add_edge(0, 1, 0.5);
  CampaignConfig config;
  config.algorithm = "SPoutdeg";
  config.rounds = 5;
  Rng rng(6);
  auto reports = run_campaign(s, config, rng);
  REQUIRE(reports.size() == 1);  // unanimity holds after round one
  CHECK(reports[0].cumulative_dmov == 0);
  CHECK(reports[0].normalized_dmov == 0.0);  // the bound is 0 for a unanimous start
  CHECK(reports[0].mov_after == 3);
}

TEST_CASE("single-round campaigns produce exactly one report") {
  Scenario s = random_scenario(12, 10, false);
  CampaignConfig config;
  config.algorithm = "SPneig2_rev";
  config.rounds = 1;
  Rng rng(3);
  auto reports = run_campaign(s, config, rng);
  CHECK(reports.size() == 1);
  CHECK(reports[0].round == 1);
}
