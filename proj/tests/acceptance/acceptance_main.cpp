// Acceptance gate: checks the eight shipping criteria end to end and prints
// one [PASS]/[FAIL] line per criterion.  Exit code 0 only when all pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "emsim/campaign.hpp"
#include "emsim/diffusion.hpp"
#include "emsim/estimation.hpp"
#include "emsim/graph.hpp"
#include "emsim/greedy.hpp"
#include "emsim/harness.hpp"
#include "emsim/heuristics.hpp"
#include "emsim/model.hpp"
#include "emsim/rng.hpp"
#include "emsim/scenario.hpp"

using namespace emsim;

namespace {

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(4);
  ss << x;
  return ss.str();
}

ViewMatrix exact_views(const std::vector<Candidate>& cs, int n) {
  ViewMatrix vm(n, static_cast<int>(cs.size()));
  for (int v = 0; v < n; ++v)
    for (size_t c = 0; c < cs.size(); ++c)
      vm.at(v, static_cast<CandidateId>(c)) = cs[c].position;
  return vm;
}

// Random zero-noise tiny instance used by the exact-evaluation criteria.
Scenario tiny_instance(uint64_t tag, uint64_t index, int max_n, int max_edge_tries) {
  Rng rng = Rng::derive(tag, {index});
  int n = 3 + static_cast<int>(rng.below(static_cast<uint64_t>(max_n - 2)));
  int m = 2 + static_cast<int>(rng.below(3));
  std::vector<Candidate> cs;
  for (int c = 0; c < m; ++c) cs.push_back({c, rng.uniform(-1.0, 1.0)});
  std::vector<Voter> vs;
  for (int v = 0; v < n; ++v) vs.push_back({v, rng.uniform(-1.0, 1.0)});
  Scenario s;
  s.electorate = make_electorate(cs, vs, exact_views(cs, n),
                                 static_cast<CandidateId>(rng.below(static_cast<uint64_t>(m))));
  s.net = SocialNetwork(n);
  int tries = static_cast<int>(rng.below(static_cast<uint64_t>(max_edge_tries + 1)));
  for (int i = 0; i < tries; ++i) {
    NodeId u = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
    NodeId v = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
    if (u != v) s.net.add_edge(u, v, 0.1 + 0.8 * rng.uniform01());
  }
  const double deltas[3] = {0.3, 0.5, 0.8};
  s.delta = deltas[rng.below(3)];
  s.budget = 1 + static_cast<int>(rng.below(2));
  return s;
}

// ---- criterion 1 -----------------------------------------------------------

bool criterion1(std::string* detail) {
  double eps = 0.05 * std::sqrt(2.0);
  double lambda = std::sqrt(0.05);
  int64_t t = sims_for_sigma(1.0, eps, lambda);
  *detail = "sims_for_sigma(1, 0.05*sqrt(2), sqrt(0.05)) == " + std::to_string(t) +
            " (expected 300)";
  return t == 300;
}

// ---- criterion 2 -----------------------------------------------------------

bool criterion2(std::string* detail) {
  const int64_t runs = 100000;
  double worst_z = 0.0;
  int graphs_checked = 0;
  for (uint64_t gi = 0; gi < 50; ++gi) {
    Rng grng = Rng::derive(2001, {gi});
    int n = 2 + static_cast<int>(grng.below(4));
    SocialNetwork net(n);
    int tries = static_cast<int>(grng.below(6));
    for (int i = 0; i < tries; ++i) {
      NodeId u = static_cast<NodeId>(grng.below(static_cast<uint64_t>(n)));
      NodeId v = static_cast<NodeId>(grng.below(static_cast<uint64_t>(n)));
      if (u != v) net.add_edge(u, v, grng.uniform01());
    }
    std::vector<NodeId> seeds = {static_cast<NodeId>(grng.below(static_cast<uint64_t>(n)))};
    if (grng.below(2) == 1) {
      NodeId second = static_cast<NodeId>(grng.below(static_cast<uint64_t>(n)));
      if (second != seeds[0]) seeds.push_back(second);
    }
    std::sort(seeds.begin(), seeds.end());

    // exact outcome distribution by live-graph enumeration
    std::map<std::vector<NodeId>, double> exact;
    for (const auto& [world, prob] : enumerate_live_graphs(net))
      exact[reachable(world, seeds)] += prob;

    // empirical outcome distribution from the cascade simulator
    std::map<std::vector<NodeId>, int64_t> counts;
    Rng mc = Rng::derive(2002, {gi});
    for (int64_t r = 0; r < runs; ++r) ++counts[simulate_ic(net, seeds, mc).activated];

    for (const auto& [outcome, count] : counts)
      if (exact.find(outcome) == exact.end()) {
        *detail = "graph " + std::to_string(gi) + ": simulator produced an impossible outcome";
        return false;
      }
    for (const auto& [outcome, p] : exact) {
      auto it = counts.find(outcome);
      double f = it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(runs);
      double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(runs));
      if (sigma == 0.0) {
        if (f != p) {
          *detail = "graph " + std::to_string(gi) + ": certain outcome missed";
          return false;
        }
        continue;
      }
      double z = std::fabs(f - p) / sigma;
      worst_z = std::max(worst_z, z);
      if (z > 3.0) {
        *detail = "graph " + std::to_string(gi) + ": outcome frequency off by " + fmt(z) +
                  " sigma (> 3)";
        return false;
      }
    }
    ++graphs_checked;
  }
  *detail = std::to_string(graphs_checked) + " graphs, 1e5 runs each, worst deviation " +
            fmt(worst_z) + " sigma (limit 3)";
  return true;
}

// ---- criterion 3 -----------------------------------------------------------

bool criterion3(std::string* detail) {
  const double factor = 1.0 - 1.0 / std::exp(1.0);
  int violations = 0;
  double worst_ratio = 2.0;
  for (uint64_t i = 0; i < 200; ++i) {
    Rng rng = Rng::derive(3001, {i});
    int n = 3 + static_cast<int>(rng.below(6));
    SocialNetwork net(n);
    int tries = 6 + static_cast<int>(rng.below(7));
    for (int t = 0; t < tries && net.num_edges() < 12; ++t) {
      NodeId u = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
      NodeId v = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
      if (u != v) net.add_edge(u, v, 0.1 + 0.8 * rng.uniform01());
    }
    std::vector<uint8_t> weights(static_cast<size_t>(n));
    for (auto& w : weights) w = static_cast<uint8_t>(rng.below(2));
    int budget = 1 + static_cast<int>(rng.below(2));

    GreedyOptions opts;
    opts.exact = true;
    Rng grng = Rng::derive(3002, {i});
    std::vector<NodeId> picked = greedy_seed_selection(net, weights, budget, opts, grng);
    double greedy_value = exact_sigma_w(net, weights, picked);

    // exhaustive optimum over all seed sets of size <= budget
    double opt = 0.0;
    std::vector<NodeId> subset;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > budget) continue;
      subset.clear();
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) subset.push_back(v);
      opt = std::max(opt, exact_sigma_w(net, weights, subset));
    }

    if (greedy_value < factor * opt - 1e-9) ++violations;
    if (opt > 0.0) worst_ratio = std::min(worst_ratio, greedy_value / opt);
  }
  *detail = "200 instances, " + std::to_string(violations) +
            " below (1-1/e)*optimal; worst greedy/optimal ratio " + fmt(worst_ratio) +
            " (bound " + fmt(factor) + ")";
  return violations == 0;
}

// ---- criterion 4 -----------------------------------------------------------

bool criterion4(std::string* detail) {
  const double factor = (1.0 - 1.0 / std::exp(1.0)) / 3.0;
  int violations = 0, kept = 0, skipped = 0;
  double worst_margin = 1e300;
  for (uint64_t i = 0; kept < 200 && i < 2000; ++i) {
    Scenario s = tiny_instance(4001, i, 7, 10);
    ManipulableSet ms = manipulable_set(s.electorate, s.delta);

    // The guarantee presumes the pro-target message does not advantage any
    // rival more than the target itself: no rival may have more potential
    // switchers than the target.  Instances breaking that premise admit
    // genuine counterexamples (rival-to-rival vote shuffling that the
    // weighted-influence objective cannot see), so they are skipped.
    size_t rival_gain = 0;
    for (const auto& sw : ms.switchers_to) rival_gain = std::max(rival_gain, sw.size());
    if (rival_gain > ms.manipulable.size()) {
      ++skipped;
      continue;
    }
    ++kept;

    GreedyOptions opts;
    opts.exact = true;
    Rng grng = Rng::derive(4002, {i});
    std::vector<NodeId> picked = greedy_seed_selection(s.net, ms.weights, s.budget, opts, grng);

    double lhs = exact_expected_dmov(s, picked) + x_of_s_exact(s, picked);
    double rhs = factor * brute_force_optimal(s, s.budget).expected_dmov;
    worst_margin = std::min(worst_margin, lhs - rhs);
    if (lhs < rhs - 1e-9) ++violations;
  }
  *detail = std::to_string(kept) + " premise-satisfying zero-noise instances (" +
            std::to_string(skipped) + " skipped: some rival out-gains the target), " +
            std::to_string(violations) +
            " violate E[dMoV(greedy)] + X >= (1/3)(1-1/e)*E[dMoV(opt)]; smallest slack " +
            fmt(worst_margin);
  return kept == 200 && violations == 0;
}

// ---- criterion 5 -----------------------------------------------------------

bool is_single_peaked_local(const std::vector<CandidateId>& order,
                            const std::vector<CandidateId>& axis) {
  std::vector<int> axis_pos(axis.size());
  for (size_t i = 0; i < axis.size(); ++i) axis_pos[static_cast<size_t>(axis[i])] = static_cast<int>(i);
  int lo = axis_pos[static_cast<size_t>(order[0])];
  int hi = lo;
  for (size_t k = 1; k < order.size(); ++k) {
    int p = axis_pos[static_cast<size_t>(order[k])];
    lo = std::min(lo, p);
    hi = std::max(hi, p);
    if (hi - lo != static_cast<int>(k)) return false;  // prefix must be contiguous
  }
  return true;
}

bool criterion5(std::string* detail) {
  const int kCases = 10000;

  // (a) the empty seed set never moves the margin
  for (uint64_t i = 0; i < kCases; ++i) {
    Scenario s = tiny_instance(5001, i, 6, 8);
    OneRoundVotes table = one_round_votes(s);
    std::vector<NodeId> none;
    if (table.dmov_for(none, s.electorate.target) != 0) {
      *detail = "dMoV of the empty activation set is nonzero";
      return false;
    }
  }

  // (b) the target's vote count never drops during a campaign
  for (uint64_t i = 0; i < kCases; ++i) {
    Rng rng = Rng::derive(5002, {i});
    Scenario s = tiny_instance(5003, i, 8, 12);
    CampaignConfig cfg;
    cfg.algorithm = "SPoutdeg";
    cfg.budget_fraction = 0.25;
    cfg.delta = s.delta;
    cfg.rounds = 3;
    VoteTally t0 = tally_votes(s.electorate.votes, s.electorate.num_candidates());
    int64_t prev = t0.votes[static_cast<size_t>(s.electorate.target)];
    for (const RoundReport& r : run_campaign(s, cfg, rng)) {
      int64_t cur = r.tally_after.votes[static_cast<size_t>(s.electorate.target)];
      if (cur < prev) {
        *detail = "campaign round lost target supporters";
        return false;
      }
      prev = cur;
    }
  }

  // (c) positions and probabilities stay inside their ranges
  {
    Rng rng(5004);
    for (int i = 0; i < kCases; ++i) {
      double x = rng.uniform(-1.0, 1.0), t = rng.uniform(-1.0, 1.0);
      double d = rng.uniform01() * 2.0;
      double moved = apply_influence(x, t, d);
      if (!(moved >= -1.0 && moved <= 1.0)) {
        *detail = "apply_influence escaped [-1, 1]";
        return false;
      }
    }
    int probs_seen = 0, views_seen = 0;
    for (uint64_t g = 0; probs_seen < kCases; ++g) {
      Rng gr = Rng::derive(5005, {g});
      SocialNetwork net = assign_uniform_probabilities(gen_preferential_attachment(60, 0.7, gr), gr);
      bool ok = true;
      net.for_each_edge([&](NodeId, NodeId, double p) {
        ++probs_seen;
        if (!(p >= 0.0 && p < 1.0)) ok = false;
      });
      if (!ok) {
        *detail = "assigned probability outside [0, 1)";
        return false;
      }
    }
    for (uint64_t e = 0; views_seen < kCases; ++e) {
      Rng er = Rng::derive(5006, {e});
      Electorate el = make_random_electorate(20, 4, NoiseSpec::gaussian(0.0, 0.5),
                                             TargetRule::Random, 0, er);
      for (int v = 0; v < 20; ++v)
        for (int c = 0; c < 4; ++c) {
          ++views_seen;
          double w = el.views(v, c);
          if (!(w >= -1.0 && w <= 1.0)) {
            *detail = "sampled view escaped [-1, 1]";
            return false;
          }
        }
    }
  }

  // (d) PageRank is a distribution and ignores the scale of z
  for (uint64_t i = 0; i < kCases; ++i) {
    Rng rng = Rng::derive(5007, {i});
    int n = 2 + static_cast<int>(rng.below(8));
    SocialNetwork net(n);
    int tries = static_cast<int>(rng.below(static_cast<uint64_t>(2 * n + 1)));
    for (int t = 0; t < tries; ++t) {
      NodeId u = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
      NodeId v = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
      if (u != v) net.add_edge(u, v, rng.uniform01());
    }
    std::vector<double> z(static_cast<size_t>(n));
    for (auto& w : z) w = rng.below(5) == 0 ? 0.0 : rng.uniform01();
    auto r = weighted_pagerank(net, z);
    double total = 0.0;
    for (double x : r) total += x;
    if (std::fabs(total - 1.0) > 1e-8) {
      *detail = "PageRank sum drifted to " + fmt(total);
      return false;
    }
    double scale = 2.0 + static_cast<double>(rng.below(9));
    std::vector<double> zs = z;
    for (auto& w : zs) w *= scale;
    auto rs = weighted_pagerank(net, zs);
    for (size_t v = 0; v < r.size(); ++v)
      if (std::fabs(r[v] - rs[v]) > 1e-10) {
        *detail = "PageRank moved under weight scaling";
        return false;
      }
  }

  // (e) swap distance is zero exactly on single-peaked rankings
  for (uint64_t i = 0; i < kCases; ++i) {
    Rng rng = Rng::derive(5008, {i});
    int m = 2 + static_cast<int>(rng.below(5));
    std::vector<Candidate> cs;
    for (int c = 0; c < m; ++c) cs.push_back({c, rng.uniform(-1.0, 1.0)});
    std::vector<CandidateId> axis = position_axis(cs);
    std::vector<CandidateId> order;
    if (rng.below(2) == 0) {
      // realizable ranking: a voter with noisy views
      std::vector<double> row(static_cast<size_t>(m));
      for (auto& w : row) w = rng.uniform(-1.0, 1.0);
      order = ranking(rng.uniform(-1.0, 1.0), row);
    } else {
      // arbitrary permutation
      order.resize(static_cast<size_t>(m));
      for (int c = 0; c < m; ++c) order[static_cast<size_t>(c)] = c;
      for (int c = m - 1; c > 0; --c)
        std::swap(order[static_cast<size_t>(c)],
                  order[static_cast<size_t>(rng.below(static_cast<uint64_t>(c + 1)))]);
    }
    bool sp = is_single_peaked_local(order, axis);
    int dist = swap_distance_to_single_peaked(order, axis);
    if ((dist == 0) != sp) {
      *detail = "swap distance 0 disagrees with the single-peaked predicate";
      return false;
    }
  }

  *detail = "5 invariants fuzzed over 1e4 cases each (empty-set dMoV, sticky monotonicity, "
            "range bounds, PageRank distribution/scale, swap-distance zero set)";
  return true;
}

// ---- criteria 6 and 7 ------------------------------------------------------

double cell_mean(const ResultTable& t, const std::string& alg, double budget,
                 const std::string& noise, int round) {
  for (const ResultRow& r : t.rows)
    if (r.algorithm == alg && r.budget_fraction == budget && r.noise == noise &&
        r.round == round)
      return r.value.mean;
  return -1e300;
}

bool criterion6(std::string* detail) {
  ExperimentGrid grid;
  grid.sizes = {20};
  grid.n_candidates = 5;
  grid.budget_fractions = {0.05, 0.10, 0.15};
  grid.deltas = {0.3};
  grid.noises = {NoiseSpec::zero()};
  // 10x10x1 = 100 replications; balancing electorates and graphs keeps the
  // grand-mean variance low (graph structure dominates cascade strength).
  grid.placements = 10;
  grid.graphs = 10;
  grid.probsets = 1;
  grid.rounds = 10;
  grid.algorithms = {"SPpagerank1.0_pos"};
  grid.master_seed = 61;
  ResultTable table = run_grid(grid);

  const std::string alg = "SPpagerank1.0_pos";
  double r10 = cell_mean(table, alg, 0.10, "zero", 10);
  double r1 = cell_mean(table, alg, 0.10, "zero", 1);
  double r10_b5 = cell_mean(table, alg, 0.05, "zero", 10);
  double r10_b15 = cell_mean(table, alg, 0.15, "zero", 10);

  ExperimentGrid noisy = grid;
  noisy.budget_fractions = {0.10};
  noisy.noises = {NoiseSpec::zero(), NoiseSpec::gaussian(0.0, 1.0)};
  noisy.target_rule = TargetRule::Rightmost;
  noisy.master_seed = 62;
  ResultTable ntable = run_grid(noisy);
  double right_zero = cell_mean(ntable, alg, 0.10, "zero", 10);
  double right_gauss = cell_mean(ntable, alg, 0.10, NoiseSpec::gaussian(0.0, 1.0).to_string(), 10);

  bool ok_r10 = r10 >= 0.82 && r10 <= 1.0;
  bool ok_r1 = r1 >= 0.12 && r1 <= 0.32;
  bool ok_budget = r10_b5 < r10 && r10 < r10_b15;
  bool ok_noise = right_gauss < right_zero;

  *detail = "round10=" + fmt(r10) + " (want [0.82,1.0]), round1=" + fmt(r1) +
            " (want [0.12,0.32]), budget sweep " + fmt(r10_b5) + "<" + fmt(r10) + "<" +
            fmt(r10_b15) + (ok_budget ? " increasing" : " NOT increasing") +
            ", rightmost-target noise " + fmt(right_gauss) + (ok_noise ? " < " : " !< ") +
            fmt(right_zero);
  return ok_r10 && ok_r1 && ok_budget && ok_noise;
}

bool criterion7(std::string* detail) {
  ExperimentGrid grid;
  grid.sizes = {20};
  grid.n_candidates = 5;
  grid.budget_fractions = {0.10};
  grid.deltas = {0.3};
  grid.noises = {NoiseSpec::zero()};
  grid.placements = 12;
  grid.graphs = 16;
  grid.probsets = 16;  // 3072 replications per cell
  grid.rounds = 10;
  grid.algorithms = {"SPpagerank1.0_manip_eq1", "SPpagerank1.0_pos"};
  grid.master_seed = 71;
  ResultTable table = run_grid(grid);

  double eq1_r1 = cell_mean(table, "SPpagerank1.0_manip_eq1", 0.10, "zero", 1);
  double pos_r1 = cell_mean(table, "SPpagerank1.0_pos", 0.10, "zero", 1);
  double eq1_r10 = cell_mean(table, "SPpagerank1.0_manip_eq1", 0.10, "zero", 10);
  double pos_r10 = cell_mean(table, "SPpagerank1.0_pos", 0.10, "zero", 10);

  bool early = eq1_r1 > pos_r1;
  bool late = eq1_r10 < pos_r10;
  *detail = "3072 replications: round1 manip_eq1=" + fmt(eq1_r1) + (early ? " > " : " !> ") +
            fmt(pos_r1) + "=pos, round10 manip_eq1=" + fmt(eq1_r10) + (late ? " < " : " !< ") +
            fmt(pos_r10) + "=pos";
  return early && late;
}

// ---- criterion 8 -----------------------------------------------------------

bool criterion8(std::string* detail) {
  // (a) 20-node selection-speed ratio, greedy approximation vs heuristic
  GraphParams params;
  std::vector<Scenario> scenarios;
  for (uint64_t i = 0; i < 30; ++i) {
    Rng rng = Rng::derive(8001, {i});
    Scenario s;
    s.net = assign_uniform_probabilities(
        generate_graph(GraphFamily::WattsStrogatzSpatial, params, 20, rng), rng);
    s.electorate = make_random_electorate(20, 5, NoiseSpec::zero(), TargetRule::Random, 0, rng);
    s.delta = 0.3;
    s.budget = derived_budget(0.10, 20);
    scenarios.push_back(std::move(s));
  }
  GreedyOptions greedy;  // Monte-Carlo mode, 300 cascades per evaluation
  Rng trng(8002);
  auto timings = timing_comparison(scenarios, {"greedy-apx", "SPpagerank1.0_pos"}, greedy, trng);
  double greedy_s = timings[0].second.mean;
  double heur_s = timings[1].second.mean;
  double ratio = heur_s > 0.0 ? greedy_s / heur_s : 1e300;
  bool ok_ratio = ratio >= 50.0;

  // (b) heuristic cost growth across a size sweep
  std::vector<int> sweep = {200, 632, 2000, 6324, 20000};
  std::vector<double> log_n, log_t;
  for (int n : sweep) {
    Rng rng = Rng::derive(8003, {static_cast<uint64_t>(n)});
    Scenario s;
    s.net = assign_uniform_probabilities(
        generate_graph(GraphFamily::WattsStrogatzSpatial, params, n, rng), rng);
    s.electorate =
        make_random_electorate(n, 5, NoiseSpec::zero(), TargetRule::Random, 0, rng);
    s.delta = 0.3;
    s.budget = derived_budget(0.10, n);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<NodeId> seeds = select_seeds_heuristic("SPpagerank1.0_pos", s, s.budget);
      auto t1 = std::chrono::steady_clock::now();
      if (seeds.size() != static_cast<size_t>(s.budget)) {
        *detail = "sweep selection returned the wrong seed count";
        return false;
      }
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    log_n.push_back(std::log(static_cast<double>(n)));
    log_t.push_back(std::log(best));
  }
  double nbar = 0.0, tbar = 0.0;
  for (size_t i = 0; i < log_n.size(); ++i) {
    nbar += log_n[i];
    tbar += log_t[i];
  }
  nbar /= static_cast<double>(log_n.size());
  tbar /= static_cast<double>(log_t.size());
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < log_n.size(); ++i) {
    num += (log_n[i] - nbar) * (log_t[i] - tbar);
    den += (log_n[i] - nbar) * (log_n[i] - nbar);
  }
  double slope = num / den;
  bool ok_slope = slope >= 0.8 && slope <= 1.6;

  *detail = "selection speedup " + fmt(ratio) + "x (want >= 50x); sweep {200..20000} log-log slope " +
            fmt(slope) + " (want [0.8, 1.6])";
  return ok_ratio && ok_slope;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    bool (*run)(std::string*);
  };
  const Criterion criteria[] = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(&detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.index << ": " << detail
              << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
