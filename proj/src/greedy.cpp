#include "emsim/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "emsim/diffusion.hpp"
#include "emsim/errors.hpp"
#include "emsim/kernels.hpp"

namespace emsim {

namespace {

using WorldSet = std::vector<std::pair<LiveGraph, double>>;

double sigma_w_on_worlds(const WorldSet& worlds, std::span<const uint8_t> weights,
                         std::span<const NodeId> seeds) {
  double acc = 0.0;
  for (const auto& [world, prob] : worlds) {
    int64_t w = 0;
    for (NodeId v : reachable(world, seeds)) w += weights[static_cast<size_t>(v)];
    acc += prob * static_cast<double>(w);
  }
  return acc;
}

// Scratch for the exact ΔMoV evaluation: one full sticky re-tally per world.
struct RecountScratch {
  std::vector<double> base_pos, moved_pos;
  std::vector<CandidateId> new_votes;
};

double expected_dmov_on_worlds(const Scenario& s, const WorldSet& worlds,
                               std::span<const NodeId> seeds, RecountScratch& scratch) {
  const Electorate& e = s.electorate;
  int n = e.num_voters(), m = e.num_candidates();
  scratch.base_pos.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v)
    scratch.base_pos[static_cast<size_t>(v)] = e.voters[static_cast<size_t>(v)].position;
  scratch.new_votes.resize(static_cast<size_t>(n));
  VoteTally before = tally_votes(e.votes, m);
  int64_t before_mov = margin_of_victory(before, e.target);
  double acc = 0.0;
  for (const auto& [world, prob] : worlds) {
    scratch.moved_pos = scratch.base_pos;
    for (NodeId v : reachable(world, seeds))
      scratch.moved_pos[static_cast<size_t>(v)] =
          apply_influence(scratch.base_pos[static_cast<size_t>(v)], e.views(v, e.target), s.delta);
    kernels::ops().nearest_candidate(scratch.moved_pos.data(), e.views.column_major(), n, m,
                                     e.votes.data(), scratch.new_votes.data());
    VoteTally after = tally_votes(scratch.new_votes, m);
    acc += prob * static_cast<double>(margin_of_victory(after, e.target) - before_mov);
  }
  return acc;
}

}  // namespace

ManipulableSet manipulable_set(const Electorate& e, double delta) {
  e.validate();
  if (!(delta >= 0.0)) throw ConfigError("manipulable_set: delta must be >= 0");
  int n = e.num_voters(), m = e.num_candidates();
  std::vector<double> true_pos(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) true_pos[static_cast<size_t>(c)] = e.candidates[static_cast<size_t>(c)].position;
  ManipulableSet out;
  out.switchers_to.assign(static_cast<size_t>(m), {});
  out.weights.assign(static_cast<size_t>(n), 0);
  out.predicted_current.resize(static_cast<size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    double x = e.voters[static_cast<size_t>(v)].position;
    CandidateId cur = preferred_candidate(x, true_pos);
    out.predicted_current[static_cast<size_t>(v)] = cur;
    if (cur == e.target) continue;  // already on board: in neither set
    double moved = apply_influence(x, true_pos[static_cast<size_t>(e.target)], delta);
    CandidateId nxt = preferred_candidate(moved, true_pos, cur);
    if (nxt == e.target) {
      out.manipulable.push_back(v);
      out.weights[static_cast<size_t>(v)] = 1;
    } else if (nxt != cur) {
      out.switchers_to[static_cast<size_t>(nxt)].push_back(v);
    }
  }
  return out;
}

std::vector<NodeId> greedy_seed_selection(const SocialNetwork& net,
                                          std::span<const uint8_t> weights, int budget,
                                          const GreedyOptions& opts, Rng& rng) {
  int n = net.num_nodes();
  if (static_cast<int>(weights.size()) != n)
    throw ConfigError("greedy_seed_selection: weight vector size mismatch");
  if (budget < 1) throw ConfigError("greedy_seed_selection: budget must be >= 1");
  int picks = std::min(budget, n);
  uint64_t master = rng.next_u64();

  WorldSet worlds;
  if (opts.exact) worlds = enumerate_live_graphs(net);

  std::vector<NodeId> selected;
  std::vector<uint8_t> in_set(static_cast<size_t>(n), 0);
  std::vector<NodeId> trial;
  auto evaluate = [&](NodeId u, int iter) {
    trial = selected;
    trial.push_back(u);
    if (opts.exact) return sigma_w_on_worlds(worlds, weights, trial);
    Rng eval_rng = Rng::derive(master, {static_cast<uint64_t>(iter), static_cast<uint64_t>(u)});
    return estimate_sigma_w(net, weights, trial, opts.mc_runs, eval_rng, opts.threads);
  };

  if (!opts.lazy) {
    for (int iter = 0; iter < picks; ++iter) {
      double best = -1.0;
      NodeId best_u = -1;
      for (NodeId u = 0; u < n; ++u) {
        if (in_set[static_cast<size_t>(u)]) continue;
        double val = evaluate(u, iter);
        if (best_u < 0 || val > best) {  // ascending scan leaves smallest id on ties
          best = val;
          best_u = u;
        }
      }
      in_set[static_cast<size_t>(best_u)] = 1;
      selected.push_back(best_u);
    }
  } else {
    // CELF-style: marginal gains only shrink (submodularity), so an entry
    // re-evaluated at the current iteration is safe to take.
    double sigma_sel = 0.0;
    struct Entry {
      double gain;
      NodeId u;
      int iter;
    };
    auto cmp = [](const Entry& a, const Entry& b) {
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.u > b.u;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> pq(cmp);
    for (NodeId u = 0; u < n; ++u) pq.push({evaluate(u, 0), u, 0});
    for (int iter = 0; iter < picks; ++iter) {
      for (;;) {
        Entry top = pq.top();
        if (top.iter == iter) {
          pq.pop();
          in_set[static_cast<size_t>(top.u)] = 1;
          selected.push_back(top.u);
          sigma_sel += top.gain;
          break;
        }
        pq.pop();
        pq.push({evaluate(top.u, iter) - sigma_sel, top.u, iter});
      }
    }
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

double exact_sigma_w(const SocialNetwork& net, std::span<const uint8_t> weights,
                     std::span<const NodeId> seeds, int max_edges) {
  if (static_cast<int>(weights.size()) != net.num_nodes())
    throw ConfigError("exact_sigma_w: weight vector size mismatch");
  return sigma_w_on_worlds(enumerate_live_graphs(net, max_edges), weights, seeds);
}

double x_of_s(const Scenario& s, std::span<const NodeId> seeds, int64_t runs, Rng& rng) {
  if (runs < 1) throw ConfigError("x_of_s: need at least one run");
  ManipulableSet ms = manipulable_set(s.electorate, s.delta);
  int m = s.electorate.num_candidates();
  uint64_t master = rng.next_u64();
  std::vector<NodeId> seed_copy(seeds.begin(), seeds.end());
  double acc = 0.0;
  for (int64_t i = 0; i < runs; ++i) {
    Rng run_rng = Rng::derive(master, {static_cast<uint64_t>(i)});
    ActivationResult res = simulate_ic(s.net, seed_copy, run_rng);
    std::vector<int64_t> hit(static_cast<size_t>(m), 0);
    for (CandidateId c = 0; c < m; ++c) {
      if (c == s.electorate.target) continue;
      for (NodeId v : ms.switchers_to[static_cast<size_t>(c)])
        if (std::binary_search(res.activated.begin(), res.activated.end(), v))
          hit[static_cast<size_t>(c)]++;
    }
    acc += static_cast<double>(*std::max_element(hit.begin(), hit.end()));
  }
  return acc / static_cast<double>(runs);
}

double x_of_s_exact(const Scenario& s, std::span<const NodeId> seeds, int max_edges) {
  ManipulableSet ms = manipulable_set(s.electorate, s.delta);
  int m = s.electorate.num_candidates();
  double acc = 0.0;
  for (const auto& [world, prob] : enumerate_live_graphs(s.net, max_edges)) {
    std::vector<NodeId> reach = reachable(world, seeds);
    int64_t best = 0;
    for (CandidateId c = 0; c < m; ++c) {
      if (c == s.electorate.target) continue;
      int64_t hit = 0;
      for (NodeId v : ms.switchers_to[static_cast<size_t>(c)])
        if (std::binary_search(reach.begin(), reach.end(), v)) ++hit;
      best = std::max(best, hit);
    }
    acc += prob * static_cast<double>(best);
  }
  return acc;
}

double exact_expected_dmov(const Scenario& s, std::span<const NodeId> seeds, int max_edges) {
  s.validate();
  WorldSet worlds = enumerate_live_graphs(s.net, max_edges);
  RecountScratch scratch;
  return expected_dmov_on_worlds(s, worlds, seeds, scratch);
}

BruteForceResult brute_force_optimal(const Scenario& s, int budget) {
  s.validate();
  int n = s.net.num_nodes();
  if (budget < 0) throw ConfigError("brute_force_optimal: budget must be >= 0");
  int b = std::min(budget, n);
  double sets = 0.0;
  {
    double c = 1.0;
    for (int k = 0; k <= b; ++k) {
      sets += c;
      c = c * (n - k) / (k + 1);
    }
  }
  double worlds_count = std::pow(2.0, static_cast<double>(s.net.num_edges()));
  if (sets * worlds_count > 1e7)
    throw CapabilityError("brute_force_optimal: " + std::to_string(sets * worlds_count) +
                          " (seed set, world) pairs exceed the 1e7 guard");
  WorldSet worlds = enumerate_live_graphs(s.net);
  RecountScratch scratch;
  BruteForceResult best;  // the empty set scores 0 by definition
  best.expected_dmov = 0.0;
  std::vector<NodeId> combo;
  for (int size = 1; size <= b; ++size) {
    combo.resize(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) combo[static_cast<size_t>(i)] = i;
    for (;;) {
      double val = expected_dmov_on_worlds(s, worlds, combo, scratch);
      if (val > best.expected_dmov) {
        best.expected_dmov = val;
        best.seeds = combo;
      }
      // next lexicographic combination
      int i = size - 1;
      while (i >= 0 && combo[static_cast<size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      combo[static_cast<size_t>(i)]++;
      for (int j = i + 1; j < size; ++j) combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return best;
}

}  // namespace emsim
