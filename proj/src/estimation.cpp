#include "emsim/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "emsim/diffusion.hpp"
#include "emsim/errors.hpp"
#include "emsim/parallel.hpp"

namespace emsim {

int64_t sims_for_sigma(double n_scale, double epsilon, double lambda) {
  if (!(n_scale >= 0.0)) throw ConfigError("sims_for_sigma: scale must be >= 0");
  if (!(epsilon > 0.0)) throw ConfigError("sims_for_sigma: epsilon must be > 0");
  if (!(lambda > 0.0 && lambda < 1.0)) throw ConfigError("sims_for_sigma: lambda must be in (0, 1)");
  double t = std::ceil((n_scale / epsilon) * (n_scale / epsilon) * std::log(1.0 / lambda));
  return std::max<int64_t>(1, static_cast<int64_t>(t));
}

int64_t sims_for_dmov(int64_t n_voters, int64_t votes_cstar, int64_t votes_best_opp,
                      double epsilon, double lambda) {
  int64_t b = n_voters - votes_cstar + votes_best_opp;
  if (b < 0) throw ConfigError("sims_for_dmov: inconsistent vote counts");
  return sims_for_sigma(static_cast<double>(b), epsilon, lambda);
}

double estimate_sigma_w(const SocialNetwork& net, std::span<const uint8_t> weights,
                        std::span<const NodeId> seeds, int64_t runs, Rng& rng, int threads) {
  if (runs < 1) throw ConfigError("estimate_sigma_w: need at least one run");
  if (static_cast<int>(weights.size()) != net.num_nodes())
    throw ConfigError("estimate_sigma_w: weight vector size mismatch");
  uint64_t master = rng.next_u64();
  std::vector<double> per_run(static_cast<size_t>(runs));
  std::vector<NodeId> seed_copy(seeds.begin(), seeds.end());
  parallel_for(runs, threads, [&](int64_t i) {
    Rng run_rng = Rng::derive(master, {static_cast<uint64_t>(i)});
    ActivationResult res = simulate_ic(net, seed_copy, run_rng);
    int64_t w = 0;
    for (NodeId v : res.activated) w += weights[static_cast<size_t>(v)];
    per_run[static_cast<size_t>(i)] = static_cast<double>(w);
  });
  return kahan_sum(per_run) / static_cast<double>(runs);
}

MeanStd estimate_dmov(const Scenario& s, std::span<const NodeId> seeds, int64_t runs, Rng& rng,
                      int threads) {
  if (runs < 1) throw ConfigError("estimate_dmov: need at least one run");
  OneRoundVotes table = one_round_votes(s);
  int64_t bound = dmov_bound(table.base, s.electorate.target);
  uint64_t master = rng.next_u64();
  std::vector<double> per_run(static_cast<size_t>(runs));
  std::vector<NodeId> seed_copy(seeds.begin(), seeds.end());
  parallel_for(runs, threads, [&](int64_t i) {
    Rng run_rng = Rng::derive(master, {static_cast<uint64_t>(i)});
    ActivationResult res = simulate_ic(s.net, seed_copy, run_rng);
    int64_t dmov = table.dmov_for(res.activated, s.electorate.target);
    // Sanity: one round can never beat the vote-count bound, and the target
    // never loses voters (messages only pull toward it).
    if (dmov > bound) throw std::logic_error("estimate_dmov: run exceeded the ΔMoV bound");
    int64_t target_gain = 0;
    for (NodeId v : res.activated) {
      CandidateId was = table.current[static_cast<size_t>(v)];
      CandidateId now = table.influenced[static_cast<size_t>(v)];
      if (was != now && now == s.electorate.target) ++target_gain;
      if (was == s.electorate.target && now != was)
        throw std::logic_error("estimate_dmov: a target supporter was pushed away");
    }
    (void)target_gain;
    per_run[static_cast<size_t>(i)] = static_cast<double>(dmov);
  });
  return mean_std(per_run);
}

}  // namespace emsim
