#pragma once

#include <cstdint>
#include <span>

#include "emsim/scenario.hpp"
#include "emsim/stats.hpp"

namespace emsim {

// Monte-Carlo budget for estimating weighted influence to within epsilon*N
// absolute error with confidence >= 1 - 2*lambda^2 (Chernoff-style bound):
//   T = ceil((N/epsilon)^2 * ln(1/lambda))
// N is the scale of one run's value (e.g. the weight-1 node count).
int64_t sims_for_sigma(double n_scale, double epsilon, double lambda);

// Same budget specialized to one-round ΔMoV, whose per-run value lies in
// [0, b] with b = |V| - |V_c*| + |V_cbar| (Hoeffding, confidence 1-2*lambda^2).
int64_t sims_for_dmov(int64_t n_voters, int64_t votes_cstar, int64_t votes_best_opp,
                      double epsilon, double lambda);

// Mean over T independent cascades of the total weight activated.  Streams
// are derived per run index, so the result is identical for any `threads`.
double estimate_sigma_w(const SocialNetwork& net, std::span<const uint8_t> weights,
                        std::span<const NodeId> seeds, int64_t runs, Rng& rng, int threads = 1);

// Mean/std over T runs of the realized one-round ΔMoV for the scenario's
// target: simulate a cascade, move every activated voter delta toward her
// perceived target, sticky re-vote, diff the margins.
MeanStd estimate_dmov(const Scenario& s, std::span<const NodeId> seeds, int64_t runs, Rng& rng,
                      int threads = 1);

}  // namespace emsim
