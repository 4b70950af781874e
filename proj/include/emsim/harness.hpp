#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emsim/campaign.hpp"
#include "emsim/graph.hpp"
#include "emsim/model.hpp"
#include "emsim/rng.hpp"
#include "emsim/scenario.hpp"
#include "emsim/stats.hpp"

namespace emsim {

// Experiment driver: enumerates scenarios deterministically from one master
// seed, runs campaigns over a parameter grid, and aggregates per-cell
// statistics into CSV / plot data.

enum class GraphFamily { WattsStrogatzSpatial, PreferentialAttachment };

struct GraphParams {
  double ws_radius = 0.13;   // strong-tie distance threshold
  int ws_weak_ties = 2;      // directed weak ties added per node
  double ws_exponent = 2.0;  // weak-tie weight ~ distance^-exponent
  double pa_p_pref = 0.75;   // probability of degree-proportional attachment
};

// Structure only (all probabilities 1); assign probabilities separately.
SocialNetwork generate_graph(GraphFamily family, const GraphParams& params, int n, Rng& rng);

enum class TargetRule { Random, Rightmost, Fixed };

TargetRule parse_target_rule(const std::string& text, CandidateId* fixed_id);

struct ExperimentGrid {
  std::vector<int> sizes{20};
  int n_candidates = 5;
  std::vector<double> budget_fractions{0.10};
  std::vector<double> deltas{0.3};
  std::vector<NoiseSpec> noises{NoiseSpec::zero()};
  GraphFamily family = GraphFamily::WattsStrogatzSpatial;
  GraphParams graph_params;
  int placements = 8;  // voter/candidate position draws
  int graphs = 10;     // graph structures per size
  int probsets = 10;   // probability assignments per graph
  int rounds = 10;
  bool stop_at_unanimity = true;
  std::vector<std::string> algorithms{"SPpagerank1.0_pos"};
  uint64_t master_seed = 0;
  TargetRule target_rule = TargetRule::Random;
  CandidateId target_fixed = 0;
  int threads = 1;
  GreedyOptions greedy;

  int scenarios_per_size() const { return placements * graphs * probsets; }
  void validate() const;  // throws ConfigError
};

// One aggregated cell: statistics across the placements*graphs*probsets
// replications of a (algorithm, size, budget, delta, noise, round) setting.
struct ResultRow {
  std::string algorithm;
  int voters = 0;
  double budget_fraction = 0.0;
  double delta = 0.0;
  std::string noise;
  int round = 0;
  MeanStd value;    // normalized ΔMoV
  MeanStd seconds;  // seed-selection wall time (rounds actually run)
  int count = 0;    // replications behind `value`
};

struct ResultTable {
  std::vector<ResultRow> rows;  // canonical order: algorithm, size, budget, delta, noise, round
};

// Campaigns that stop early keep contributing their final value to later
// rounds; their timing contributes only to rounds they actually ran.
ResultTable run_grid(const ExperimentGrid& grid);

// Columns: algorithm,voters,budget_fraction,delta,noise,round,mean,std,
// time_mean_s,time_std_s.  mean/std use 3 decimals, times full precision.
void emit_csv(const ResultTable& table, std::ostream& out);
void emit_csv(const ResultTable& table, const std::string& path);
ResultTable parse_result_csv(const std::string& path);

// Long format: one (metric, value) line per cell statistic.
void emit_plot_data(const ResultTable& table, std::ostream& out);
void emit_plot_data(const ResultTable& table, const std::string& path);

// Uniform positions in [-1, 1] for candidates then voters, views under
// `noise`, target chosen by rule; all draws from `rng` in that order.
Electorate make_random_electorate(int n_voters, int n_candidates, const NoiseSpec& noise,
                                  TargetRule rule, CandidateId fixed_target, Rng& rng);

// Community-driven placement: candidates at -1, -0.5, 0, 0.5, 1 with the
// middle one as target; voters of the seven smallest communities (ties by
// lower label) draw positions in [-0.25, 0.25], all others uniformly over
// [-1, -0.25] ∪ [0.25, 1).
Electorate make_community_electorate(const Partition& partition, const NoiseSpec& noise, Rng& rng);

// Wall time of the seed-selection call alone, per algorithm, across the given
// scenarios (each scenario carries its own budget and delta).
std::vector<std::pair<std::string, MeanStd>> timing_comparison(
    std::span<const Scenario> scenarios, const std::vector<std::string>& algorithms,
    const GreedyOptions& greedy, Rng& rng);

// How far preference orders drift from single-peakedness as view noise grows.
struct SwapDistRow {
  NoiseSpec noise;
  double mean_distance = 0.0;
  double std_distance = 0.0;
  double frac_single_peaked = 0.0;
  int64_t samples = 0;  // voters * replications
};

std::vector<SwapDistRow> swap_distance_study(int n_voters, int n_candidates,
                                             std::span<const NoiseSpec> noises, int reps,
                                             uint64_t seed);

// Config text: '#' comments, [grid] / [graph] sections, comma-separated
// lists.  Unknown keys are errors.
ExperimentGrid parse_grid_config_text(const std::string& text);
ExperimentGrid parse_grid_config(const std::string& path);

}  // namespace emsim
