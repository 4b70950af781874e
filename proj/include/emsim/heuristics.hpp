#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emsim/greedy.hpp"
#include "emsim/scenario.hpp"

namespace emsim {

// BFS neighborhood: hop limit plus an optional size cap (nodes are taken in
// ascending-id order within each hop layer until the cap is hit).
struct NeighborhoodSpec {
  int max_hops = 1;
  int max_size = -1;  // < 0 means unlimited
};

enum class CombineMode {
  LexStructuralFirst,  // order by structural score, political breaks ties
  LexPoliticalFirst,
  Merge,  // alpha * political_hat + (1 - alpha) * structural_hat
};

struct Combiner {
  CombineMode mode = CombineMode::LexStructuralFirst;
  double alpha = 0.5;  // only used by Merge
};

// How far a voter is from the target, politically:
//   Standard : 0 when predicted to vote the target, else |x_v - x_target|
//   ManipEq1 : 1 on the manipulable set, 0 on predicted target voters, inf else
//   ManipStar: 1 on the manipulable set, 0 on predicted target voters, else
//              |x_v - x_t| / (|x_v - x_t| - |moved(x_v) - x_t|)  (inf when the
//              message would not bring the voter closer by more than 1e-12)
enum class PoliticalDistanceKind { Standard, ManipEq1, ManipStar };

// Which neighbors count toward the political score:
//   Positive: every u with distance > 0 (an infinite distance contributes 0)
//   EqOne   : only u at distance exactly 1
enum class ScoreFilter { Positive, EqOne };

// Cheap operation counter used to audit the O(|V| + m*|E|) scoring bound.
struct OpCounter {
  int64_t ops = 0;
};

// s_G(v) = sum over neighbors u within max_hops of 1 / hops(v, u).
std::vector<double> structural_scores(const SocialNetwork& net, const NeighborhoodSpec& spec,
                                      OpCounter* counter = nullptr);
double structural_score(const SocialNetwork& net, NodeId v, const NeighborhoodSpec& spec);

// s_P(v) = sum over u in N(v) ∪ {v} passing the filter of w(v,u) / d_P(u),
// where w(v,v) = 1 and w(v,u) is the best probability product over minimum-
// hop paths.  The political distance uses the manipulator's knowledge only
// (true positions and predicted votes).
std::vector<double> political_scores(const SocialNetwork& net, const Electorate& e, double delta,
                                     const NeighborhoodSpec& spec, PoliticalDistanceKind dist,
                                     ScoreFilter filter, OpCounter* counter = nullptr);
double political_score(const SocialNetwork& net, const Electorate& e, double delta, NodeId v,
                       const NeighborhoodSpec& spec, PoliticalDistanceKind dist,
                       ScoreFilter filter);

// Per-node political distances (exposed for tests and score inspection).
std::vector<double> political_distances(const Electorate& e, double delta,
                                        PoliticalDistanceKind dist);

// scores / population-std(scores); all zeros when the std is zero.
std::vector<double> standardize(std::span<const double> scores);

// alpha * standardize(political) + (1 - alpha) * standardize(structural).
std::vector<double> merge_scores(std::span<const double> structural,
                                 std::span<const double> political, double alpha);

// Total order of nodes by the combined score (descending), ties by node id.
std::vector<NodeId> combine_and_rank(std::span<const double> structural,
                                     std::span<const double> political, const Combiner& comb);

// PageRank where node v splits its rank over out-neighbors u proportionally
// to z[u] (weights must be >= 0; a node whose out-weights are all zero splits
// uniformly; dangling rank is spread uniformly over all nodes).  Stops when
// the L1 change drops below tol or after max_iters sweeps.
struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-10;
  int max_iters = 200;
  bool edge_prob_weighted = false;  // share by z[u] * p(v, u) instead of z[u]
};
std::vector<double> weighted_pagerank(const SocialNetwork& net, std::span<const double> z,
                                      const PageRankOptions& opts = {});

// The named selection strategies.  "SPpagerank1.0_manipstar_pos" is accepted
// as an alias of "SPpagerank1.0_manip*_pos" for shell friendliness.
std::vector<std::string> heuristic_catalog();
bool is_known_heuristic(const std::string& name);

struct HeuristicOptions {
  PageRankOptions pagerank;
};
std::vector<NodeId> select_seeds_heuristic(const std::string& name, const Scenario& s, int budget,
                                           const HeuristicOptions& opts = {},
                                           OpCounter* counter = nullptr);

}  // namespace emsim
