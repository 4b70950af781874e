#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "emsim/model.hpp"
#include "emsim/rng.hpp"

namespace emsim {

struct OutEdge {
  NodeId to = 0;
  double p = 0.0;  // independent activation probability in [0, 1]
};

// Directed graph over nodes 0..n-1 with per-edge activation probabilities.
// No self-loops, at most one edge per ordered pair; out-edges are kept sorted
// by head so iteration order (and therefore every seeded run) is stable.
class SocialNetwork {
 public:
  SocialNetwork() = default;
  explicit SocialNetwork(int n) : adj_(static_cast<size_t>(n)) {}

  int num_nodes() const { return static_cast<int>(adj_.size()); }
  int64_t num_edges() const { return edges_; }

  // Inserts u->v; returns false when the edge already exists (first insert
  // wins).  Throws ConfigError on self-loops, bad ids or p outside [0, 1].
  bool add_edge(NodeId u, NodeId v, double p);
  bool has_edge(NodeId u, NodeId v) const;
  std::span<const OutEdge> out_edges(NodeId u) const {
    return {adj_[static_cast<size_t>(u)].data(), adj_[static_cast<size_t>(u)].size()};
  }
  int out_degree(NodeId u) const { return static_cast<int>(adj_[static_cast<size_t>(u)].size()); }

  // Visits edges as (u, v, p) in canonical order: u ascending, then v.
  template <class F>
  void for_each_edge(F&& f) const {
    for (NodeId u = 0; u < num_nodes(); ++u)
      for (const OutEdge& e : adj_[static_cast<size_t>(u)]) f(u, e.to, e.p);
  }

  // Rewrites every probability as f(u, v, old_p); used by the assigners.
  template <class F>
  void map_probabilities(F&& f) {
    for (NodeId u = 0; u < num_nodes(); ++u)
      for (OutEdge& e : adj_[static_cast<size_t>(u)]) e.p = check_p(f(u, e.to, e.p));
  }

 private:
  static double check_p(double p);
  std::vector<std::vector<OutEdge>> adj_;
  int64_t edges_ = 0;
};

// Node -> community label; labels must be dense 0..k-1.
struct Partition {
  std::vector<int32_t> community;
  int num_nodes() const { return static_cast<int>(community.size()); }
  int num_communities() const;
  std::vector<int64_t> community_sizes() const;
  void validate() const;  // throws DataError when labels are not dense
};

// Spatial small-world graph: n nodes placed uniformly in a square of side
// sqrt(n/20) (constant density 20 per unit area); mutual "strong" ties join
// every pair within `radius`; each node then draws `weak_ties_k` directed
// weak ties among its non-neighbors with probability proportional to
// distance^-exponent_q (duplicate draws are skipped, not retried).
struct SpatialGraph {
  SocialNetwork net;
  std::vector<std::array<double, 2>> coords;
  double side = 0.0;
};
SpatialGraph gen_watts_strogatz_spatial(int n, double radius, int weak_ties_k, double exponent_q,
                                        Rng& rng);

// Growing graph: node 0 seeds it, each arriving node links (mutually) to one
// existing node -- degree-proportional with probability p_pref, else uniform.
SocialNetwork gen_preferential_attachment(int n, double p_pref, Rng& rng);

// Draws each edge's probability uniformly from intra_range when both
// endpoints share a community, else from inter_range.  Every node must be
// covered by the partition.
SocialNetwork assign_community_probabilities(SocialNetwork net, const Partition& partition,
                                             std::pair<double, double> intra_range,
                                             std::pair<double, double> inter_range, Rng& rng);

// Draws each edge's probability uniformly from [0, 1).
SocialNetwork assign_uniform_probabilities(SocialNetwork net, Rng& rng);

}  // namespace emsim
