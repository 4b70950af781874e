#include "emsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "emsim/errors.hpp"

namespace emsim {

double SocialNetwork::check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("edge probability outside [0, 1]");
  return p;
}

bool SocialNetwork::add_edge(NodeId u, NodeId v, double p) {
  int n = num_nodes();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw ConfigError("edge endpoint out of range: " + std::to_string(u) + "->" + std::to_string(v));
  if (u == v) throw ConfigError("self-loops are not allowed (node " + std::to_string(u) + ")");
  check_p(p);
  auto& row = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const OutEdge& e, NodeId id) { return e.to < id; });
  if (it != row.end() && it->to == v) return false;
  row.insert(it, OutEdge{v, p});
  ++edges_;
  return true;
}

bool SocialNetwork::has_edge(NodeId u, NodeId v) const {
  const auto& row = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const OutEdge& e, NodeId id) { return e.to < id; });
  return it != row.end() && it->to == v;
}

int Partition::num_communities() const {
  int32_t max_label = -1;
  for (int32_t c : community) max_label = std::max(max_label, c);
  return static_cast<int>(max_label + 1);
}

std::vector<int64_t> Partition::community_sizes() const {
  std::vector<int64_t> sizes(static_cast<size_t>(num_communities()), 0);
  for (int32_t c : community) {
    if (c < 0) throw DataError("negative community label");
    sizes[static_cast<size_t>(c)]++;
  }
  return sizes;
}

void Partition::validate() const {
  if (community.empty()) throw DataError("empty partition");
  for (int64_t s : community_sizes())
    if (s == 0) throw DataError("community labels must be dense 0..k-1");
}

SpatialGraph gen_watts_strogatz_spatial(int n, double radius, int weak_ties_k, double exponent_q,
                                        Rng& rng) {
  if (n < 1) throw ConfigError("graph needs at least one node");
  if (radius < 0.0 || weak_ties_k < 0) throw ConfigError("bad spatial graph parameters");
  SpatialGraph g;
  g.side = std::sqrt(n / 20.0);  // keeps density at 20 nodes per unit area
  g.net = SocialNetwork(n);
  g.coords.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    g.coords[static_cast<size_t>(v)][0] = rng.uniform(0.0, g.side);
    g.coords[static_cast<size_t>(v)][1] = rng.uniform(0.0, g.side);
  }
  auto dist = [&](int a, int b) {
    double dx = g.coords[static_cast<size_t>(a)][0] - g.coords[static_cast<size_t>(b)][0];
    double dy = g.coords[static_cast<size_t>(a)][1] - g.coords[static_cast<size_t>(b)][1];
    return std::sqrt(dx * dx + dy * dy);
  };
  // Strong ties: mutual edges between every pair within `radius`.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dist(u, v) <= radius) {
        g.net.add_edge(u, v, 1.0);
        g.net.add_edge(v, u, 1.0);
      }
  // Weak ties: directed, sampled among non-neighbors with weight d^-q.
  // A draw that lands on an already-added weak tie is skipped, not retried.
  std::vector<int> cand;
  std::vector<double> cum;
  for (int u = 0; u < n; ++u) {
    cand.clear();
    cum.clear();
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
      if (v == u || g.net.has_edge(u, v)) continue;  // strong ties are mutual, so this is N(u)
      double d = std::max(dist(u, v), 1e-12);
      total += std::pow(d, -exponent_q);
      cand.push_back(v);
      cum.push_back(total);
    }
    if (cand.empty()) continue;
    for (int k = 0; k < weak_ties_k; ++k) {
      double r = rng.uniform01() * total;
      size_t i = static_cast<size_t>(std::lower_bound(cum.begin(), cum.end(), r) - cum.begin());
      if (i >= cand.size()) i = cand.size() - 1;
      g.net.add_edge(u, cand[i], 1.0);
    }
  }
  return g;
}

SocialNetwork gen_preferential_attachment(int n, double p_pref, Rng& rng) {
  if (n < 1) throw ConfigError("graph needs at least one node");
  if (!(p_pref >= 0.0 && p_pref <= 1.0)) throw ConfigError("p_pref outside [0, 1]");
  SocialNetwork net(n);
  if (n == 1) return net;
  std::vector<NodeId> endpoints;  // each mutual pair contributes both ends: uniform
  endpoints.reserve(static_cast<size_t>(2 * (n - 1)));  // element = degree-proportional node
  net.add_edge(1, 0, 1.0);
  net.add_edge(0, 1, 1.0);
  endpoints.push_back(1);
  endpoints.push_back(0);
  for (NodeId t = 2; t < n; ++t) {
    NodeId pick;
    if (rng.bernoulli(p_pref)) {
      pick = endpoints[static_cast<size_t>(rng.below(endpoints.size()))];
    } else {
      pick = static_cast<NodeId>(rng.below(static_cast<uint64_t>(t)));
    }
    net.add_edge(t, pick, 1.0);
    net.add_edge(pick, t, 1.0);
    endpoints.push_back(t);
    endpoints.push_back(pick);
  }
  return net;
}

SocialNetwork assign_community_probabilities(SocialNetwork net, const Partition& partition,
                                             std::pair<double, double> intra_range,
                                             std::pair<double, double> inter_range, Rng& rng) {
  partition.validate();
  if (partition.num_nodes() < net.num_nodes())
    throw ConfigError("partition leaves nodes uncovered (" +
                      std::to_string(partition.num_nodes()) + " labels for " +
                      std::to_string(net.num_nodes()) + " nodes)");
  for (auto r : {intra_range, inter_range})
    if (!(0.0 <= r.first && r.first <= r.second && r.second <= 1.0))
      throw ConfigError("probability ranges must be ordered and within [0, 1]");
  net.map_probabilities([&](NodeId u, NodeId v, double) {
    bool intra = partition.community[static_cast<size_t>(u)] ==
                 partition.community[static_cast<size_t>(v)];
    const auto& r = intra ? intra_range : inter_range;
    return rng.uniform(r.first, r.second);
  });
  return net;
}

SocialNetwork assign_uniform_probabilities(SocialNetwork net, Rng& rng) {
  net.map_probabilities([&](NodeId, NodeId, double) { return rng.uniform01(); });
  return net;
}

}  // namespace emsim
