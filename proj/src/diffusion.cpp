#include "emsim/diffusion.hpp"

#include <algorithm>
#include <string>

#include "emsim/errors.hpp"

namespace emsim {

namespace {

void check_seeds(const SocialNetwork& net, std::span<const NodeId> seeds) {
  for (NodeId s : seeds)
    if (s < 0 || s >= net.num_nodes())
      throw ConfigError("seed node out of range: " + std::to_string(s));
}

}  // namespace

ActivationResult simulate_ic(const SocialNetwork& net, std::span<const NodeId> seeds, Rng& rng,
                             std::vector<int>* edge_tests) {
  check_seeds(net, seeds);
  int n = net.num_nodes();
  std::vector<int64_t> edge_base;
  if (edge_tests) {
    edge_tests->assign(static_cast<size_t>(net.num_edges()), 0);
    edge_base.assign(static_cast<size_t>(n) + 1, 0);
    for (NodeId u = 0; u < n; ++u)
      edge_base[static_cast<size_t>(u) + 1] = edge_base[static_cast<size_t>(u)] + net.out_degree(u);
  }
  std::vector<uint8_t> active(static_cast<size_t>(n), 0);
  std::vector<NodeId> frontier;
  for (NodeId s : seeds)
    if (!active[static_cast<size_t>(s)]) {
      active[static_cast<size_t>(s)] = 1;
      frontier.push_back(s);
    }
  std::sort(frontier.begin(), frontier.end());
  ActivationResult out;
  out.activated = frontier;
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    next.clear();
    // Frontier ids ascend and out-edges are head-sorted, so the order in
    // which edges consume randomness is fully determined by the seed.
    for (NodeId u : frontier) {
      auto edges = net.out_edges(u);
      for (size_t i = 0; i < edges.size(); ++i) {
        const OutEdge& e = edges[i];
        if (active[static_cast<size_t>(e.to)]) continue;  // edge never tested
        if (edge_tests)
          (*edge_tests)[static_cast<size_t>(edge_base[static_cast<size_t>(u)] + static_cast<int64_t>(i))]++;
        if (rng.bernoulli(e.p)) {
          active[static_cast<size_t>(e.to)] = 1;
          next.push_back(e.to);
        }
      }
    }
    std::sort(next.begin(), next.end());
    if (!next.empty()) ++out.rounds;
    out.activated.insert(out.activated.end(), next.begin(), next.end());
    frontier.swap(next);
  }
  std::sort(out.activated.begin(), out.activated.end());
  return out;
}

LiveGraph sample_live_graph(const SocialNetwork& net, Rng& rng) {
  LiveGraph g;
  g.n = net.num_nodes();
  g.adj.assign(static_cast<size_t>(g.n), {});
  net.for_each_edge([&](NodeId u, NodeId v, double p) {
    if (rng.bernoulli(p)) g.adj[static_cast<size_t>(u)].push_back(v);
  });
  return g;
}

std::vector<NodeId> reachable(const LiveGraph& g, std::span<const NodeId> seeds) {
  std::vector<uint8_t> seen(static_cast<size_t>(g.n), 0);
  std::vector<NodeId> stack;
  for (NodeId s : seeds) {
    if (s < 0 || s >= g.n) throw ConfigError("seed node out of range: " + std::to_string(s));
    if (!seen[static_cast<size_t>(s)]) {
      seen[static_cast<size_t>(s)] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : g.adj[static_cast<size_t>(u)])
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = 1;
        stack.push_back(v);
      }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.n; ++v)
    if (seen[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<std::pair<LiveGraph, double>> enumerate_live_graphs(const SocialNetwork& net,
                                                                int max_edges) {
  int64_t e = net.num_edges();
  if (e > max_edges)
    throw CapabilityError("live-graph enumeration needs 2^" + std::to_string(e) +
                          " worlds; limit is 2^" + std::to_string(max_edges));
  struct Edge {
    NodeId u, v;
    double p;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(e));
  net.for_each_edge([&](NodeId u, NodeId v, double p) { edges.push_back({u, v, p}); });
  std::vector<std::pair<LiveGraph, double>> out;
  out.reserve(static_cast<size_t>(1) << e);
  for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
    LiveGraph g;
    g.n = net.num_nodes();
    g.adj.assign(static_cast<size_t>(g.n), {});
    double prob = 1.0;
    for (int64_t i = 0; i < e; ++i) {
      const Edge& ed = edges[static_cast<size_t>(i)];
      if (mask >> i & 1) {
        prob *= ed.p;
        g.adj[static_cast<size_t>(ed.u)].push_back(ed.v);
      } else {
        prob *= 1.0 - ed.p;
      }
    }
    out.emplace_back(std::move(g), prob);
  }
  return out;
}

}  // namespace emsim
