#include "emsim/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "emsim/errors.hpp"
#include "emsim/kernels.hpp"
#include "emsim/stats.hpp"

namespace emsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool passes(ScoreFilter f, double d) {
  return f == ScoreFilter::Positive ? d > 0.0 : d == 1.0;
}

// Layered BFS from v up to spec.max_hops.  Calls f(u, hop, wprod) for every
// reached neighbor, where wprod is the largest probability product over
// minimum-hop paths (max over predecessors, so visit order cannot matter).
// The optional size cap keeps the lowest ids of the layer where it triggers.
struct BfsScratch {
  std::vector<int32_t> stamp;
  std::vector<int32_t> hop;
  std::vector<double> wprod;
  std::vector<NodeId> frontier, touched;
  int32_t generation = 0;

  void ensure(int n) {
    if (static_cast<int>(stamp.size()) < n) {
      stamp.assign(static_cast<size_t>(n), 0);
      hop.assign(static_cast<size_t>(n), 0);
      wprod.assign(static_cast<size_t>(n), 0.0);
    }
  }
};

template <class F>
void for_each_in_neighborhood(const SocialNetwork& net, NodeId v, const NeighborhoodSpec& spec,
                              BfsScratch& scratch, OpCounter* counter, F&& f) {
  scratch.ensure(net.num_nodes());
  int32_t gen = ++scratch.generation;
  scratch.stamp[static_cast<size_t>(v)] = gen;
  scratch.hop[static_cast<size_t>(v)] = 0;
  scratch.wprod[static_cast<size_t>(v)] = 1.0;
  scratch.frontier.assign(1, v);
  int taken = 0;
  for (int h = 1; h <= spec.max_hops && !scratch.frontier.empty(); ++h) {
    scratch.touched.clear();
    for (NodeId u : scratch.frontier) {
      double wu = scratch.wprod[static_cast<size_t>(u)];
      for (const OutEdge& e : net.out_edges(u)) {
        if (counter) counter->ops++;
        size_t t = static_cast<size_t>(e.to);
        if (scratch.stamp[t] == gen) {
          if (scratch.hop[t] == h) scratch.wprod[t] = std::max(scratch.wprod[t], wu * e.p);
          continue;  // already settled at an earlier hop
        }
        scratch.stamp[t] = gen;
        scratch.hop[t] = h;
        scratch.wprod[t] = wu * e.p;
        scratch.touched.push_back(e.to);
      }
    }
    std::sort(scratch.touched.begin(), scratch.touched.end());
    bool capped = false;
    if (spec.max_size >= 0 && taken + static_cast<int>(scratch.touched.size()) > spec.max_size) {
      scratch.touched.resize(static_cast<size_t>(spec.max_size - taken));
      capped = true;
    }
    for (NodeId u : scratch.touched) {
      ++taken;
      f(u, h, scratch.wprod[static_cast<size_t>(u)]);
    }
    if (capped) return;
    scratch.frontier = scratch.touched;
  }
}

struct CatalogEntry {
  const char* name;
  bool pagerank;
  int hops;
  CombineMode mode;
  double alpha;
  PoliticalDistanceKind dist;
  ScoreFilter filter;
};

constexpr ScoreFilter kPos = ScoreFilter::Positive;
constexpr PoliticalDistanceKind kStd = PoliticalDistanceKind::Standard;

const CatalogEntry kCatalog[] = {
    {"SPoutdeg", false, 1, CombineMode::LexStructuralFirst, 0.5, kStd, kPos},
    {"SPoutdeg_rev", false, 1, CombineMode::LexPoliticalFirst, 0.5, kStd, kPos},
    {"SPoutdeg_merge0.5", false, 1, CombineMode::Merge, 0.5, kStd, kPos},
    {"SPneig2", false, 2, CombineMode::LexStructuralFirst, 0.5, kStd, kPos},
    {"SPneig2_rev", false, 2, CombineMode::LexPoliticalFirst, 0.5, kStd, kPos},
    {"SPneig2_merge0.5", false, 2, CombineMode::Merge, 0.5, kStd, kPos},
    {"SPpagerank1.0_pos", true, 1, CombineMode::Merge, 1.0, kStd, kPos},
    {"SPpagerank0.5_pos", true, 1, CombineMode::Merge, 0.5, kStd, kPos},
    {"SPpagerank1.0_hop2_pos", true, 2, CombineMode::Merge, 1.0, kStd, kPos},
    {"SPpagerank1.0_manip_eq1", true, 1, CombineMode::Merge, 1.0, PoliticalDistanceKind::ManipEq1,
     ScoreFilter::EqOne},
    {"SPpagerank1.0_manip*_pos", true, 1, CombineMode::Merge, 1.0,
     PoliticalDistanceKind::ManipStar, kPos},
};

const CatalogEntry* find_entry(const std::string& name) {
  std::string key = name == "SPpagerank1.0_manipstar_pos" ? "SPpagerank1.0_manip*_pos" : name;
  for (const CatalogEntry& e : kCatalog)
    if (key == e.name) return &e;
  return nullptr;
}

}  // namespace

std::vector<double> structural_scores(const SocialNetwork& net, const NeighborhoodSpec& spec,
                                      OpCounter* counter) {
  if (spec.max_hops < 1) throw ConfigError("neighborhood: max_hops must be >= 1");
  int n = net.num_nodes();
  std::vector<double> s(static_cast<size_t>(n), 0.0);
  BfsScratch scratch;
  for (NodeId v = 0; v < n; ++v) {
    if (counter) counter->ops++;
    double acc = 0.0;
    for_each_in_neighborhood(net, v, spec, scratch, counter,
                             [&](NodeId, int hop, double) { acc += 1.0 / hop; });
    s[static_cast<size_t>(v)] = acc;
  }
  return s;
}

double structural_score(const SocialNetwork& net, NodeId v, const NeighborhoodSpec& spec) {
  if (spec.max_hops < 1) throw ConfigError("neighborhood: max_hops must be >= 1");
  BfsScratch scratch;
  double acc = 0.0;
  for_each_in_neighborhood(net, v, spec, scratch, nullptr,
                           [&](NodeId, int hop, double) { acc += 1.0 / hop; });
  return acc;
}

std::vector<double> political_distances(const Electorate& e, double delta,
                                        PoliticalDistanceKind dist) {
  ManipulableSet ms = manipulable_set(e, delta);
  int n = e.num_voters();
  double x_target = e.candidates[static_cast<size_t>(e.target)].position;
  std::vector<double> d(static_cast<size_t>(n), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    double x = e.voters[static_cast<size_t>(v)].position;
    bool votes_target = ms.predicted_current[static_cast<size_t>(v)] == e.target;
    switch (dist) {
      case PoliticalDistanceKind::Standard:
        d[static_cast<size_t>(v)] = votes_target ? 0.0 : std::fabs(x - x_target);
        break;
      case PoliticalDistanceKind::ManipEq1:
        d[static_cast<size_t>(v)] =
            ms.weights[static_cast<size_t>(v)] ? 1.0 : (votes_target ? 0.0 : kInf);
        break;
      case PoliticalDistanceKind::ManipStar: {
        if (ms.weights[static_cast<size_t>(v)]) {
          d[static_cast<size_t>(v)] = 1.0;
        } else if (votes_target) {
          d[static_cast<size_t>(v)] = 0.0;
        } else {
          double base = std::fabs(x - x_target);
          double after = std::fabs(apply_influence(x, x_target, delta) - x_target);
          double gain = base - after;
          // A voter the message cannot pull closer is politically unreachable.
          d[static_cast<size_t>(v)] = gain <= 1e-12 ? kInf : base / gain;
        }
        break;
      }
    }
  }
  return d;
}

std::vector<double> political_scores(const SocialNetwork& net, const Electorate& e, double delta,
                                     const NeighborhoodSpec& spec, PoliticalDistanceKind dist,
                                     ScoreFilter filter, OpCounter* counter) {
  if (spec.max_hops < 1) throw ConfigError("neighborhood: max_hops must be >= 1");
  if (net.num_nodes() != e.num_voters())
    throw ConfigError("political_scores: network/electorate size mismatch");
  std::vector<double> d = political_distances(e, delta, dist);
  if (counter) counter->ops += static_cast<int64_t>(e.num_voters()) * e.num_candidates();
  int n = net.num_nodes();
  std::vector<double> s(static_cast<size_t>(n), 0.0);
  BfsScratch scratch;
  for (NodeId v = 0; v < n; ++v) {
    if (counter) counter->ops++;
    double dv = d[static_cast<size_t>(v)];
    double acc = passes(filter, dv) ? 1.0 / dv : 0.0;  // w(v, v) = 1
    for_each_in_neighborhood(net, v, spec, scratch, counter, [&](NodeId u, int, double wprod) {
      double du = d[static_cast<size_t>(u)];
      if (passes(filter, du)) acc += wprod / du;
    });
    s[static_cast<size_t>(v)] = acc;
  }
  return s;
}

double political_score(const SocialNetwork& net, const Electorate& e, double delta, NodeId v,
                       const NeighborhoodSpec& spec, PoliticalDistanceKind dist,
                       ScoreFilter filter) {
  return political_scores(net, e, delta, spec, dist, filter)[static_cast<size_t>(v)];
}

std::vector<double> standardize(std::span<const double> scores) {
  double sd = population_std(scores);
  std::vector<double> out(scores.size(), 0.0);
  if (sd == 0.0) return out;
  for (size_t i = 0; i < scores.size(); ++i) out[i] = scores[i] / sd;
  return out;
}

std::vector<double> merge_scores(std::span<const double> structural,
                                 std::span<const double> political, double alpha) {
  if (structural.size() != political.size())
    throw ConfigError("merge_scores: score vectors differ in size");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("merge_scores: alpha outside [0, 1]");
  std::vector<double> sg = standardize(structural);
  std::vector<double> sp = standardize(political);
  std::vector<double> out(sg.size());
  for (size_t i = 0; i < sg.size(); ++i) out[i] = alpha * sp[i] + (1.0 - alpha) * sg[i];
  return out;
}

std::vector<NodeId> combine_and_rank(std::span<const double> structural,
                                     std::span<const double> political, const Combiner& comb) {
  if (structural.size() != political.size())
    throw ConfigError("combine_and_rank: score vectors differ in size");
  std::vector<NodeId> order(structural.size());
  std::iota(order.begin(), order.end(), 0);
  if (comb.mode == CombineMode::Merge) {
    std::vector<double> merged = merge_scores(structural, political, comb.alpha);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      double ma = merged[static_cast<size_t>(a)], mb = merged[static_cast<size_t>(b)];
      if (ma != mb) return ma > mb;
      return a < b;
    });
    return order;
  }
  std::vector<double> primary_v = standardize(structural);
  std::vector<double> secondary_v = standardize(political);
  if (comb.mode == CombineMode::LexPoliticalFirst) std::swap(primary_v, secondary_v);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    double pa = primary_v[static_cast<size_t>(a)], pb = primary_v[static_cast<size_t>(b)];
    if (pa != pb) return pa > pb;
    double sa = secondary_v[static_cast<size_t>(a)], sb = secondary_v[static_cast<size_t>(b)];
    if (sa != sb) return sa > sb;
    return a < b;
  });
  return order;
}

std::vector<double> weighted_pagerank(const SocialNetwork& net, std::span<const double> z,
                                      const PageRankOptions& opts) {
  int n = net.num_nodes();
  if (n == 0) return {};
  if (static_cast<int>(z.size()) != n) throw ConfigError("weighted_pagerank: weight size mismatch");
  for (double w : z)
    if (!(w >= 0.0) || !std::isfinite(w))
      throw ConfigError("weighted_pagerank: weights must be finite and >= 0");
  if (!(opts.damping >= 0.0 && opts.damping <= 1.0))
    throw ConfigError("weighted_pagerank: damping outside [0, 1]");
  if (!(opts.tol > 0.0) || opts.max_iters < 1)
    throw ConfigError("weighted_pagerank: bad tolerance/iteration bound");

  // Pull-form CSR over in-edges; coeff(v->u) is v's share fraction toward u.
  std::vector<int64_t> row_ptr(static_cast<size_t>(n) + 1, 0);
  net.for_each_edge([&](NodeId, NodeId v, double) { row_ptr[static_cast<size_t>(v) + 1]++; });
  for (int i = 0; i < n; ++i) row_ptr[static_cast<size_t>(i) + 1] += row_ptr[static_cast<size_t>(i)];
  std::vector<int32_t> col(static_cast<size_t>(net.num_edges()));
  std::vector<double> coeff(static_cast<size_t>(net.num_edges()));
  std::vector<int64_t> fill(row_ptr.begin(), row_ptr.end() - 1);
  std::vector<NodeId> dangling;
  for (NodeId u = 0; u < n; ++u) {
    auto edges = net.out_edges(u);
    if (edges.empty()) {
      dangling.push_back(u);
      continue;
    }
    double total = 0.0;
    for (const OutEdge& e : edges)
      total += opts.edge_prob_weighted ? z[static_cast<size_t>(e.to)] * e.p
                                       : z[static_cast<size_t>(e.to)];
    for (const OutEdge& e : edges) {
      double w = opts.edge_prob_weighted ? z[static_cast<size_t>(e.to)] * e.p
                                         : z[static_cast<size_t>(e.to)];
      // All-zero out-weights fall back to a uniform split.
      double share = total > 0.0 ? w / total : 1.0 / static_cast<double>(edges.size());
      int64_t at = fill[static_cast<size_t>(e.to)]++;
      col[static_cast<size_t>(at)] = u;
      coeff[static_cast<size_t>(at)] = share;
    }
  }

  const auto& k = kernels::ops();
  double teleport = (1.0 - opts.damping) / static_cast<double>(n);
  std::vector<double> rank(static_cast<size_t>(n), 1.0 / static_cast<double>(n));
  std::vector<double> next(static_cast<size_t>(n), 0.0);
  for (int it = 0; it < opts.max_iters; ++it) {
    k.gather_weighted_sum(row_ptr.data(), col.data(), coeff.data(), rank.data(), n, next.data());
    double dangling_mass = 0.0;
    for (NodeId u : dangling) dangling_mass += rank[static_cast<size_t>(u)];
    double spread = opts.damping * dangling_mass / static_cast<double>(n);
    for (int i = 0; i < n; ++i)
      next[static_cast<size_t>(i)] = teleport + opts.damping * next[static_cast<size_t>(i)] + spread;
    double change = k.l1_diff(next.data(), rank.data(), n);
    rank.swap(next);
    if (change < opts.tol) break;
  }
  return rank;
}

std::vector<std::string> heuristic_catalog() {
  std::vector<std::string> names;
  for (const CatalogEntry& e : kCatalog) names.emplace_back(e.name);
  return names;
}

bool is_known_heuristic(const std::string& name) { return find_entry(name) != nullptr; }

std::vector<NodeId> select_seeds_heuristic(const std::string& name, const Scenario& s, int budget,
                                           const HeuristicOptions& opts, OpCounter* counter) {
  const CatalogEntry* entry = find_entry(name);
  if (!entry) {
    std::string known;
    for (const auto& nm : heuristic_catalog()) known += " " + nm;
    throw ConfigError("unknown heuristic '" + name + "'; known:" + known);
  }
  if (budget < 1) throw ConfigError("heuristic selection: budget must be >= 1");
  NeighborhoodSpec spec{entry->hops, -1};
  std::vector<double> sg = structural_scores(s.net, spec, counter);
  std::vector<double> sp =
      political_scores(s.net, s.electorate, s.delta, spec, entry->dist, entry->filter, counter);
  int n = s.net.num_nodes();
  int picks = std::min(budget, n);
  std::vector<NodeId> order;
  if (!entry->pagerank) {
    order = combine_and_rank(sg, sp, Combiner{entry->mode, entry->alpha});
  } else {
    std::vector<double> z = merge_scores(sg, sp, entry->alpha);
    std::vector<double> rank = weighted_pagerank(s.net, z, opts.pagerank);
    order.resize(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      double ra = rank[static_cast<size_t>(a)], rb = rank[static_cast<size_t>(b)];
      if (ra != rb) return ra > rb;
      return a < b;
    });
  }
  order.resize(static_cast<size_t>(picks));
  return order;
}

}  // namespace emsim
