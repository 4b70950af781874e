#include "emsim/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "emsim/errors.hpp"
#include "emsim/greedy.hpp"
#include "emsim/heuristics.hpp"
#include "emsim/io_text.hpp"
#include "emsim/parallel.hpp"

namespace emsim {

namespace {

// Stable stream tags: every random decision in a grid is a pure function of
// (master seed, tag, indices), so execution order can never matter.
enum : uint64_t {
  kTagPlacement = 1,
  kTagTarget = 2,
  kTagGraph = 3,
  kTagProbs = 4,
  kTagViews = 5,
  kTagRun = 6,
  kTagSwap = 7,
};

std::string fmt3(double x) {
  double r = std::round(x * 1000.0) / 1000.0;
  if (r == 0.0) r = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r);
  return buf;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(value);
  while (std::getline(ss, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

bool parse_bool(const std::string& tok) {
  if (tok == "true" || tok == "yes" || tok == "1") return true;
  if (tok == "false" || tok == "no" || tok == "0") return false;
  throw DataError("expected a boolean, got '" + tok + "'");
}

uint64_t parse_u64(const std::string& tok) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw DataError("expected an unsigned integer, got '" + tok + "'");
  return v;
}

bool algorithm_known(const std::string& name) {
  return name == "greedy-apx" || is_known_heuristic(name);
}

std::vector<NodeId> select_seeds_for(const std::string& algorithm, const Scenario& s,
                                     const GreedyOptions& greedy, Rng& rng) {
  if (algorithm == "greedy-apx") {
    ManipulableSet ms = manipulable_set(s.electorate, s.delta);
    return greedy_seed_selection(s.net, ms.weights, s.budget, greedy, rng);
  }
  return select_seeds_heuristic(algorithm, s, s.budget);
}

}  // namespace

SocialNetwork generate_graph(GraphFamily family, const GraphParams& params, int n, Rng& rng) {
  switch (family) {
    case GraphFamily::WattsStrogatzSpatial:
      return gen_watts_strogatz_spatial(n, params.ws_radius, params.ws_weak_ties,
                                        params.ws_exponent, rng)
          .net;
    case GraphFamily::PreferentialAttachment:
      return gen_preferential_attachment(n, params.pa_p_pref, rng);
  }
  throw ConfigError("unknown graph family");
}

TargetRule parse_target_rule(const std::string& text, CandidateId* fixed_id) {
  if (text == "random") return TargetRule::Random;
  if (text == "rightmost") return TargetRule::Rightmost;
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    int64_t id = parse_int(text.substr(prefix.size()));
    if (fixed_id) *fixed_id = static_cast<CandidateId>(id);
    return TargetRule::Fixed;
  }
  throw ConfigError("target rule must be random, rightmost, or fixed:<id>, got '" + text + "'");
}

void ExperimentGrid::validate() const {
  if (sizes.empty()) throw ConfigError("grid: sizes must be non-empty");
  for (int n : sizes)
    if (n < 2) throw ConfigError("grid: electorate sizes must be >= 2");
  if (n_candidates < 2) throw ConfigError("grid: need at least 2 candidates");
  if (budget_fractions.empty()) throw ConfigError("grid: budget_fractions must be non-empty");
  for (double b : budget_fractions)
    if (!(b > 0.0 && b <= 1.0)) throw ConfigError("grid: budget fractions must be in (0, 1]");
  if (deltas.empty()) throw ConfigError("grid: deltas must be non-empty");
  for (double d : deltas)
    if (!(d > 0.0 && d <= 2.0)) throw ConfigError("grid: deltas must be in (0, 2]");
  if (noises.empty()) throw ConfigError("grid: noises must be non-empty");
  for (const NoiseSpec& s : noises) s.validate();
  if (placements < 1 || graphs < 1 || probsets < 1)
    throw ConfigError("grid: placements/graphs/probsets must be >= 1");
  if (rounds < 1) throw ConfigError("grid: rounds must be >= 1");
  if (algorithms.empty()) throw ConfigError("grid: algorithms must be non-empty");
  for (const std::string& a : algorithms)
    if (!algorithm_known(a)) throw ConfigError("grid: unknown algorithm '" + a + "'");
  if (target_rule == TargetRule::Fixed &&
      (target_fixed < 0 || target_fixed >= n_candidates))
    throw ConfigError("grid: fixed target id out of range");
  if (threads < 1) throw ConfigError("grid: threads must be >= 1");
  if (!(graph_params.ws_radius > 0.0)) throw ConfigError("grid: ws_radius must be > 0");
  if (graph_params.ws_weak_ties < 0) throw ConfigError("grid: ws_weak_ties must be >= 0");
  if (!(graph_params.ws_exponent >= 0.0)) throw ConfigError("grid: ws_exponent must be >= 0");
  if (!(graph_params.pa_p_pref >= 0.0 && graph_params.pa_p_pref <= 1.0))
    throw ConfigError("grid: pa_p_pref must be in [0, 1]");
}

Electorate make_random_electorate(int n_voters, int n_candidates, const NoiseSpec& noise,
                                  TargetRule rule, CandidateId fixed_target, Rng& rng) {
  if (n_voters < 1) throw ConfigError("electorate needs at least one voter");
  if (n_candidates < 2) throw ConfigError("electorate needs at least two candidates");
  std::vector<Candidate> cands(static_cast<size_t>(n_candidates));
  for (int c = 0; c < n_candidates; ++c) cands[static_cast<size_t>(c)] = {c, rng.uniform(-1.0, 1.0)};
  std::vector<Voter> voters(static_cast<size_t>(n_voters));
  for (int v = 0; v < n_voters; ++v) voters[static_cast<size_t>(v)] = {v, rng.uniform(-1.0, 1.0)};
  CandidateId target = 0;
  switch (rule) {
    case TargetRule::Random:
      target = static_cast<CandidateId>(rng.below(static_cast<uint64_t>(n_candidates)));
      break;
    case TargetRule::Rightmost: {
      for (int c = 1; c < n_candidates; ++c)
        if (cands[static_cast<size_t>(c)].position > cands[static_cast<size_t>(target)].position)
          target = c;
      break;
    }
    case TargetRule::Fixed:
      if (fixed_target < 0 || fixed_target >= n_candidates)
        throw ConfigError("fixed target id out of range");
      target = fixed_target;
      break;
  }
  ViewMatrix views = sample_views(cands, n_voters, noise, rng);
  return make_electorate(std::move(cands), std::move(voters), std::move(views), target);
}

Electorate make_community_electorate(const Partition& partition, const NoiseSpec& noise,
                                     Rng& rng) {
  partition.validate();
  int n = partition.num_nodes();
  if (n < 1) throw ConfigError("partition covers no nodes");
  int k = partition.num_communities();
  std::vector<int64_t> sizes = partition.community_sizes();
  std::vector<int> order(static_cast<size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (sizes[static_cast<size_t>(a)] != sizes[static_cast<size_t>(b)])
      return sizes[static_cast<size_t>(a)] < sizes[static_cast<size_t>(b)];
    return a < b;
  });
  std::vector<char> central(static_cast<size_t>(k), 0);
  for (int i = 0; i < std::min(7, k); ++i) central[static_cast<size_t>(order[static_cast<size_t>(i)])] = 1;

  std::vector<Candidate> cands = {{0, -1.0}, {1, -0.5}, {2, 0.0}, {3, 0.5}, {4, 1.0}};
  std::vector<Voter> voters(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    double pos;
    if (central[static_cast<size_t>(partition.community[static_cast<size_t>(v)])]) {
      pos = rng.uniform(-0.25, 0.25);
    } else {
      double u = rng.uniform01() * 1.5;  // length of [-1,-0.25) ∪ [0.25,1)
      pos = u < 0.75 ? -1.0 + u : 0.25 + (u - 0.75);
    }
    voters[static_cast<size_t>(v)] = {v, pos};
  }
  ViewMatrix views = sample_views(cands, n, noise, rng);
  return make_electorate(std::move(cands), std::move(voters), std::move(views), 2);
}

ResultTable run_grid(const ExperimentGrid& grid) {
  grid.validate();
  const int NS = static_cast<int>(grid.sizes.size());
  const int P = grid.placements, G = grid.graphs, Q = grid.probsets;
  const int NI = static_cast<int>(grid.noises.size());
  const int BI = static_cast<int>(grid.budget_fractions.size());
  const int DI = static_cast<int>(grid.deltas.size());
  const int AI = static_cast<int>(grid.algorithms.size());
  const int R = grid.rounds;
  const int m = grid.n_candidates;

  struct SizeData {
    std::vector<std::vector<Candidate>> cands;  // [placement]
    std::vector<std::vector<Voter>> voters;     // [placement]
    std::vector<CandidateId> targets;           // [placement]
    std::vector<SocialNetwork> nets;            // [graph*Q + probset]
  };
  std::vector<SizeData> data(static_cast<size_t>(NS));
  for (int si = 0; si < NS; ++si) {
    int n = grid.sizes[static_cast<size_t>(si)];
    SizeData& sd = data[static_cast<size_t>(si)];
    sd.cands.resize(static_cast<size_t>(P));
    sd.voters.resize(static_cast<size_t>(P));
    sd.targets.resize(static_cast<size_t>(P));
    for (int p = 0; p < P; ++p) {
      Rng pr = Rng::derive(grid.master_seed,
                           {kTagPlacement, static_cast<uint64_t>(si), static_cast<uint64_t>(p)});
      std::vector<Candidate> cands(static_cast<size_t>(m));
      for (int c = 0; c < m; ++c) cands[static_cast<size_t>(c)] = {c, pr.uniform(-1.0, 1.0)};
      std::vector<Voter> voters(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) voters[static_cast<size_t>(v)] = {v, pr.uniform(-1.0, 1.0)};
      CandidateId target = 0;
      switch (grid.target_rule) {
        case TargetRule::Random: {
          Rng tr = Rng::derive(grid.master_seed,
                               {kTagTarget, static_cast<uint64_t>(si), static_cast<uint64_t>(p)});
          target = static_cast<CandidateId>(tr.below(static_cast<uint64_t>(m)));
          break;
        }
        case TargetRule::Rightmost:
          for (int c = 1; c < m; ++c)
            if (cands[static_cast<size_t>(c)].position >
                cands[static_cast<size_t>(target)].position)
              target = c;
          break;
        case TargetRule::Fixed:
          target = grid.target_fixed;
          break;
      }
      sd.cands[static_cast<size_t>(p)] = std::move(cands);
      sd.voters[static_cast<size_t>(p)] = std::move(voters);
      sd.targets[static_cast<size_t>(p)] = target;
    }
    sd.nets.reserve(static_cast<size_t>(G) * static_cast<size_t>(Q));
    for (int g = 0; g < G; ++g) {
      Rng gr = Rng::derive(grid.master_seed,
                           {kTagGraph, static_cast<uint64_t>(si), static_cast<uint64_t>(g)});
      SocialNetwork base = generate_graph(grid.family, grid.graph_params, n, gr);
      for (int q = 0; q < Q; ++q) {
        Rng qr = Rng::derive(grid.master_seed, {kTagProbs, static_cast<uint64_t>(si),
                                                static_cast<uint64_t>(g), static_cast<uint64_t>(q)});
        sd.nets.push_back(assign_uniform_probabilities(base, qr));
      }
    }
  }

  struct RunOut {
    std::vector<double> value;  // one per configured round, padded after early stop
    std::vector<double> secs;   // only rounds actually run
  };
  const int64_t total = static_cast<int64_t>(NS) * P * G * Q * NI * BI * DI * AI;
  std::vector<RunOut> outs(static_cast<size_t>(total));
  auto flat = [&](int si, int p, int g, int q, int ni, int bi, int di, int ai) -> int64_t {
    int64_t i = si;
    i = i * P + p;
    i = i * G + g;
    i = i * Q + q;
    i = i * NI + ni;
    i = i * BI + bi;
    i = i * DI + di;
    i = i * AI + ai;
    return i;
  };

  parallel_for(total, grid.threads, [&](int64_t idx) {
    int64_t rest = idx;
    int ai = static_cast<int>(rest % AI); rest /= AI;
    int di = static_cast<int>(rest % DI); rest /= DI;
    int bi = static_cast<int>(rest % BI); rest /= BI;
    int ni = static_cast<int>(rest % NI); rest /= NI;
    int q = static_cast<int>(rest % Q); rest /= Q;
    int g = static_cast<int>(rest % G); rest /= G;
    int p = static_cast<int>(rest % P); rest /= P;
    int si = static_cast<int>(rest);
    const SizeData& sd = data[static_cast<size_t>(si)];
    int n = grid.sizes[static_cast<size_t>(si)];

    Rng vr = Rng::derive(grid.master_seed,
                         {kTagViews, static_cast<uint64_t>(si), static_cast<uint64_t>(p),
                          static_cast<uint64_t>(g), static_cast<uint64_t>(q),
                          static_cast<uint64_t>(ni)});
    ViewMatrix views = sample_views(sd.cands[static_cast<size_t>(p)], n,
                                    grid.noises[static_cast<size_t>(ni)], vr);
    Scenario s;
    s.electorate = make_electorate(sd.cands[static_cast<size_t>(p)],
                                   sd.voters[static_cast<size_t>(p)], std::move(views),
                                   sd.targets[static_cast<size_t>(p)]);
    s.net = sd.nets[static_cast<size_t>(g) * static_cast<size_t>(Q) + static_cast<size_t>(q)];
    s.delta = grid.deltas[static_cast<size_t>(di)];
    s.budget = derived_budget(grid.budget_fractions[static_cast<size_t>(bi)], n);
    s.rounds = R;

    CampaignConfig cfg;
    cfg.algorithm = grid.algorithms[static_cast<size_t>(ai)];
    cfg.budget_fraction = grid.budget_fractions[static_cast<size_t>(bi)];
    cfg.delta = grid.deltas[static_cast<size_t>(di)];
    cfg.rounds = R;
    cfg.stop_at_unanimity = grid.stop_at_unanimity;
    cfg.greedy = grid.greedy;

    Rng rr = Rng::derive(grid.master_seed,
                         {kTagRun, static_cast<uint64_t>(si), static_cast<uint64_t>(p),
                          static_cast<uint64_t>(g), static_cast<uint64_t>(q),
                          static_cast<uint64_t>(ni), static_cast<uint64_t>(bi),
                          static_cast<uint64_t>(di), static_cast<uint64_t>(ai)});
    std::vector<RoundReport> reports = run_campaign(s, cfg, rr);

    RunOut& out = outs[static_cast<size_t>(idx)];
    out.value.resize(static_cast<size_t>(R));
    out.secs.reserve(reports.size());
    for (int r = 0; r < R; ++r)
      out.value[static_cast<size_t>(r)] = r < static_cast<int>(reports.size())
                                              ? reports[static_cast<size_t>(r)].normalized_dmov
                                              : reports.back().normalized_dmov;
    for (const RoundReport& rep : reports) out.secs.push_back(rep.seed_selection_seconds);
  });

  ResultTable table;
  table.rows.reserve(static_cast<size_t>(AI) * NS * BI * DI * NI * R);
  std::vector<double> vals, secs;
  for (int ai = 0; ai < AI; ++ai)
    for (int si = 0; si < NS; ++si)
      for (int bi = 0; bi < BI; ++bi)
        for (int di = 0; di < DI; ++di)
          for (int ni = 0; ni < NI; ++ni)
            for (int r = 1; r <= R; ++r) {
              vals.clear();
              secs.clear();
              for (int p = 0; p < P; ++p)
                for (int g = 0; g < G; ++g)
                  for (int q = 0; q < Q; ++q) {
                    const RunOut& out = outs[static_cast<size_t>(flat(si, p, g, q, ni, bi, di, ai))];
                    vals.push_back(out.value[static_cast<size_t>(r - 1)]);
                    if (r - 1 < static_cast<int>(out.secs.size()))
                      secs.push_back(out.secs[static_cast<size_t>(r - 1)]);
                  }
              ResultRow row;
              row.algorithm = grid.algorithms[static_cast<size_t>(ai)];
              row.voters = grid.sizes[static_cast<size_t>(si)];
              row.budget_fraction = grid.budget_fractions[static_cast<size_t>(bi)];
              row.delta = grid.deltas[static_cast<size_t>(di)];
              row.noise = grid.noises[static_cast<size_t>(ni)].to_string();
              row.round = r;
              row.value = mean_std(vals);
              row.seconds = secs.empty() ? MeanStd{} : mean_std(secs);
              row.count = static_cast<int>(vals.size());
              table.rows.push_back(std::move(row));
            }
  return table;
}

static const char kCsvHeader[] =
    "algorithm,voters,budget_fraction,delta,noise,round,mean,std,time_mean_s,time_std_s";

void emit_csv(const ResultTable& table, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : table.rows) {
    out << r.algorithm << ',' << r.voters << ',' << fmt_double(r.budget_fraction) << ','
        << fmt_double(r.delta) << ',' << r.noise << ',' << r.round << ',' << fmt3(r.value.mean)
        << ',' << fmt3(r.value.std) << ',' << fmt_double(r.seconds.mean) << ','
        << fmt_double(r.seconds.std) << '\n';
  }
}

void emit_csv(const ResultTable& table, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  emit_csv(table, f);
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

ResultTable parse_result_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line)) throw DataError(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw DataError(path + ": unexpected header '" + line + "'");
  ResultTable table;
  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) fields.push_back(tok);
    if (fields.size() != 10)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 10 fields, got " +
                      std::to_string(fields.size()));
    try {
      ResultRow r;
      r.algorithm = fields[0];
      r.voters = static_cast<int>(parse_int(fields[1]));
      r.budget_fraction = parse_double(fields[2]);
      r.delta = parse_double(fields[3]);
      r.noise = fields[4];
      r.round = static_cast<int>(parse_int(fields[5]));
      r.value = {parse_double(fields[6]), parse_double(fields[7])};
      r.seconds = {parse_double(fields[8]), parse_double(fields[9])};
      table.rows.push_back(std::move(r));
    } catch (const DataError& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return table;
}

void emit_plot_data(const ResultTable& table, std::ostream& out) {
  out << "algorithm,voters,budget_fraction,delta,noise,round,metric,value\n";
  for (const ResultRow& r : table.rows) {
    std::string prefix = r.algorithm + ',' + std::to_string(r.voters) + ',' +
                         fmt_double(r.budget_fraction) + ',' + fmt_double(r.delta) + ',' +
                         r.noise + ',' + std::to_string(r.round) + ',';
    out << prefix << "mean," << fmt3(r.value.mean) << '\n';
    out << prefix << "std," << fmt3(r.value.std) << '\n';
    out << prefix << "time_mean_s," << fmt_double(r.seconds.mean) << '\n';
    out << prefix << "time_std_s," << fmt_double(r.seconds.std) << '\n';
  }
}

void emit_plot_data(const ResultTable& table, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  emit_plot_data(table, f);
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::vector<std::pair<std::string, MeanStd>> timing_comparison(
    std::span<const Scenario> scenarios, const std::vector<std::string>& algorithms,
    const GreedyOptions& greedy, Rng& rng) {
  if (scenarios.empty()) throw ConfigError("timing: need at least one scenario");
  if (algorithms.size() < 2) throw ConfigError("timing: need at least two algorithms to compare");
  for (const std::string& a : algorithms)
    if (!algorithm_known(a)) throw ConfigError("timing: unknown algorithm '" + a + "'");
  uint64_t master = rng.next_u64();
  std::vector<std::vector<double>> times(algorithms.size());
  for (size_t si = 0; si < scenarios.size(); ++si) {
    for (size_t ai = 0; ai < algorithms.size(); ++ai) {
      Rng r = Rng::derive(master, {static_cast<uint64_t>(si), static_cast<uint64_t>(ai)});
      auto t0 = std::chrono::steady_clock::now();
      std::vector<NodeId> seeds = select_seeds_for(algorithms[ai], scenarios[si], greedy, r);
      auto t1 = std::chrono::steady_clock::now();
      if (static_cast<int>(seeds.size()) > scenarios[si].budget)
        throw std::logic_error("timing: selection exceeded the budget");
      times[ai].push_back(std::chrono::duration<double>(t1 - t0).count());
    }
  }
  std::vector<std::pair<std::string, MeanStd>> out;
  out.reserve(algorithms.size());
  for (size_t ai = 0; ai < algorithms.size(); ++ai)
    out.emplace_back(algorithms[ai], mean_std(times[ai]));
  return out;
}

std::vector<SwapDistRow> swap_distance_study(int n_voters, int n_candidates,
                                             std::span<const NoiseSpec> noises, int reps,
                                             uint64_t seed) {
  if (n_voters < 1) throw ConfigError("swap study: need at least one voter");
  if (n_candidates < 2) throw ConfigError("swap study: need at least two candidates");
  if (n_candidates > 10)
    throw CapabilityError("swap study: single-peaked enumeration supports at most 10 candidates");
  if (reps < 1) throw ConfigError("swap study: reps must be >= 1");
  std::vector<SwapDistRow> rows;
  rows.reserve(noises.size());
  std::vector<double> dists;
  for (size_t ni = 0; ni < noises.size(); ++ni) {
    noises[ni].validate();
    dists.clear();
    dists.reserve(static_cast<size_t>(n_voters) * static_cast<size_t>(reps));
    int64_t zero_count = 0;
    for (int rep = 0; rep < reps; ++rep) {
      Rng r = Rng::derive(seed, {kTagSwap, static_cast<uint64_t>(ni), static_cast<uint64_t>(rep)});
      std::vector<Candidate> cands(static_cast<size_t>(n_candidates));
      for (int c = 0; c < n_candidates; ++c)
        cands[static_cast<size_t>(c)] = {c, r.uniform(-1.0, 1.0)};
      std::vector<Voter> voters(static_cast<size_t>(n_voters));
      for (int v = 0; v < n_voters; ++v)
        voters[static_cast<size_t>(v)] = {v, r.uniform(-1.0, 1.0)};
      std::vector<CandidateId> axis = position_axis(cands);
      ViewMatrix views = sample_views(cands, n_voters, noises[ni], r);
      for (int v = 0; v < n_voters; ++v) {
        std::vector<double> row = views.row(v);
        std::vector<CandidateId> order = ranking(voters[static_cast<size_t>(v)].position, row);
        int d = swap_distance_to_single_peaked(order, axis);
        dists.push_back(static_cast<double>(d));
        if (d == 0) ++zero_count;
      }
    }
    SwapDistRow out;
    out.noise = noises[ni];
    MeanStd ms = mean_std(dists);
    out.mean_distance = ms.mean;
    out.std_distance = ms.std;
    out.samples = static_cast<int64_t>(dists.size());
    out.frac_single_peaked = static_cast<double>(zero_count) / static_cast<double>(dists.size());
    rows.push_back(std::move(out));
  }
  return rows;
}

ExperimentGrid parse_grid_config_text(const std::string& text) {
  ExperimentGrid grid;
  std::stringstream ss(text);
  std::string raw;
  std::string section = "grid";
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    return ConfigError("config line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(ss, raw)) {
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw fail("unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "grid" && section != "graph")
        throw fail("unknown section '" + section + "' (use [grid] or [graph])");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw fail("empty key or value");
    try {
      if (section == "grid") {
        if (key == "sizes") {
          grid.sizes.clear();
          for (const auto& tok : split_list(value))
            grid.sizes.push_back(static_cast<int>(parse_int(tok)));
        } else if (key == "candidates") {
          grid.n_candidates = static_cast<int>(parse_int(value));
        } else if (key == "budget_fractions") {
          grid.budget_fractions.clear();
          for (const auto& tok : split_list(value)) grid.budget_fractions.push_back(parse_double(tok));
        } else if (key == "deltas") {
          grid.deltas.clear();
          for (const auto& tok : split_list(value)) grid.deltas.push_back(parse_double(tok));
        } else if (key == "noises") {
          grid.noises.clear();
          for (const auto& tok : split_list(value)) grid.noises.push_back(NoiseSpec::parse(tok));
        } else if (key == "rounds") {
          grid.rounds = static_cast<int>(parse_int(value));
        } else if (key == "placements") {
          grid.placements = static_cast<int>(parse_int(value));
        } else if (key == "graphs") {
          grid.graphs = static_cast<int>(parse_int(value));
        } else if (key == "probsets") {
          grid.probsets = static_cast<int>(parse_int(value));
        } else if (key == "algorithms") {
          grid.algorithms = split_list(value);
        } else if (key == "target") {
          grid.target_rule = parse_target_rule(value, &grid.target_fixed);
        } else if (key == "seed") {
          grid.master_seed = parse_u64(value);
        } else if (key == "threads") {
          grid.threads = static_cast<int>(parse_int(value));
        } else if (key == "stop_at_unanimity") {
          grid.stop_at_unanimity = parse_bool(value);
        } else if (key == "greedy_mc_runs") {
          grid.greedy.mc_runs = parse_int(value);
        } else if (key == "greedy_lazy") {
          grid.greedy.lazy = parse_bool(value);
        } else if (key == "greedy_exact") {
          grid.greedy.exact = parse_bool(value);
        } else {
          throw fail("unknown [grid] key '" + key + "'");
        }
      } else {  // graph
        if (key == "family") {
          if (value == "ws") grid.family = GraphFamily::WattsStrogatzSpatial;
          else if (value == "pa") grid.family = GraphFamily::PreferentialAttachment;
          else throw fail("family must be ws or pa");
        } else if (key == "ws_radius") {
          grid.graph_params.ws_radius = parse_double(value);
        } else if (key == "ws_weak_ties") {
          grid.graph_params.ws_weak_ties = static_cast<int>(parse_int(value));
        } else if (key == "ws_exponent") {
          grid.graph_params.ws_exponent = parse_double(value);
        } else if (key == "pa_p_pref") {
          grid.graph_params.pa_p_pref = parse_double(value);
        } else {
          throw fail("unknown [graph] key '" + key + "'");
        }
      }
    } catch (const DataError& e) {
      throw fail(e.what());
    }
  }
  grid.validate();
  return grid;
}

ExperimentGrid parse_grid_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_grid_config_text(buf.str());
}

}  // namespace emsim
