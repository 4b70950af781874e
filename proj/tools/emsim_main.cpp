// emsim: election-manipulation simulation toolkit.
//
// Subcommands: generate (graphs/electorates), run (experiment grid -> CSV),
// campaign (one scenario, verbose per-round reports), bench (seed-selection
// timing), swapdist (preference drift from single-peakedness under noise).
// Exit codes: 0 ok, 2 configuration error, 3 capability exceeded, 4 I/O error.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emsim/campaign.hpp"
#include "emsim/errors.hpp"
#include "emsim/harness.hpp"
#include "emsim/io_text.hpp"

namespace {

using namespace emsim;

GraphFamily family_of(const std::string& name) {
  if (name == "ws") return GraphFamily::WattsStrogatzSpatial;
  if (name == "pa") return GraphFamily::PreferentialAttachment;
  throw ConfigError("graph family must be ws or pa, got '" + name + "'");
}

void add_graph_flags(CLI::App* cmd, std::string* family, GraphParams* params) {
  cmd->add_option("--family", *family, "graph family: ws | pa")->capture_default_str();
  cmd->add_option("--ws-radius", params->ws_radius, "strong-tie distance threshold")
      ->capture_default_str();
  cmd->add_option("--ws-weak-ties", params->ws_weak_ties, "directed weak ties per node")
      ->capture_default_str();
  cmd->add_option("--ws-exponent", params->ws_exponent, "weak-tie weight exponent")
      ->capture_default_str();
  cmd->add_option("--pa-p-pref", params->pa_p_pref, "degree-proportional attachment probability")
      ->capture_default_str();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

void cmd_generate_graph(const std::string& family, const GraphParams& params, int nodes,
                        const std::string& probs, const std::string& partition_path,
                        double intra_lo, double intra_hi, double inter_lo, double inter_hi,
                        uint64_t seed, const std::string& out) {
  Rng grng = Rng::derive(seed, {1});
  SocialNetwork net = generate_graph(family_of(family), params, nodes, grng);
  Rng prng = Rng::derive(seed, {2});
  if (probs == "uniform") {
    net = assign_uniform_probabilities(std::move(net), prng);
  } else if (probs == "community") {
    if (partition_path.empty()) throw ConfigError("--probs community needs --partition");
    Partition part = load_partition(partition_path);
    net = assign_community_probabilities(std::move(net), part, {intra_lo, intra_hi},
                                         {inter_lo, inter_hi}, prng);
  } else if (probs != "none") {
    throw ConfigError("--probs must be uniform, community, or none");
  }
  save_edge_list(net, out);
  std::printf("wrote %d nodes, %" PRId64 " directed edges to %s\n", net.num_nodes(),
              net.num_edges(), out.c_str());
}

void cmd_generate_electorate(int voters, int candidates, const std::string& noise_text,
                             const std::string& target_text, uint64_t seed,
                             const std::string& out) {
  NoiseSpec noise = NoiseSpec::parse(noise_text);
  CandidateId fixed = 0;
  TargetRule rule = parse_target_rule(target_text, &fixed);
  Rng rng = Rng::derive(seed, {3});
  Electorate e = make_random_electorate(voters, candidates, noise, rule, fixed, rng);
  save_electorate(e, out);
  std::printf("wrote %d voters, %d candidates (target %d) to %s\n", e.num_voters(),
              e.num_candidates(), e.target, out.c_str());
}

void cmd_generate_community_electorate(const std::string& partition_path,
                                       const std::string& noise_text, uint64_t seed,
                                       const std::string& out) {
  Partition part = load_partition(partition_path);
  NoiseSpec noise = NoiseSpec::parse(noise_text);
  Rng rng = Rng::derive(seed, {4});
  Electorate e = make_community_electorate(part, noise, rng);
  save_electorate(e, out);
  std::printf("wrote %d voters, %d candidates (target %d) to %s\n", e.num_voters(),
              e.num_candidates(), e.target, out.c_str());
}

void cmd_run(const std::string& config_path, uint64_t seed, int threads, const std::string& out,
             const std::string& plot_out) {
  ExperimentGrid grid = parse_grid_config(config_path);
  grid.master_seed = seed;
  if (threads > 0) grid.threads = threads;
  grid.validate();
  ResultTable table = run_grid(grid);
  emit_csv(table, out);
  if (!plot_out.empty()) emit_plot_data(table, plot_out);
  std::printf("wrote %zu result rows to %s\n", table.rows.size(), out.c_str());
}

void cmd_campaign(const std::string& electorate_path, const std::string& graph_path,
                  const std::string& algorithm, double budget_fraction, double delta, int rounds,
                  bool keep_going, int greedy_mc_runs, bool greedy_lazy, uint64_t seed) {
  Scenario s;
  s.electorate = load_electorate(electorate_path);
  s.net = load_edge_list(graph_path);
  s.delta = delta;
  s.budget = derived_budget(budget_fraction, s.electorate.num_voters());
  s.rounds = rounds;
  s.validate();

  CampaignConfig cfg;
  cfg.algorithm = algorithm;
  cfg.budget_fraction = budget_fraction;
  cfg.delta = delta;
  cfg.rounds = rounds;
  cfg.stop_at_unanimity = !keep_going;
  cfg.greedy.mc_runs = greedy_mc_runs;
  cfg.greedy.lazy = greedy_lazy;

  VoteTally initial = tally_votes(s.electorate.votes, s.electorate.num_candidates());
  std::printf("voters=%d candidates=%d target=%d budget=%d delta=%s algorithm=%s\n",
              s.electorate.num_voters(), s.electorate.num_candidates(), s.electorate.target,
              s.budget, fmt_double(delta).c_str(), algorithm.c_str());
  std::printf("initial mov=%" PRId64 " dmov_bound=%" PRId64 "\n",
              margin_of_victory(initial, s.electorate.target),
              dmov_bound(initial, s.electorate.target));

  Rng rng = Rng::derive(seed, {5});
  std::vector<RoundReport> reports = run_campaign(s, cfg, rng);
  std::printf("%-6s %-20s %9s %6s %6s %8s %10s %s\n", "round", "seeds", "activated", "mov",
              "dmov", "norm", "sel_s", "tally");
  for (const RoundReport& r : reports) {
    std::string seeds;
    for (size_t i = 0; i < r.seeds.size(); ++i)
      seeds += (i ? " " : "") + std::to_string(r.seeds[i]);
    std::string tally;
    for (size_t c = 0; c < r.tally_after.votes.size(); ++c)
      tally += (c ? " " : "") + std::to_string(r.tally_after.votes[c]);
    std::printf("%-6d %-20s %9d %6" PRId64 " %6" PRId64 " %8.3f %10s [%s]\n", r.round,
                seeds.c_str(), r.activated_count, r.mov_after, r.cumulative_dmov,
                r.normalized_dmov, fmt_seconds(r.seed_selection_seconds).c_str(), tally.c_str());
  }
}

void cmd_bench(const std::vector<std::string>& algorithms, int voters, int candidates,
               int n_scenarios, double budget_fraction, double delta,
               const std::string& noise_text, const std::string& family,
               const GraphParams& params, int greedy_mc_runs, bool greedy_lazy, uint64_t seed) {
  if (n_scenarios < 1) throw ConfigError("bench: --scenarios must be >= 1");
  NoiseSpec noise = NoiseSpec::parse(noise_text);
  GraphFamily fam = family_of(family);
  std::vector<Scenario> scenarios(static_cast<size_t>(n_scenarios));
  for (int i = 0; i < n_scenarios; ++i) {
    uint64_t si = static_cast<uint64_t>(i);
    Rng er = Rng::derive(seed, {6, si});
    Rng gr = Rng::derive(seed, {7, si});
    Rng pr = Rng::derive(seed, {8, si});
    Scenario& s = scenarios[static_cast<size_t>(i)];
    s.electorate =
        make_random_electorate(voters, candidates, noise, TargetRule::Random, 0, er);
    s.net = assign_uniform_probabilities(generate_graph(fam, params, voters, gr), pr);
    s.delta = delta;
    s.budget = derived_budget(budget_fraction, voters);
    s.rounds = 1;
    s.validate();
  }
  GreedyOptions gopts;
  gopts.mc_runs = greedy_mc_runs;
  gopts.lazy = greedy_lazy;
  Rng trng = Rng::derive(seed, {9});
  auto rows = timing_comparison(scenarios, algorithms, gopts, trng);
  std::printf("%-32s %14s %14s %10s\n", "algorithm", "mean_s", "std_s", "vs_first");
  double first_mean = rows.front().second.mean;
  for (const auto& [name, ms] : rows) {
    double ratio = ms.mean > 0.0 ? first_mean / ms.mean : 0.0;
    std::printf("%-32s %14.6g %14.6g %9.3gx\n", name.c_str(), ms.mean, ms.std, ratio);
  }
}

void cmd_swapdist(int voters, int candidates, const std::vector<std::string>& noise_texts,
                  int reps, uint64_t seed, const std::string& out) {
  std::vector<NoiseSpec> noises;
  noises.reserve(noise_texts.size());
  for (const std::string& t : noise_texts) noises.push_back(NoiseSpec::parse(t));
  auto rows = swap_distance_study(voters, candidates, noises, reps, seed);
  std::printf("%-24s %12s %12s %18s %10s\n", "noise", "mean_swaps", "std_swaps",
              "frac_single_peaked", "samples");
  for (const SwapDistRow& r : rows)
    std::printf("%-24s %12.4f %12.4f %18.4f %10" PRId64 "\n", r.noise.to_string().c_str(),
                r.mean_distance, r.std_distance, r.frac_single_peaked, r.samples);
  if (!out.empty()) {
    std::FILE* f = std::fopen(out.c_str(), "w");
    if (!f) throw IoError("cannot open '" + out + "' for writing");
    std::fprintf(f, "noise,mean_swaps,std_swaps,frac_single_peaked,samples\n");
    for (const SwapDistRow& r : rows)
      std::fprintf(f, "%s,%s,%s,%s,%" PRId64 "\n", r.noise.to_string().c_str(),
                   fmt_double(r.mean_distance).c_str(), fmt_double(r.std_distance).c_str(),
                   fmt_double(r.frac_single_peaked).c_str(), r.samples);
    std::fclose(f);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"election manipulation through information diffusion: simulation toolkit"};
  app.require_subcommand(1);

  // generate
  CLI::App* gen = app.add_subcommand("generate", "write graphs and electorates to files");
  gen->require_subcommand(1);

  CLI::App* gg = gen->add_subcommand("graph", "generate a social network edge list");
  std::string gg_family = "ws";
  GraphParams gg_params;
  int gg_nodes = 20;
  std::string gg_probs = "uniform";
  std::string gg_partition;
  double gg_intra_lo = 0.6, gg_intra_hi = 1.0, gg_inter_lo = 0.0, gg_inter_hi = 0.4;
  uint64_t gg_seed = 0;
  std::string gg_out;
  add_graph_flags(gg, &gg_family, &gg_params);
  gg->add_option("--nodes", gg_nodes, "number of nodes")->capture_default_str();
  gg->add_option("--probs", gg_probs, "edge probabilities: uniform | community | none")
      ->capture_default_str();
  gg->add_option("--partition", gg_partition, "partition file for --probs community");
  gg->add_option("--intra-lo", gg_intra_lo)->capture_default_str();
  gg->add_option("--intra-hi", gg_intra_hi)->capture_default_str();
  gg->add_option("--inter-lo", gg_inter_lo)->capture_default_str();
  gg->add_option("--inter-hi", gg_inter_hi)->capture_default_str();
  gg->add_option("--seed", gg_seed, "rng seed")->capture_default_str();
  gg->add_option("--out", gg_out, "output edge-list path")->required();
  gg->callback([&] {
    cmd_generate_graph(gg_family, gg_params, gg_nodes, gg_probs, gg_partition, gg_intra_lo,
                       gg_intra_hi, gg_inter_lo, gg_inter_hi, gg_seed, gg_out);
  });

  CLI::App* ge = gen->add_subcommand("electorate", "generate a random electorate");
  int ge_voters = 20, ge_candidates = 5;
  std::string ge_noise = "zero", ge_target = "random", ge_out;
  uint64_t ge_seed = 0;
  ge->add_option("--voters", ge_voters)->capture_default_str();
  ge->add_option("--candidates", ge_candidates)->capture_default_str();
  ge->add_option("--noise", ge_noise, "zero | uniform:lo:hi | gauss:mean:var | mix:w:m:v;...")
      ->capture_default_str();
  ge->add_option("--target", ge_target, "random | rightmost | fixed:<id>")->capture_default_str();
  ge->add_option("--seed", ge_seed)->capture_default_str();
  ge->add_option("--out", ge_out, "output electorate path")->required();
  ge->callback(
      [&] { cmd_generate_electorate(ge_voters, ge_candidates, ge_noise, ge_target, ge_seed, ge_out); });

  CLI::App* gc = gen->add_subcommand("community-electorate",
                                     "electorate placed by community partition");
  std::string gc_partition, gc_noise = "zero", gc_out;
  uint64_t gc_seed = 0;
  gc->add_option("--partition", gc_partition, "partition file")->required();
  gc->add_option("--noise", gc_noise)->capture_default_str();
  gc->add_option("--seed", gc_seed)->capture_default_str();
  gc->add_option("--out", gc_out, "output electorate path")->required();
  gc->callback([&] { cmd_generate_community_electorate(gc_partition, gc_noise, gc_seed, gc_out); });

  // run
  CLI::App* run = app.add_subcommand("run", "run an experiment grid config, emit CSV");
  std::string run_config, run_out = "results.csv", run_plot;
  uint64_t run_seed = 0;
  int run_threads = 0;
  run->add_option("--config", run_config, "grid config file")->required();
  run->add_option("--seed", run_seed, "master seed (required)")->required();
  run->add_option("--threads", run_threads, "override config threads");
  run->add_option("--out", run_out, "output CSV path")->capture_default_str();
  run->add_option("--plot-data", run_plot, "also emit long-format plot data");
  run->callback([&] { cmd_run(run_config, run_seed, run_threads, run_out, run_plot); });

  // campaign
  CLI::App* camp = app.add_subcommand("campaign", "run one campaign and print round reports");
  std::string camp_electorate, camp_graph, camp_algorithm = "SPpagerank1.0_pos";
  double camp_bfrac = 0.10, camp_delta = 0.3;
  int camp_rounds = 10, camp_mc = 300;
  bool camp_keep_going = false, camp_lazy = false;
  uint64_t camp_seed = 0;
  camp->add_option("--electorate", camp_electorate, "electorate file")->required();
  camp->add_option("--graph", camp_graph, "edge-list file")->required();
  camp->add_option("--algorithm", camp_algorithm, "greedy-apx or a heuristic name")
      ->capture_default_str();
  camp->add_option("--budget-fraction", camp_bfrac)->capture_default_str();
  camp->add_option("--delta", camp_delta)->capture_default_str();
  camp->add_option("--rounds", camp_rounds)->capture_default_str();
  camp->add_flag("--no-stop-at-unanimity", camp_keep_going, "run all rounds regardless");
  camp->add_option("--greedy-mc-runs", camp_mc)->capture_default_str();
  camp->add_flag("--greedy-lazy", camp_lazy, "lazy marginal re-evaluation for greedy-apx");
  camp->add_option("--seed", camp_seed)->capture_default_str();
  camp->callback([&] {
    cmd_campaign(camp_electorate, camp_graph, camp_algorithm, camp_bfrac, camp_delta, camp_rounds,
                 camp_keep_going, camp_mc, camp_lazy, camp_seed);
  });

  // bench
  CLI::App* bench = app.add_subcommand("bench", "seed-selection timing comparison");
  std::vector<std::string> bench_algorithms = {"SPpagerank1.0_pos", "greedy-apx"};
  int bench_voters = 20, bench_candidates = 5, bench_scenarios = 10, bench_mc = 300;
  double bench_bfrac = 0.10, bench_delta = 0.3;
  std::string bench_noise = "zero", bench_family = "ws";
  GraphParams bench_params;
  bool bench_lazy = false;
  uint64_t bench_seed = 0;
  bench->add_option("--algorithms", bench_algorithms, "comma-separated names")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--voters", bench_voters)->capture_default_str();
  bench->add_option("--candidates", bench_candidates)->capture_default_str();
  bench->add_option("--scenarios", bench_scenarios)->capture_default_str();
  bench->add_option("--budget-fraction", bench_bfrac)->capture_default_str();
  bench->add_option("--delta", bench_delta)->capture_default_str();
  bench->add_option("--noise", bench_noise)->capture_default_str();
  add_graph_flags(bench, &bench_family, &bench_params);
  bench->add_option("--greedy-mc-runs", bench_mc)->capture_default_str();
  bench->add_flag("--greedy-lazy", bench_lazy);
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->callback([&] {
    cmd_bench(bench_algorithms, bench_voters, bench_candidates, bench_scenarios, bench_bfrac,
              bench_delta, bench_noise, bench_family, bench_params, bench_mc, bench_lazy,
              bench_seed);
  });

  // swapdist
  CLI::App* sw = app.add_subcommand("swapdist", "swap distance to single-peaked vs view noise");
  int sw_voters = 100, sw_candidates = 5, sw_reps = 30;
  std::vector<std::string> sw_noises = {"zero", "gauss:0:0.08", "gauss:0:1"};
  std::string sw_out;
  uint64_t sw_seed = 0;
  sw->add_option("--voters", sw_voters)->capture_default_str();
  sw->add_option("--candidates", sw_candidates)->capture_default_str();
  sw->add_option("--reps", sw_reps, "electorates per noise level")->capture_default_str();
  sw->add_option("--noises", sw_noises, "comma-separated noise specs")
      ->delimiter(',')
      ->capture_default_str();
  sw->add_option("--seed", sw_seed)->capture_default_str();
  sw->add_option("--out", sw_out, "optional CSV output path");
  sw->callback(
      [&] { cmd_swapdist(sw_voters, sw_candidates, sw_noises, sw_reps, sw_seed, sw_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 4;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
