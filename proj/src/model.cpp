#include "emsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "emsim/errors.hpp"
#include "emsim/io_text.hpp"
#include "emsim/kernels.hpp"

namespace emsim {

namespace {

double clip(double x) { return std::clamp(x, -1.0, 1.0); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

NoiseSpec NoiseSpec::zero() { return NoiseSpec{}; }

NoiseSpec NoiseSpec::uniform(double lo, double hi) {
  NoiseSpec s;
  s.kind = Kind::Uniform;
  s.lo = lo;
  s.hi = hi;
  s.validate();
  return s;
}

NoiseSpec NoiseSpec::gaussian(double mean, double variance) {
  NoiseSpec s;
  s.kind = Kind::Gaussian;
  s.mean = mean;
  s.variance = variance;
  s.validate();
  return s;
}

NoiseSpec NoiseSpec::mixture(std::vector<Component> components) {
  NoiseSpec s;
  s.kind = Kind::Mixture;
  s.components = std::move(components);
  s.validate();
  return s;
}

void NoiseSpec::validate() const {
  switch (kind) {
    case Kind::Zero:
      return;
    case Kind::Uniform:
      if (!(lo <= hi)) throw ConfigError("uniform noise bounds must satisfy lo <= hi");
      return;
    case Kind::Gaussian:
      if (!(variance >= 0.0)) throw ConfigError("gaussian noise variance must be >= 0");
      return;
    case Kind::Mixture: {
      if (components.empty()) throw ConfigError("mixture noise needs at least one component");
      double wsum = 0.0;
      for (const auto& c : components) {
        if (!(c.weight >= 0.0)) throw ConfigError("mixture weights must be >= 0");
        if (!(c.variance >= 0.0)) throw ConfigError("mixture variances must be >= 0");
        wsum += c.weight;
      }
      if (std::fabs(wsum - 1.0) > 1e-9)
        throw ConfigError("mixture weights must sum to 1 (got " + fmt_double(wsum) + ")");
      return;
    }
  }
}

double NoiseSpec::sample(Rng& rng) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Uniform:
      return rng.uniform(lo, hi);
    case Kind::Gaussian:
      return rng.gaussian(mean, std::sqrt(variance));
    case Kind::Mixture: {
      double u = rng.uniform01();
      double acc = 0.0;
      for (const auto& c : components) {
        acc += c.weight;
        if (u < acc) return rng.gaussian(c.mean, std::sqrt(c.variance));
      }
      const auto& last = components.back();
      return rng.gaussian(last.mean, std::sqrt(last.variance));
    }
  }
  return 0.0;
}

NoiseSpec NoiseSpec::parse(const std::string& text) {
  auto bad = [&](const std::string& why) {
    return ConfigError("bad noise spec '" + text + "': " + why);
  };
  auto parts = split(text, ':');
  const std::string& kind = parts[0];
  try {
    if (kind == "zero") {
      if (parts.size() != 1) throw bad("zero takes no parameters");
      return NoiseSpec::zero();
    }
    if (kind == "uniform") {
      if (parts.size() != 3) throw bad("expected uniform:<lo>:<hi>");
      return NoiseSpec::uniform(parse_double(parts[1]), parse_double(parts[2]));
    }
    if (kind == "gauss" || kind == "gaussian") {
      if (parts.size() != 3) throw bad("expected gauss:<mean>:<variance>");
      return NoiseSpec::gaussian(parse_double(parts[1]), parse_double(parts[2]));
    }
    if (kind == "mix") {
      if (parts.size() < 2) throw bad("expected mix:<w>:<mean>:<var>[;...]");
      std::string rest = text.substr(4);
      std::vector<Component> comps;
      // ';' between components keeps the whole spec a single CSV/config token
      for (const auto& piece : split(rest, ';')) {
        auto f = split(piece, ':');
        if (f.size() != 3) throw bad("each mixture component is <w>:<mean>:<var>");
        comps.push_back({parse_double(f[0]), parse_double(f[1]), parse_double(f[2])});
      }
      return NoiseSpec::mixture(std::move(comps));
    }
  } catch (const DataError& e) {
    throw bad(e.what());
  }
  throw bad("unknown kind (use zero|uniform|gauss|mix)");
}

std::string NoiseSpec::to_string() const {
  switch (kind) {
    case Kind::Zero:
      return "zero";
    case Kind::Uniform:
      return "uniform:" + fmt_double(lo) + ":" + fmt_double(hi);
    case Kind::Gaussian:
      return "gauss:" + fmt_double(mean) + ":" + fmt_double(variance);
    case Kind::Mixture: {
      std::string out = "mix:";
      for (size_t i = 0; i < components.size(); ++i) {
        if (i) out += ';';
        out += fmt_double(components[i].weight) + ":" + fmt_double(components[i].mean) + ":" +
               fmt_double(components[i].variance);
      }
      return out;
    }
  }
  return "zero";
}

std::vector<double> ViewMatrix::row(NodeId v) const {
  std::vector<double> out(static_cast<size_t>(m_));
  for (int c = 0; c < m_; ++c) out[static_cast<size_t>(c)] = (*this)(v, c);
  return out;
}

void Electorate::validate() const {
  int m = num_candidates(), n = num_voters();
  if (m < 2) throw ConfigError("an election needs at least 2 candidates");
  if (n < 1) throw ConfigError("an election needs at least 1 voter");
  for (int c = 0; c < m; ++c) {
    if (candidates[static_cast<size_t>(c)].id != c)
      throw ConfigError("candidate ids must be dense 0..m-1 and in order");
    double x = candidates[static_cast<size_t>(c)].position;
    if (!(x >= -1.0 && x <= 1.0)) throw ConfigError("candidate position outside [-1, 1]");
  }
  for (int v = 0; v < n; ++v) {
    if (voters[static_cast<size_t>(v)].id != v)
      throw ConfigError("voter ids must be dense 0..n-1 and in order");
    double x = voters[static_cast<size_t>(v)].position;
    if (!(x >= -1.0 && x <= 1.0)) throw ConfigError("voter position outside [-1, 1]");
  }
  if (views.voters() != n || views.candidates() != m)
    throw ConfigError("view matrix shape does not match the electorate");
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < m; ++c) {
      double x = views(v, c);
      if (!(x >= -1.0 && x <= 1.0)) throw ConfigError("perceived position outside [-1, 1]");
    }
  if (target < 0 || target >= m) throw ConfigError("target candidate id out of range");
  if (!votes.empty()) {
    if (static_cast<int>(votes.size()) != n) throw ConfigError("vote vector size mismatch");
    for (CandidateId c : votes)
      if (c < 0 || c >= m) throw ConfigError("vote for unknown candidate");
  }
}

ViewMatrix sample_views(const std::vector<Candidate>& candidates, int n_voters,
                        const NoiseSpec& noise, Rng& rng) {
  noise.validate();
  int m = static_cast<int>(candidates.size());
  ViewMatrix views(n_voters, m);
  // Draw order is fixed (voter-major) so a seed pins the whole matrix.
  for (int v = 0; v < n_voters; ++v)
    for (int c = 0; c < m; ++c)
      views.at(v, c) = clip(candidates[static_cast<size_t>(c)].position + noise.sample(rng));
  return views;
}

CandidateId preferred_candidate(double voter_pos, std::span<const double> view_row,
                                std::optional<CandidateId> hint) {
  int m = static_cast<int>(view_row.size());
  double best = std::fabs(voter_pos - view_row[0]);
  CandidateId best_c = 0;
  CandidateId pv = hint.value_or(-1);
  for (int c = 1; c < m; ++c) {
    double d = std::fabs(voter_pos - view_row[static_cast<size_t>(c)]);
    if (d < best || (d == best && c == pv)) {
      best = d;
      best_c = c;
    }
  }
  return best_c;
}

std::vector<CandidateId> compute_votes(const Electorate& e) {
  int n = e.num_voters(), m = e.num_candidates();
  std::vector<double> pos(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) pos[static_cast<size_t>(v)] = e.voters[static_cast<size_t>(v)].position;
  std::vector<CandidateId> out(static_cast<size_t>(n));
  const int32_t* prev = e.votes.empty() ? nullptr : e.votes.data();
  kernels::ops().nearest_candidate(pos.data(), e.views.column_major(), n, m, prev, out.data());
  return out;
}

Electorate make_electorate(std::vector<Candidate> candidates, std::vector<Voter> voters,
                           ViewMatrix views, CandidateId target) {
  Electorate e;
  e.candidates = std::move(candidates);
  e.voters = std::move(voters);
  e.views = std::move(views);
  e.target = target;
  e.validate();
  e.votes = compute_votes(e);
  return e;
}

VoteTally tally_votes(const std::vector<CandidateId>& votes, int num_candidates) {
  VoteTally t;
  t.votes.assign(static_cast<size_t>(num_candidates), 0);
  for (CandidateId c : votes) t.votes[static_cast<size_t>(c)]++;
  return t;
}

VoteTally tally(const Electorate& e) { return tally_votes(compute_votes(e), e.num_candidates()); }

int64_t margin_of_victory(const VoteTally& t, CandidateId c_star) {
  int m = static_cast<int>(t.votes.size());
  if (m < 2) throw ConfigError("margin of victory needs at least 2 candidates");
  if (c_star < 0 || c_star >= m) throw ConfigError("margin of victory: unknown candidate");
  int64_t best_other = 0;
  bool seen = false;
  for (int c = 0; c < m; ++c) {
    if (c == c_star) continue;
    if (!seen || t.votes[static_cast<size_t>(c)] > best_other) best_other = t.votes[static_cast<size_t>(c)];
    seen = true;
  }
  return t.votes[static_cast<size_t>(c_star)] - best_other;
}

int64_t delta_mov(const VoteTally& before, const VoteTally& after, CandidateId c_star) {
  if (before.votes.size() != after.votes.size())
    throw ConfigError("delta_mov: tallies have different candidate counts");
  return margin_of_victory(after, c_star) - margin_of_victory(before, c_star);
}

double apply_influence(double voter_pos, double perceived_target_pos, double delta) {
  double d = perceived_target_pos - voter_pos;
  double step = std::fmin(std::fabs(d), delta);
  return voter_pos + std::copysign(step, d);
}

double apply_influence(const Voter& v, std::span<const double> view_row, CandidateId c_star,
                       double delta) {
  return apply_influence(v.position, view_row[static_cast<size_t>(c_star)], delta);
}

std::vector<CandidateId> ranking(double voter_pos, std::span<const double> view_row) {
  std::vector<CandidateId> ids(view_row.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](CandidateId a, CandidateId b) {
    double da = std::fabs(voter_pos - view_row[static_cast<size_t>(a)]);
    double db = std::fabs(voter_pos - view_row[static_cast<size_t>(b)]);
    if (da != db) return da < db;
    return a < b;
  });
  return ids;
}

int kendall_tau_distance(const std::vector<CandidateId>& a, const std::vector<CandidateId>& b) {
  int m = static_cast<int>(a.size());
  if (b.size() != a.size()) throw ConfigError("kendall_tau_distance: length mismatch");
  CandidateId max_id = 0;
  for (CandidateId c : a) max_id = std::max(max_id, c);
  std::vector<int> pos_b(static_cast<size_t>(max_id) + 1, -1);
  for (int i = 0; i < m; ++i) {
    CandidateId c = b[static_cast<size_t>(i)];
    if (c < 0 || c > max_id || pos_b[static_cast<size_t>(c)] != -1)
      throw ConfigError("kendall_tau_distance: not permutations of each other");
    pos_b[static_cast<size_t>(c)] = i;
  }
  int swaps = 0;
  for (int i = 0; i < m; ++i) {
    if (pos_b[static_cast<size_t>(a[static_cast<size_t>(i)])] == -1)
      throw ConfigError("kendall_tau_distance: not permutations of each other");
    for (int j = i + 1; j < m; ++j)
      if (pos_b[static_cast<size_t>(a[static_cast<size_t>(i)])] >
          pos_b[static_cast<size_t>(a[static_cast<size_t>(j)])])
        ++swaps;
  }
  return swaps;
}

int swap_distance_to_single_peaked(const std::vector<CandidateId>& order,
                                   const std::vector<CandidateId>& axis) {
  int m = static_cast<int>(axis.size());
  if (m == 0 || order.size() != axis.size())
    throw ConfigError("swap distance: order and axis must be equal-length and non-empty");
  if (m > 10)
    throw CapabilityError("swap distance enumerates 2^(m-1) rankings; refusing m > 10");
  // A ranking is single-peaked iff, reading from least preferred upward, each
  // candidate is an endpoint of the axis interval still in play.  Enumerating
  // the 2^(m-1) endpoint choices generates every single-peaked ranking once.
  int best = -1;
  std::vector<CandidateId> sp(static_cast<size_t>(m));
  for (uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
    int lo = 0, hi = m - 1;
    for (int step = 0; step < m - 1; ++step) {
      CandidateId taken = (mask >> step) & 1u ? axis[static_cast<size_t>(hi--)]
                                              : axis[static_cast<size_t>(lo++)];
      sp[static_cast<size_t>(m - 1 - step)] = taken;
    }
    sp[0] = axis[static_cast<size_t>(lo)];
    int d = kendall_tau_distance(order, sp);
    if (best < 0 || d < best) best = d;
    if (best == 0) break;
  }
  return best;
}

std::vector<CandidateId> position_axis(const std::vector<Candidate>& candidates) {
  std::vector<CandidateId> ids(candidates.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](CandidateId a, CandidateId b) {
    double pa = candidates[static_cast<size_t>(a)].position;
    double pb = candidates[static_cast<size_t>(b)].position;
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return ids;
}

}  // namespace emsim
