#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emsim/rng.hpp"

namespace emsim {

using NodeId = int32_t;
using CandidateId = int32_t;

// Candidates and voters sit on the ideological line [-1, +1].
struct Candidate {
  CandidateId id = 0;
  double position = 0.0;
};

struct Voter {
  NodeId id = 0;
  double position = 0.0;
};

// Additive perception noise.  The perturbation is drawn independently per
// (voter, candidate) pair and does not depend on the candidate's position.
struct NoiseSpec {
  enum class Kind { Zero, Uniform, Gaussian, Mixture };
  struct Component {
    double weight = 0.0;
    double mean = 0.0;
    double variance = 0.0;  // note: variance, not standard deviation
  };

  Kind kind = Kind::Zero;
  double lo = 0.0, hi = 0.0;          // Uniform
  double mean = 0.0, variance = 0.0;  // Gaussian
  std::vector<Component> components;  // Mixture

  static NoiseSpec zero();
  static NoiseSpec uniform(double lo, double hi);
  static NoiseSpec gaussian(double mean, double variance);
  static NoiseSpec mixture(std::vector<Component> components);

  void validate() const;               // throws ConfigError
  double sample(Rng& rng) const;       // one perturbation draw
  bool is_zero() const { return kind == Kind::Zero; }

  // Text form used by CLI/config/CSV:
  //   zero | uniform:<lo>:<hi> | gauss:<mean>:<variance> |
  //   mix:<w>:<mean>:<var>[;<w>:<mean>:<var>...]
  static NoiseSpec parse(const std::string& text);
  std::string to_string() const;
};

// Per-voter perceived candidate positions, clipped to [-1, +1].  Stored
// column-major (one contiguous array per candidate) for the tally kernel.
class ViewMatrix {
 public:
  ViewMatrix() = default;
  ViewMatrix(int voters, int candidates)
      : n_(voters), m_(candidates), data_(static_cast<size_t>(voters) * candidates, 0.0) {}

  int voters() const { return n_; }
  int candidates() const { return m_; }
  double operator()(NodeId v, CandidateId c) const {
    return data_[static_cast<size_t>(c) * n_ + v];
  }
  double& at(NodeId v, CandidateId c) { return data_[static_cast<size_t>(c) * n_ + v]; }
  const double* column_major() const { return data_.data(); }
  // Perceived positions of all candidates for one voter (length m).
  std::vector<double> row(NodeId v) const;

  bool operator==(const ViewMatrix&) const = default;

 private:
  int n_ = 0, m_ = 0;
  std::vector<double> data_;
};

// One election snapshot: true positions, perceived positions, the candidate
// the manipulator supports, and each voter's current vote (the sticky state).
struct Electorate {
  std::vector<Candidate> candidates;
  std::vector<Voter> voters;
  ViewMatrix views;
  CandidateId target = 0;
  std::vector<CandidateId> votes;  // empty until compute_votes/make_electorate

  int num_candidates() const { return static_cast<int>(candidates.size()); }
  int num_voters() const { return static_cast<int>(voters.size()); }
  void validate() const;  // throws ConfigError on malformed snapshots
};

struct VoteTally {
  std::vector<int64_t> votes;  // per candidate id; sums to the voter count
};

// Draws the perceived position matrix: views(v,c) = clip(x_c + noise, -1, 1).
ViewMatrix sample_views(const std::vector<Candidate>& candidates, int n_voters,
                        const NoiseSpec& noise, Rng& rng);

// argmin_c |voter_pos - view_row[c]|; exact ties keep `hint` when it is among
// the minimizers, otherwise the smallest candidate id wins.
CandidateId preferred_candidate(double voter_pos, std::span<const double> view_row,
                                std::optional<CandidateId> hint = std::nullopt);

// Recomputes every voter's vote from positions/views, using the previous vote
// (electorate.votes, when present) as the sticky tie-break hint.
std::vector<CandidateId> compute_votes(const Electorate& e);

// Builds an electorate and initializes votes (no history: smallest-id ties).
Electorate make_electorate(std::vector<Candidate> candidates, std::vector<Voter> voters,
                           ViewMatrix views, CandidateId target);

VoteTally tally_votes(const std::vector<CandidateId>& votes, int num_candidates);
VoteTally tally(const Electorate& e);  // tally of compute_votes(e)

// votes(c_star) - max over other candidates; requires >= 2 candidates.
int64_t margin_of_victory(const VoteTally& t, CandidateId c_star);
int64_t delta_mov(const VoteTally& before, const VoteTally& after, CandidateId c_star);

// Moves a voter by at most delta toward the (perceived) target position.
double apply_influence(double voter_pos, double perceived_target_pos, double delta);
double apply_influence(const Voter& v, std::span<const double> view_row, CandidateId c_star,
                       double delta);

// Full preference order of one voter: ascending perceived distance, ties by id.
std::vector<CandidateId> ranking(double voter_pos, std::span<const double> view_row);

// Minimum number of adjacent swaps turning `order` into some ranking that is
// single-peaked with respect to `axis` (enumerates all 2^(m-1) of them;
// m > 10 throws CapabilityError).
int swap_distance_to_single_peaked(const std::vector<CandidateId>& order,
                                   const std::vector<CandidateId>& axis);

// Candidate ids sorted by true position (the societal axis).
std::vector<CandidateId> position_axis(const std::vector<Candidate>& candidates);

int kendall_tau_distance(const std::vector<CandidateId>& a, const std::vector<CandidateId>& b);

}  // namespace emsim
