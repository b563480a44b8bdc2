#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/rating/trueskill.hpp"

namespace arena {

struct ConvergenceConfig {
  int agents = 8;
  /// Latent skills are evenly spaced over `spread_betas * beta`.
  double spread_betas = 2.0;
  int max_matches = 3000;
  int seeds = 20;
  std::uint64_t base_seed = 1;
  double threshold = 0.9;
  double elo_k = 32.0;
  RatingConfig rating;
};

struct ConvergenceRun {
  std::uint64_t seed = 0;
  /// Matches until Kendall tau-b first reached the threshold; nullopt when
  /// it never did within max_matches.
  std::optional<int> trueskill;
  std::optional<int> elo;
};

struct ConvergenceReport {
  ConvergenceConfig config;
  std::vector<ConvergenceRun> runs;
  /// False when the latent skills are all equal (no order to recover).
  bool signal = true;

  /// Mean over seeds, counting a run that never converged as max_matches.
  double mean_trueskill() const;
  double mean_elo() const;
  int reached_trueskill() const;
  int reached_elo() const;
};

/// Kendall tau-b between two score vectors (ties handled). Returns nullopt
/// when either vector is constant.
std::optional<double> kendall_tau_b(const std::vector<double>& a, const std::vector<double>& b);

/// Latent skill per agent: centred on mu0, evenly spaced over the spread.
std::vector<double> latent_skills(const ConvergenceConfig& config);

/// Uniformly scheduled synthetic matches, i beats j with probability
/// Phi((s_i - s_j) / (sqrt(2) beta)). TrueSkill (ordered by mu - 3 sigma)
/// and Elo see the same schedule and outcomes.
ConvergenceRun simulate_convergence_seed(const ConvergenceConfig& config, std::uint64_t seed);
ConvergenceReport simulate_convergence(const ConvergenceConfig& config);

/// seed,trueskill_matches,elo_matches rows (empty cell: not reached), then
/// a summary row per system.
std::string convergence_csv(const ConvergenceReport& report);

}  // namespace arena
