#pragma once

#include <vector>

namespace arena {

struct Rating {
  double mu = 25.0;
  double sigma = 25.0 / 3.0;

  /// mu - 3 sigma, the leaderboard sort key.
  double conservative() const { return mu - 3.0 * sigma; }

  friend bool operator==(const Rating&, const Rating&) = default;
};

struct RatingConfig {
  double mu0 = 25.0;
  double sigma0 = 25.0 / 3.0;
  double beta = 25.0 / 6.0;
  /// Added in quadrature to each sigma before an update.
  double tau = 25.0 / 300.0;
  /// Half-width of the performance difference treated as a draw.
  double draw_margin = 0.0;
  /// Draw rate used to calibrate the margin of draw-capable games.
  double draw_probability = 0.1;

  /// Throws ArenaError when beta <= 0, tau < 0 or draw_margin < 0.
  void validate() const;
};

Rating init_rating(const RatingConfig& config);
inline Rating init_rating() { return init_rating(RatingConfig{}); }

double normal_pdf(double x);
double normal_cdf(double x);
double normal_ppf(double p);

/// Margin eps such that two equal players draw with probability p:
/// eps = ppf((p + 1) / 2) * sqrt(2) * beta.
double draw_margin_for(double draw_probability, double beta);

struct RatingPair {
  Rating first;
  Rating second;
};

/// Posterior of a decisive result (winner, loser) or, with `draw`, a tie.
/// Throws NonFiniteInput on NaN/inf input.
RatingPair update_two_player(Rating winner, Rating loser, bool draw, const RatingConfig& config);

/// Chain approximation over ranks (lower rank is better, equal ranks tie):
/// every adjacent pair in rank order is updated from the prior ratings, mu
/// deltas are summed and each participant keeps its smallest sigma.
/// Results are in input order. Throws TooFewPlayers below two entries.
std::vector<Rating> update_multiplayer(const std::vector<Rating>& ratings, const std::vector<int>& ranks,
                                       const RatingConfig& config);

}  // namespace arena
