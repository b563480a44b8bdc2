#pragma once

namespace arena {

inline constexpr double kEloInitial = 1500.0;

struct EloUpdate {
  double winner;
  double loser;
  /// Points moved from loser to winner; negative when the winner was the
  /// favourite in a draw.
  double delta;
};

/// Expected score of a player rated `a` against one rated `b`.
double elo_expected(double a, double b);

/// E = 1 / (1 + 10^((loser - winner) / 400)); the winner gains k (S - E)
/// with S = 1 (0.5 on a draw) and the loser gives up the same amount.
EloUpdate update_elo(double winner, double loser, double k, bool draw);

}  // namespace arena
