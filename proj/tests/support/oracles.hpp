#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/env.hpp"
#include "arena/core/rng.hpp"
#include "arena/rating/trueskill.hpp"

namespace arena::check {

/// Posterior mean and standard deviation of both skills after one game,
/// by 2-D composite Simpson integration of prior x likelihood. The prior
/// variances are inflated by tau^2 first. `draw_margin` is the half-width
/// of the draw band on the performance difference.
struct PosteriorMoments {
  Rating first;
  Rating second;
};
PosteriorMoments trueskill_quadrature(Rating winner, Rating loser, bool draw, double beta, double tau,
                                      double draw_margin, int intervals = 400);

/// Game value for the player to move (+1 win, 0 draw, -1 loss) by plain
/// minimax over the engine's own legal_actions/apply.
int minimax_value(const Game& game);

/// Whether the first mover wins Nim from `piles` under perfect play, solved
/// through the engine (memoized on the pile vector).
bool nim_first_player_wins(const std::vector<int>& piles);

/// Kuhn poker tree written out by hand, independent of the engine.
/// Histories over {c, b, f, k}; `value` is player 0's net chips.
struct KuhnLeaf {
  std::string history;
  double probability_uniform = 0;  // under both players choosing uniformly
  int value_if_p0_higher = 0;
  int value_if_p0_lower = 0;
};
std::vector<KuhnLeaf> kuhn_reference_tree();
/// Expected chips for player 0 when both players pick uniformly at random,
/// averaged over the six deals.
double kuhn_uniform_value_reference();

/// Wordle feedback by letter counting, written without the engine helper.
std::string wordle_feedback_reference(std::string_view guess, std::string_view secret);
/// Black/white pegs by counting symbols.
std::array<int, 2> mastermind_reference(const std::vector<int>& guess, const std::vector<int>& secret);

/// Whether 'X' or 'O' has four in a row anywhere: 0 none, 'X' or 'O'.
char connect_four_scan(const std::array<char, 42>& board_row_major_bottom_first);

/// Random legal token for the seat to act in `env`.
std::string random_legal_token(const Env& env, Rng& rng);

/// Plays a full random game and returns the bracketed actions sent.
std::vector<std::string> random_playout(Env& env, Rng& rng);

/// Replays `actions` into a fresh env built from the same id/seed/players.
Env replay(std::string_view env_id, std::uint64_t seed, int num_players, const std::vector<std::string>& actions);

}  // namespace arena::check
