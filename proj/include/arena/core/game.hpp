#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/message.hpp"

namespace arena {

/// Ordered groups of seats, best first; seats in one group are tied.
using Ranking = std::vector<std::vector<int>>;

/// Reward per seat, indexed by seat.
using Rewards = std::vector<double>;

enum class TerminalKind { Win, Draw, Rank, Success, Failure, InvalidMove, TurnLimit };

std::string_view to_string(TerminalKind kind);

struct TerminalInfo {
  TerminalKind kind = TerminalKind::Draw;
  Ranking ranking;
  std::string detail;
};

/// Maps a terminal envelope to rewards. Single-player: success +1, else -1.
/// n >= 2: a seat at mean rank r gets 1 - 2(r-1)/(n-1).
Rewards outcome(const TerminalInfo& terminal, int num_players);

/// Legal moves of the seat to act. Finite games list every token
/// (`exhaustive`); free-text games supply a sample of legal tokens plus a
/// validator that decides the rest.
struct LegalActions {
  std::vector<std::string> tokens;
  bool exhaustive = true;
  std::function<bool(std::string_view)> validator;

  bool allows(std::string_view token) const;
};

struct GameInfo;

/// A rule machine for one match. Subclasses implement the rules in
/// `do_apply`; the base class owns turn checks, the terminal latch, and the
/// outgoing message queue.
class Game {
 public:
  Game(const GameInfo& info, int num_players);
  virtual ~Game() = default;

  Game(const Game&) = default;
  Game& operator=(const Game&) = delete;

  const GameInfo& info() const { return *info_; }
  int num_players() const { return num_players_; }

  virtual int to_move() const = 0;
  virtual LegalActions legal_actions() const = 0;
  virtual std::string render(int viewer) const = 0;
  virtual std::unique_ptr<Game> clone() const = 0;

  /// Current standing used when the game is cut short (invalid move or turn
  /// limit). Defaults to everyone tied.
  virtual Ranking standing() const;

  /// Visibility of a seat's own action text. Simultaneous-move games hide it
  /// from the other seats until the round resolves.
  virtual Visibility action_visibility(int /*player*/) const { return Visibility::broadcast(); }

  /// Applies `token` for `player`. Throws TerminalError when the game is over
  /// and IllegalAction for any rule violation, leaving the state untouched.
  void apply(int player, std::string_view token);

  bool is_terminal() const { return terminal_.has_value(); }
  const std::optional<TerminalInfo>& terminal() const { return terminal_; }

  /// Ends the game from outside the rules (invalid move, turn limit).
  void terminate(TerminalInfo info);

  /// Messages emitted since the last call.
  std::vector<Message> take_messages();

 protected:
  virtual void do_apply(int player, std::string_view token) = 0;

  void broadcast(std::string text);
  void tell(int seat, std::string text);
  void tell(std::vector<int> seats, std::string text);
  void finish(TerminalKind kind, Ranking ranking, std::string detail);
  void finish_winner(int winner, std::string detail);
  void finish_draw(std::string detail);

 private:
  const GameInfo* info_;
  int num_players_;
  std::optional<TerminalInfo> terminal_;
  std::vector<Message> outbox_;
};

/// One group holding every seat.
Ranking all_tied(int num_players);

/// Builds a ranking from a score per seat (higher is better, equal scores tie).
Ranking rank_by_score(const std::vector<double>& scores);

}  // namespace arena
