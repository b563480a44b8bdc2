#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arena/core/game.hpp"
#include "arena/core/message.hpp"
#include "arena/core/registry.hpp"

namespace arena {

struct StepResult {
  bool done = false;
  /// Terminal reason codes ("reason", "detail"); empty while the game runs.
  std::map<std::string, std::string> info;
};

/// A layer that rewrites the text of an Observation. Wrappers never see or
/// change seats, rewards or termination.
class ObservationWrapper {
 public:
  virtual ~ObservationWrapper() = default;
  virtual std::string name() const = 0;
  virtual void transform(Observation& obs) const = 0;
};

/// Renders the full visible history as one prompt, one "[GAME]" / "[Player k]"
/// labelled block per message.
class LlmObservationWrapper final : public ObservationWrapper {
 public:
  std::string name() const override { return "LLMObservationWrapper"; }
  void transform(Observation& obs) const override;
};

/// Keeps only the last `max_chars` characters of the current text.
class TailCharactersWrapper final : public ObservationWrapper {
 public:
  explicit TailCharactersWrapper(std::size_t max_chars) : max_chars_(max_chars) {}
  std::string name() const override { return "TailCharactersWrapper"; }
  void transform(Observation& obs) const override;

 private:
  std::size_t max_chars_;
};

/// Environment handle: make -> (wrap)* -> reset -> {get_observation, step}* -> close.
/// Single owner; not thread-safe.
class Env {
 public:
  /// Picks one id uniformly at random (seeded) when several are given.
  static Env make(std::span<const std::string> env_ids, std::uint64_t seed);
  static Env make(std::string_view env_id, std::uint64_t seed);

  Env(Env&&) noexcept = default;
  Env& operator=(Env&&) noexcept = default;

  /// Throws AlreadyResetError once reset.
  Env& wrap(std::shared_ptr<const ObservationWrapper> wrapper);

  void reset(int num_players);

  /// Seat whose action is required next, and that seat's observation.
  std::pair<int, Observation> get_observation() const;

  /// Seat to act without building an observation.
  int current_player() const;

  StepResult step(std::string_view action);

  /// Ends the game as an invalid move by the seat to act (timeouts,
  /// disconnects). `detail` lands in the terminal detail.
  StepResult forfeit(std::string detail);

  Rewards close() const;

  bool is_reset() const { return game_ != nullptr; }
  bool done() const;
  const std::string& env_id() const { return info_->env_id; }
  std::uint64_t seed() const { return seed_; }
  int num_players() const;
  std::size_t steps_taken() const { return steps_; }

  const GameInfo& info() const { return *info_; }
  const Game& game() const;
  const std::vector<Message>& log() const { return log_; }
  const std::vector<std::shared_ptr<const ObservationWrapper>>& wrappers() const { return wrappers_; }

  /// Builds the observation of any seat (used for rendering and audits).
  Observation observe(int viewer) const;

 private:
  Env(const GameInfo& info, std::uint64_t seed) : info_(&info), seed_(seed) {}

  void drain_game_messages();
  void announce_turn();
  StepResult end_invalid(int offender, std::string detail);
  StepResult result() const;

  const GameInfo* info_;
  std::uint64_t seed_;
  std::unique_ptr<Game> game_;
  std::vector<Message> log_;
  std::vector<std::shared_ptr<const ObservationWrapper>> wrappers_;
  std::size_t steps_ = 0;
};

/// Returns `env` with an LlmObservationWrapper pushed on its stack.
Env wrap_llm_observation(Env env);

/// Number of legal tokens up to which the seat to act is told its valid moves.
inline constexpr std::size_t kListMovesLimit = 40;

}  // namespace arena
