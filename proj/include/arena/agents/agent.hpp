#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "arena/core/game.hpp"
#include "arena/core/rng.hpp"

namespace arena {

/// What an agent sees when asked to move. `game` is set for offline play
/// only; online agents work from the observation text alone.
struct TurnContext {
  int player = 0;
  std::string_view observation;
  std::string_view env_id;
  const Game* game = nullptr;
};

class Agent {
 public:
  virtual ~Agent() = default;
  /// Free-form action text; the env extracts the bracketed token.
  virtual std::string act(const TurnContext& ctx) = 0;
  virtual std::string name() const = 0;
  virtual std::string description() const { return {}; }
};

/// Uniform choice over the game's legal tokens (the sample tokens for
/// free-text games), wrapped in brackets.
class RandomLegalAgent final : public Agent {
 public:
  RandomLegalAgent(std::uint64_t seed, std::string name = "random") : rng_(seed), name_(std::move(name)) {}
  std::string act(const TurnContext& ctx) override;
  std::string name() const override { return name_; }
  std::string description() const override { return "uniformly random legal move"; }

 private:
  Rng rng_;
  std::string name_;
};

/// Picks uniformly from the last "Valid moves: [a], [b]" line of the
/// observation. Needs no game access, so it can play over the wire.
class ListedMoveAgent final : public Agent {
 public:
  ListedMoveAgent(std::uint64_t seed, std::string name = "listed") : rng_(seed), name_(std::move(name)) {}
  std::string act(const TurnContext& ctx) override;
  std::string name() const override { return name_; }
  std::string description() const override { return "random pick from the listed valid moves"; }

 private:
  Rng rng_;
  std::string name_;
};

/// Plays Nim perfectly: moves to a zero nim-sum whenever possible, otherwise
/// takes one object from the largest pile. Reads the piles from the last
/// "Piles:" line of the observation.
class NimPerfectAgent final : public Agent {
 public:
  explicit NimPerfectAgent(std::string name = "nim-perfect") : name_(std::move(name)) {}
  std::string act(const TurnContext& ctx) override;
  std::string name() const override { return name_; }
  std::string description() const override { return "nim-sum perfect play"; }

 private:
  std::string name_;
};

/// Moves listed in the last "Valid moves:" line of `observation`.
std::vector<std::string> listed_moves(std::string_view observation);

/// `kind:key=value,...`, e.g. "random:seed=1,name=r1".
struct AgentSpec {
  std::string kind;
  std::map<std::string, std::string, std::less<>> params;
  std::string text;

  /// `name=` when given, else the raw agent string.
  std::string display_name() const;
  std::string param(std::string_view key, std::string_view fallback = {}) const;
};

/// Throws BadAgentSpec.
AgentSpec parse_agent_spec(std::string_view text);

/// Builds the offline kinds (random, listed, nim-perfect). `seed` is mixed
/// with a `seed=` parameter when one is given. Throws BadAgentSpec for other
/// kinds.
std::unique_ptr<Agent> make_local_agent(const AgentSpec& spec, std::uint64_t seed);

}  // namespace arena
