#pragma once

#include <stdexcept>
#include <string>

namespace arena {

/// Base of every error raised by the arena libraries.
class ArenaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownEnvId : public ArenaError {
 public:
  explicit UnknownEnvId(const std::string& id)
      : ArenaError("unknown environment id: " + id), env_id(id) {}
  std::string env_id;
};

class PlayerCountOutOfRange : public ArenaError {
 public:
  PlayerCountOutOfRange(int min_players, int max_players, int got)
      : ArenaError("player count " + std::to_string(got) + " outside [" +
                   std::to_string(min_players) + ", " + std::to_string(max_players) + "]"),
        min(min_players),
        max(max_players),
        requested(got) {}
  int min;
  int max;
  int requested;
};

// Lifecycle misuse of an environment handle.
class NotResetError : public ArenaError {
 public:
  NotResetError() : ArenaError("environment has not been reset") {}
};
class AlreadyResetError : public ArenaError {
 public:
  AlreadyResetError() : ArenaError("wrappers must be applied before reset") {}
};
class TerminalError : public ArenaError {
 public:
  TerminalError() : ArenaError("game is already terminal") {}
};
class NotTerminalError : public ArenaError {
 public:
  NotTerminalError() : ArenaError("game is not terminal") {}
};

class NoBracketToken : public ArenaError {
 public:
  NoBracketToken() : ArenaError("no [...] action token found") {}
};

/// Raised by a game when a token is not a legal move; the environment turns it
/// into an invalid_move termination.
class IllegalAction : public ArenaError {
 public:
  IllegalAction(const std::string& tok, const std::string& why)
      : ArenaError("illegal action '" + tok + "': " + why), token(tok), reason(why) {}
  std::string token;
  std::string reason;
};

class BadLength : public ArenaError {
 public:
  using ArenaError::ArenaError;
};
class BadSymbol : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

class NonFiniteInput : public ArenaError {
 public:
  NonFiniteInput() : ArenaError("rating update received a non-finite input") {}
};
class TooFewPlayers : public ArenaError {
 public:
  TooFewPlayers() : ArenaError("a rated match needs at least two participants") {}
};
class NoRatedEnvironments : public ArenaError {
 public:
  explicit NoRatedEnvironments(const std::string& who)
      : ArenaError("participant '" + who + "' has no rated environments") {}
};

// agent-kit

class AuthError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};
class TimeoutError : public ArenaError {
 public:
  using ArenaError::ArenaError;
};
class MalformedResponse : public ArenaError {
 public:
  using ArenaError::ArenaError;
};
/// A relayed seat did not act before its clock (or disconnect grace) ran out.
class TurnTimeout : public ArenaError {
 public:
  using ArenaError::ArenaError;
};
/// A blocking relay wait was cancelled by shutdown.
class SessionCancelled : public ArenaError {
 public:
  SessionCancelled() : ArenaError("session cancelled") {}
};
class BadAgentSpec : public ArenaError {
 public:
  using ArenaError::ArenaError;
};

}  // namespace arena
