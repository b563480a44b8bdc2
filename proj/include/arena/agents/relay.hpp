#pragma once

#include <chrono>
#include <condition_variable>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "arena/agents/agent.hpp"

namespace arena {

/// Hand-off point between a remote seat's connection and the session thread
/// driving its match. Actions are only accepted while a turn is open.
class RelayChannel {
 public:
  using Clock = std::chrono::steady_clock;

  /// Delivers an action for the open turn; false when no turn is open or the
  /// turn already has an action.
  bool submit(std::string text);

  /// Marks the connection lost. An open or future wait fails once the grace
  /// period has passed since the disconnect.
  void disconnect();
  /// Wakes every waiter with SessionCancelled.
  void cancel();

  bool connected() const;

  /// Starts accepting an action for a new turn, dropping anything pending.
  void open_turn();

  /// Opens a turn unless one is already open and blocks for the action. Throws TurnTimeout when the
  /// clock (or the disconnect grace) runs out, SessionCancelled on cancel.
  std::string await(std::chrono::milliseconds clock, std::chrono::milliseconds grace);

 private:
  mutable std::mutex mu_;
  std::condition_variable cv_;
  bool turn_open_ = false;
  std::optional<std::string> action_;
  std::optional<Clock::time_point> disconnected_at_;
  bool cancelled_ = false;
};

/// Agent whose moves come from a remote seat: each observation is pushed to
/// `notify`, then the agent waits on the channel.
class RelayAgent final : public Agent {
 public:
  using Notify = std::function<void(int player, std::string_view observation)>;

  RelayAgent(std::string name, std::shared_ptr<RelayChannel> channel, Notify notify,
             std::chrono::milliseconds clock, std::chrono::milliseconds grace)
      : name_(std::move(name)), channel_(std::move(channel)), notify_(std::move(notify)), clock_(clock), grace_(grace) {}

  std::string act(const TurnContext& ctx) override;
  std::string name() const override { return name_; }

 private:
  std::string name_;
  std::shared_ptr<RelayChannel> channel_;
  Notify notify_;
  std::chrono::milliseconds clock_;
  std::chrono::milliseconds grace_;
};

}  // namespace arena
