#include "arena/agents/relay.hpp"

#include "arena/core/errors.hpp"

namespace arena {

bool RelayChannel::submit(std::string text) {
  {
    std::lock_guard lock(mu_);
    if (!turn_open_ || action_) return false;
    action_ = std::move(text);
  }
  cv_.notify_all();
  return true;
}

void RelayChannel::disconnect() {
  {
    std::lock_guard lock(mu_);
    if (!disconnected_at_) disconnected_at_ = Clock::now();
  }
  cv_.notify_all();
}

void RelayChannel::cancel() {
  {
    std::lock_guard lock(mu_);
    cancelled_ = true;
  }
  cv_.notify_all();
}

bool RelayChannel::connected() const {
  std::lock_guard lock(mu_);
  return !disconnected_at_;
}

void RelayChannel::open_turn() {
  std::lock_guard lock(mu_);
  turn_open_ = true;
  action_.reset();
}

std::string RelayChannel::await(std::chrono::milliseconds clock, std::chrono::milliseconds grace) {
  std::unique_lock lock(mu_);
  if (!turn_open_) {
    turn_open_ = true;
    action_.reset();
  }
  const auto clock_deadline = Clock::now() + clock;
  struct Close {
    RelayChannel* self;
    ~Close() {
      self->turn_open_ = false;
      self->action_.reset();
    }
  } close{this};

  while (true) {
    if (cancelled_) throw SessionCancelled();
    if (action_) return *action_;
    auto deadline = clock_deadline;
    if (disconnected_at_) deadline = std::min(deadline, *disconnected_at_ + grace);
    if (Clock::now() >= deadline) {
      throw TurnTimeout(disconnected_at_ ? "seat disconnected" : "turn clock expired");
    }
    cv_.wait_until(lock, deadline);
  }
}

std::string RelayAgent::act(const TurnContext& ctx) {
  channel_->open_turn();
  if (notify_) notify_(ctx.player, ctx.observation);
  return channel_->await(clock_, grace_);
}

}  // namespace arena
