#include "arena/core/env.hpp"

#include "arena/core/action_parse.hpp"
#include "arena/core/errors.hpp"
#include "arena/core/rng.hpp"

namespace arena {

void LlmObservationWrapper::transform(Observation& obs) const {
  std::string text;
  for (const auto& m : obs.messages) {
    if (!text.empty()) text += '\n';
    text += sender_label(m.sender);
    text += ' ';
    text += m.content;
  }
  obs.text = std::move(text);
}

void TailCharactersWrapper::transform(Observation& obs) const {
  if (obs.text.size() > max_chars_) obs.text = obs.text.substr(obs.text.size() - max_chars_);
}

Env Env::make(std::span<const std::string> env_ids, std::uint64_t seed) {
  if (env_ids.empty()) throw UnknownEnvId("<empty list>");
  for (const auto& id : env_ids) game_info(id);
  const std::string& chosen =
      env_ids.size() == 1 ? env_ids[0] : env_ids[Rng(seed, "make").index(env_ids.size())];
  return Env(game_info(chosen), seed);
}

Env Env::make(std::string_view env_id, std::uint64_t seed) { return Env(game_info(env_id), seed); }

Env& Env::wrap(std::shared_ptr<const ObservationWrapper> wrapper) {
  if (is_reset()) throw AlreadyResetError();
  wrappers_.push_back(std::move(wrapper));
  return *this;
}

void Env::reset(int num_players) {
  if (num_players < info_->min_players || num_players > info_->max_players) {
    throw PlayerCountOutOfRange(info_->min_players, info_->max_players, num_players);
  }
  game_ = info_->factory(num_players, seed_);
  log_.clear();
  steps_ = 0;
  log_.push_back(Message{kGameSender, info_->rules, Visibility::broadcast()});
  drain_game_messages();
  if (!game_->is_terminal()) announce_turn();
}

const Game& Env::game() const {
  if (!game_) throw NotResetError();
  return *game_;
}

int Env::num_players() const { return game().num_players(); }

bool Env::done() const { return game_ && game_->is_terminal(); }

int Env::current_player() const {
  if (!game_) throw NotResetError();
  if (game_->is_terminal()) throw TerminalError();
  return game_->to_move();
}

Observation Env::observe(int viewer) const {
  Observation obs;
  obs.viewer = viewer;
  for (const auto& m : log_) {
    if (m.visibility.includes(viewer)) obs.messages.push_back(m);
  }
  for (const auto& m : obs.messages) {
    if (!obs.text.empty()) obs.text += '\n';
    obs.text += m.content;
  }
  for (const auto& w : wrappers_) w->transform(obs);
  return obs;
}

std::pair<int, Observation> Env::get_observation() const {
  const int player = current_player();
  return {player, observe(player)};
}

StepResult Env::step(std::string_view action) {
  const int player = current_player();
  if (!action.empty()) {
    log_.push_back(Message{player, std::string(action), game_->action_visibility(player)});
  }
  ++steps_;

  auto token = try_parse_bracketed_action(action);
  if (!token) return end_invalid(player, "no [action] token found");
  try {
    game_->apply(player, *token);
  } catch (const IllegalAction& e) {
    drain_game_messages();
    return end_invalid(player, e.reason);
  }
  drain_game_messages();

  if (!game_->is_terminal() && steps_ >= static_cast<std::size_t>(info_->turn_limit)) {
    const Ranking standing = game_->standing();
    game_->terminate(TerminalInfo{TerminalKind::TurnLimit, standing, "turn limit reached"});
    log_.push_back(Message{kGameSender, "The turn limit has been reached.", Visibility::broadcast()});
  }
  if (game_->is_terminal()) return result();
  announce_turn();
  return result();
}

StepResult Env::forfeit(std::string detail) {
  const int player = current_player();
  ++steps_;
  return end_invalid(player, std::move(detail));
}

StepResult Env::end_invalid(int offender, std::string detail) {
  Ranking ranking;
  if (game_->num_players() > 1) {
    for (auto group : game_->standing()) {
      std::erase(group, offender);
      if (!group.empty()) ranking.push_back(std::move(group));
    }
  }
  ranking.push_back({offender});
  log_.push_back(Message{kGameSender,
                         "Player " + std::to_string(offender) + " made an invalid move: " + detail,
                         Visibility::broadcast()});
  game_->terminate(TerminalInfo{TerminalKind::InvalidMove, std::move(ranking), std::move(detail)});
  return result();
}

StepResult Env::result() const {
  StepResult r;
  r.done = game_->is_terminal();
  if (r.done) {
    r.info["reason"] = std::string(to_string(game_->terminal()->kind));
    r.info["detail"] = game_->terminal()->detail;
  }
  return r;
}

Rewards Env::close() const {
  if (!game_) throw NotResetError();
  if (!game_->is_terminal()) throw NotTerminalError();
  return outcome(*game_->terminal(), game_->num_players());
}

void Env::drain_game_messages() {
  for (auto& m : game_->take_messages()) log_.push_back(std::move(m));
}

void Env::announce_turn() {
  const auto legal = game_->legal_actions();
  if (!legal.exhaustive || legal.tokens.empty() || legal.tokens.size() > kListMovesLimit) return;
  std::string text = "Valid moves:";
  for (std::size_t i = 0; i < legal.tokens.size(); ++i) {
    text += i == 0 ? " [" : ", [";
    text += legal.tokens[i];
    text += ']';
  }
  const int player = game_->to_move();
  log_.push_back(Message{kGameSender, std::move(text), Visibility::only(player)});
}

Env wrap_llm_observation(Env env) {
  env.wrap(std::make_shared<LlmObservationWrapper>());
  return env;
}

}  // namespace arena
