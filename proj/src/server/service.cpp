#include "arena/server/service.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include <spdlog/spdlog.h>

#include "arena/agents/llm_agent.hpp"
#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/tools/match_record.hpp"

namespace arena::server {
namespace {

nlohmann::json error_message(std::string_view code, std::string_view detail) {
  return {{"type", "error"}, {"code", code}, {"detail", detail}};
}

/// Thrown inside handlers; becomes an error message to the sender.
struct ProtocolError {
  std::string code;
  std::string detail;
};

std::string string_field(const nlohmann::json& msg, const char* key, bool required) {
  const auto it = msg.find(key);
  if (it == msg.end()) {
    if (required) throw ProtocolError{"bad_message", std::string("missing field '") + key + "'"};
    return {};
  }
  if (!it->is_string()) throw ProtocolError{"bad_message", std::string("field '") + key + "' must be a string"};
  return it->get<std::string>();
}

bool reserved(std::string_view name) {
  if (name.size() != kHumanity.size()) return false;
  return std::equal(name.begin(), name.end(), kHumanity.begin(),
                    [](char a, char b) { return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b)); });
}

std::vector<std::string> multiplayer_envs() {
  std::vector<std::string> ids;
  for (const GameInfo* info : registered_games()) {
    if (info->max_players >= 2) ids.push_back(info->env_id);
  }
  return ids;
}

}  // namespace

ArenaService::ArenaService(ServerConfig config)
    : config_(std::move(config)), store_(config_.data_dir), server_seed_(std::random_device{}()), board_(config_.rating) {
  server_seed_ = (server_seed_ << 32) ^ std::random_device{}();
}

ArenaService::~ArenaService() { stop(); }

void ArenaService::start() {
  {
    std::lock_guard lock(board_mu_);
    board_ = store_.recover(config_.rating);
  }
  spdlog::info("arena service: {} participants recovered from {}", board_.entries().size(),
               store_.matches_path().string());
  for (const auto& spec : config_.house_agents) queue_house_agent(spec);
  {
    std::lock_guard lock(sweep_mu_);
    stopping_ = false;
    started_ = true;
  }
  sweeper_ = std::thread([this] { sweep_loop(); });
}

void ArenaService::stop() {
  {
    std::lock_guard lock(sweep_mu_);
    if (!started_) return;
    started_ = false;
    stopping_ = true;
  }
  sweep_cv_.notify_all();
  if (sweeper_.joinable()) sweeper_.join();

  std::map<std::string, std::unique_ptr<Session>> sessions;
  {
    std::lock_guard lock(mu_);
    for (auto& [id, s] : sessions_) {
      for (auto& seat : s->seats) {
        if (seat.channel) seat.channel->cancel();
      }
    }
    sessions.swap(sessions_);
  }
  for (auto& [id, s] : sessions) {
    if (s->thread.joinable()) s->thread.join();
  }
}

void ArenaService::sweep_loop() {
  std::unique_lock lock(sweep_mu_);
  while (!stopping_) {
    sweep_cv_.wait_for(lock, config_.sweep_interval, [this] { return stopping_.load(); });
    if (stopping_) break;
    lock.unlock();
    try {
      sweep();
    } catch (const std::exception& e) {
      spdlog::error("matchmaking sweep failed: {}", e.what());
    }
    lock.lock();
  }
}

std::string ArenaService::participant_key(const Registration& reg) {
  return (reg.human ? "human/" : "model/") + reg.model_name;
}

double ArenaService::score_of(const std::string& rating_id) {
  std::lock_guard lock(board_mu_);
  const auto* e = board_.find(rating_id);
  return e ? e->global.rating.conservative() : init_rating(config_.rating).conservative();
}

void ArenaService::queue_house_agent(const std::string& spec) {
  const auto name = parse_agent_spec(spec).display_name();
  std::lock_guard lock(mu_);
  registrations_.try_emplace(name, Registration{name, "house agent " + spec, "", false});
  house_specs_["house/" + name] = spec;
  requeue_house("house/" + name);
}

void ArenaService::requeue_house(const std::string& participant) {
  Ticket t;
  t.participant = participant;
  t.rating_id = participant.substr(std::string_view("house/").size());
  t.env_ids = multiplayer_envs();
  t.house = true;
  t.order = next_order_++;
  t.enqueued = std::chrono::steady_clock::now();
  t.score = score_of(t.rating_id);
  queue_.push_back(std::move(t));
}

void ArenaService::handle(const std::shared_ptr<Peer>& peer, std::string_view text) {
  const auto msg = nlohmann::json::parse(text, nullptr, false);
  if (msg.is_discarded() || !msg.is_object()) {
    peer->send(error_message("bad_json", "message is not a JSON object"));
    return;
  }
  try {
    const auto type = string_field(msg, "type", true);
    std::unique_lock lock(mu_);
    auto& conn = conns_[peer.get()];
    conn.peer = peer;
    if (type == "hello") {
      on_hello(conn, msg);
    } else if (type == "enqueue") {
      on_enqueue(conn, msg);
    } else if (type == "action") {
      on_action(conn, msg);
    } else {
      throw ProtocolError{"unknown_type", "unknown message type '" + type + "'"};
    }
  } catch (const ProtocolError& e) {
    peer->send(error_message(e.code, e.detail));
  }
}

void ArenaService::on_hello(Conn& conn, const nlohmann::json& msg) {
  Registration reg;
  reg.model_name = string_field(msg, "model_name", true);
  reg.model_description = string_field(msg, "model_description", false);
  reg.email = string_field(msg, "email", false);
  if (const auto it = msg.find("human"); it != msg.end()) {
    if (!it->is_boolean()) throw ProtocolError{"bad_message", "field 'human' must be a boolean"};
    reg.human = it->get<bool>();
  }
  if (reg.model_name.empty()) throw ProtocolError{"bad_message", "model_name is empty"};
  if (reserved(reg.model_name)) throw ProtocolError{"reserved_name", "the name Humanity is reserved"};
  if (conn.reg) {
    if (conn.reg->model_name == reg.model_name && conn.reg->human == reg.human) return;
    throw ProtocolError{"already_registered", "this connection is registered as " + conn.reg->model_name};
  }
  if (!reg.human) {
    const auto it = registrations_.find(reg.model_name);
    if (it != registrations_.end() && it->second.email != reg.email) {
      throw ProtocolError{"name_conflict", "model name " + reg.model_name + " is registered to another email"};
    }
    registrations_.insert_or_assign(reg.model_name, reg);
  }
  {
    std::lock_guard board_lock(board_mu_);
    board_.ensure(reg.human ? std::string(kHumanity) : reg.model_name);
  }
  conn.reg = std::move(reg);
}

void ArenaService::on_enqueue(Conn& conn, const nlohmann::json& msg) {
  if (!conn.reg) throw ProtocolError{"not_registered", "send hello first"};
  const auto it = msg.find("env_ids");
  if (it == msg.end() || !it->is_array() || it->empty()) {
    throw ProtocolError{"bad_message", "env_ids must be a non-empty list"};
  }
  std::vector<std::string> env_ids;
  for (const auto& id : *it) {
    if (!id.is_string()) throw ProtocolError{"bad_message", "env_ids must hold strings"};
    const auto env = id.get<std::string>();
    const GameInfo* info = find_game(env);
    if (!info) throw ProtocolError{"unknown_env", "unknown environment id: " + env};
    if (info->max_players < 2) throw ProtocolError{"unsupported_env", env + " is single-player and cannot be played online"};
    if (std::find(env_ids.begin(), env_ids.end(), env) == env_ids.end()) env_ids.push_back(env);
  }
  const auto key = participant_key(*conn.reg);
  if (conn.queued || !conn.match_id.empty() || ticket_owner_.count(key)) {
    throw ProtocolError{"already_queued", conn.reg->model_name + " is already queued or playing"};
  }
  Ticket t;
  t.participant = key;
  t.rating_id = conn.reg->human ? std::string(kHumanity) : conn.reg->model_name;
  t.env_ids = std::move(env_ids);
  t.order = next_order_++;
  t.enqueued = std::chrono::steady_clock::now();
  {
    std::lock_guard board_lock(board_mu_);
    const auto* e = board_.find(t.rating_id);
    t.score = e ? e->global.rating.conservative() : init_rating(config_.rating).conservative();
  }
  queue_.push_back(std::move(t));
  ticket_owner_[key] = conn.peer.get();
  conn.queued = true;
  conn.peer->send({{"type", "queued"}});
}

void ArenaService::on_action(Conn& conn, const nlohmann::json& msg) {
  const auto match_id = string_field(msg, "match_id", true);
  const auto text = string_field(msg, "text", true);
  if (conn.match_id.empty() || conn.match_id != match_id || !conn.channel) {
    throw ProtocolError{"not_in_match", "no live match " + match_id + " for this connection"};
  }
  if (!conn.channel->submit(text)) throw ProtocolError{"not_your_turn", "no action is expected from you now"};
}

void ArenaService::disconnect(const std::shared_ptr<Peer>& peer) {
  std::lock_guard lock(mu_);
  const auto it = conns_.find(peer.get());
  if (it == conns_.end()) return;
  auto& conn = it->second;
  if (conn.reg && conn.queued) {
    const auto key = participant_key(*conn.reg);
    std::erase_if(queue_, [&](const Ticket& t) { return t.participant == key; });
    ticket_owner_.erase(key);
  }
  if (conn.channel) conn.channel->disconnect();
  conns_.erase(it);
}

void ArenaService::sweep() {
  reap_finished();
  std::lock_guard lock(mu_);
  const auto groups = matchmake_sweep(queue_, std::chrono::steady_clock::now(), config_.starvation_age);
  for (const auto& group : groups) start_session(group);
}

void ArenaService::start_session(const MatchGroup& group) {
  auto session = std::make_unique<Session>();
  char id[32];
  std::snprintf(id, sizeof id, "m%016llx",
                static_cast<unsigned long long>(derive_seed(server_seed_, "match/" + std::to_string(next_match_++))));
  session->match_id = id;
  session->env_id = group.env_id;
  session->seed = derive_seed(server_seed_, session->match_id);

  for (const auto& ticket : group.tickets) {
    Seat seat;
    seat.participant = ticket.participant;
    seat.rating_id = ticket.rating_id;
    seat.human = ticket.rating_id == kHumanity;
    if (!ticket.house) {
      const auto owner = ticket_owner_.find(ticket.participant);
      auto& conn = conns_.at(owner->second);
      seat.peer = conn.peer;
      seat.channel = std::make_shared<RelayChannel>();
      conn.queued = false;
      conn.match_id = session->match_id;
      conn.channel = seat.channel;
      ticket_owner_.erase(owner);
    }
    session->seats.push_back(std::move(seat));
  }
  const int n = static_cast<int>(session->seats.size());
  for (int s = 0; s < n; ++s) {
    const auto& seat = session->seats[static_cast<std::size_t>(s)];
    if (!seat.peer) continue;
    seat.peer->send({{"type", "match_found"},
                     {"match_id", session->match_id},
                     {"env_id", session->env_id},
                     {"player_id", s},
                     {"num_players", n}});
  }
  spdlog::info("match {} ({}) started with {} seats", session->match_id, session->env_id, n);
  auto* raw = session.get();
  sessions_[session->match_id] = std::move(session);
  raw->thread = std::thread([this, raw] { run_session(*raw); });
}

void ArenaService::run_session(Session& session) {
  std::vector<std::unique_ptr<Agent>> owned;
  std::vector<Agent*> agents;
  MatchSetup setup{session.match_id, session.env_id, session.seed, {}};
  for (std::size_t s = 0; s < session.seats.size(); ++s) {
    auto& seat = session.seats[s];
    setup.participants.push_back(seat.rating_id);
    if (seat.peer) {
      auto peer = seat.peer;
      const auto match_id = session.match_id;
      owned.push_back(std::make_unique<RelayAgent>(
          seat.rating_id, seat.channel,
          [peer, match_id](int player, std::string_view observation) {
            peer->send({{"type", "observation"}, {"match_id", match_id}, {"player_id", player}, {"text", observation}});
          },
          seat.human ? config_.human_clock : config_.model_clock, config_.disconnect_grace));
    } else {
      std::string spec;
      {
        std::lock_guard lock(mu_);
        spec = house_specs_.at(seat.participant);
      }
      owned.push_back(make_agent(parse_agent_spec(spec), derive_seed(session.seed, "house/" + std::to_string(s))));
    }
    agents.push_back(owned.back().get());
  }

  try {
    PlayOptions options;
    options.record_wall_time = true;
    finish_session(session, play_match(setup, agents, options));
  } catch (const SessionCancelled&) {
    spdlog::info("match {} cancelled", session.match_id);
  } catch (const std::exception& e) {
    spdlog::error("match {} aborted: {}", session.match_id, e.what());
    for (const auto& seat : session.seats) {
      if (seat.peer) seat.peer->send(error_message("match_aborted", e.what()));
    }
  }

  std::lock_guard lock(mu_);
  for (const auto& seat : session.seats) {
    if (!seat.peer) continue;
    const auto it = conns_.find(seat.peer.get());
    if (it != conns_.end() && it->second.match_id == session.match_id) {
      it->second.match_id.clear();
      it->second.channel.reset();
    }
  }
  session.finished = true;
  if (!stopping_) {
    for (const auto& seat : session.seats) {
      if (!seat.peer) requeue_house(seat.participant);
    }
  }
}

void ArenaService::finish_session(Session& session, MatchRecord record) {
  {
    std::lock_guard lock(board_mu_);
    Leaderboard next = board_;
    rate_match(next, record);
    // The record goes to disk before the ratings are committed; recovery
    // replays the log, so a crash in between loses nothing.
    store_.append(record);
    board_ = std::move(next);
    store_.write_leaderboard(board_);
  }
  ++completed_;
  nlohmann::json rewards = nlohmann::json::object();
  for (std::size_t i = 0; i < record.rewards.size(); ++i) rewards[std::to_string(i)] = record.rewards[i];
  for (const auto& seat : session.seats) {
    if (!seat.peer) continue;
    nlohmann::json rating = nlohmann::json::object();
    if (const auto it = record.ratings.find(seat.rating_id); it != record.ratings.end()) {
      const auto& g = it->second.global;
      rating = {{"mu_before", g.before.mu},
                {"sigma_before", g.before.sigma},
                {"mu_after", g.after.mu},
                {"sigma_after", g.after.sigma}};
    }
    seat.peer->send({{"type", "match_end"}, {"match_id", session.match_id}, {"rewards", rewards}, {"rating", rating}});
  }
  spdlog::info("match {} ({}) finished", session.match_id, session.env_id);
}

void ArenaService::reap_finished() {
  std::vector<std::unique_ptr<Session>> done;
  {
    std::lock_guard lock(mu_);
    for (auto it = sessions_.begin(); it != sessions_.end();) {
      if (it->second->finished) {
        done.push_back(std::move(it->second));
        it = sessions_.erase(it);
      } else {
        ++it;
      }
    }
  }
  for (auto& s : done) {
    if (s->thread.joinable()) s->thread.join();
  }
}

Leaderboard ArenaService::leaderboard() const {
  std::lock_guard lock(board_mu_);
  return board_;
}

std::vector<SkillProfile> ArenaService::skill_profiles() const {
  return arena::skill_profiles(leaderboard(), builtin_skill_table());
}

nlohmann::json ArenaService::skill_profiles_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : skill_profiles()) {
    nlohmann::json raw = nlohmann::json::object();
    nlohmann::json norm = nlohmann::json::object();
    for (const auto& [skill, v] : p.raw) raw[std::string(to_string(skill))] = v;
    for (const auto& [skill, v] : p.normalized) norm[std::string(to_string(skill))] = v;
    out.push_back({{"name", p.id}, {"raw", raw}, {"normalized", norm}});
  }
  return out;
}

std::size_t ArenaService::queued() const {
  std::lock_guard lock(mu_);
  return queue_.size();
}

std::size_t ArenaService::live_sessions() const {
  std::lock_guard lock(mu_);
  return static_cast<std::size_t>(
      std::count_if(sessions_.begin(), sessions_.end(), [](const auto& kv) { return !kv.second->finished; }));
}

}  // namespace arena::server
