#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "arena/agents/relay.hpp"
#include "arena/rating/leaderboard.hpp"
#include "arena/rating/skill_profile.hpp"
#include "arena/server/config.hpp"
#include "arena/server/matchmaker.hpp"
#include "arena/server/store.hpp"

namespace arena::server {

/// One client connection as seen by the service. `send` must be callable
/// from any thread and must not block on the network.
class Peer {
 public:
  virtual ~Peer() = default;
  virtual void send(const nlohmann::json& message) = 0;
};

struct Registration {
  std::string model_name;
  std::string model_description;
  std::string email;
  bool human = false;
};

/// Protocol logic shared by every transport: registration, queues,
/// matchmaking sweeps, session threads, and persistence.
class ArenaService {
 public:
  explicit ArenaService(ServerConfig config);
  ~ArenaService();

  ArenaService(const ArenaService&) = delete;
  ArenaService& operator=(const ArenaService&) = delete;

  /// Rebuilds ratings from the match log, queues house agents and starts
  /// the periodic sweep.
  void start();
  /// Cancels live sessions (unrecorded) and joins every thread.
  void stop();

  /// One inbound protocol message (a single JSON document).
  void handle(const std::shared_ptr<Peer>& peer, std::string_view text);
  void disconnect(const std::shared_ptr<Peer>& peer);

  /// Runs one matchmaking pass immediately.
  void sweep();

  Leaderboard leaderboard() const;
  std::vector<SkillProfile> skill_profiles() const;
  nlohmann::json skill_profiles_json() const;

  std::size_t queued() const;
  std::size_t live_sessions() const;
  std::size_t completed_matches() const { return completed_.load(); }

  const ServerConfig& config() const { return config_; }
  const MatchStore& store() const { return store_; }

 private:
  struct Conn {
    std::shared_ptr<Peer> peer;
    std::optional<Registration> reg;
    bool queued = false;
    std::string match_id;
    std::shared_ptr<RelayChannel> channel;
  };
  struct Seat {
    std::string participant;
    std::string rating_id;
    bool human = false;
    std::shared_ptr<Peer> peer;  // null for house agents
    std::shared_ptr<RelayChannel> channel;
  };
  struct Session {
    std::string match_id;
    std::string env_id;
    std::uint64_t seed = 0;
    std::vector<Seat> seats;
    std::thread thread;
    std::atomic<bool> finished{false};
  };

  void on_hello(Conn& conn, const nlohmann::json& msg);
  void on_enqueue(Conn& conn, const nlohmann::json& msg);
  void on_action(Conn& conn, const nlohmann::json& msg);

  static std::string participant_key(const Registration& reg);
  double score_of(const std::string& rating_id);
  void queue_house_agent(const std::string& spec);
  /// Requires mu_.
  void requeue_house(const std::string& participant);
  void start_session(const MatchGroup& group);
  void run_session(Session& session);
  void finish_session(Session& session, MatchRecord record);
  void reap_finished();
  void sweep_loop();

  ServerConfig config_;
  MatchStore store_;
  std::uint64_t server_seed_;

  mutable std::mutex mu_;
  std::map<const Peer*, Conn> conns_;
  std::map<std::string, Registration, std::less<>> registrations_;
  std::map<std::string, const Peer*, std::less<>> ticket_owner_;
  std::vector<Ticket> queue_;
  std::uint64_t next_order_ = 0;
  std::uint64_t next_match_ = 0;
  std::map<std::string, std::unique_ptr<Session>> sessions_;
  /// house participant key -> agent spec
  std::map<std::string, std::string> house_specs_;

  mutable std::mutex board_mu_;
  Leaderboard board_;

  std::atomic<std::size_t> completed_{0};
  std::mutex sweep_mu_;
  std::condition_variable sweep_cv_;
  std::atomic<bool> stopping_{false};
  bool started_ = false;
  std::thread sweeper_;
};

}  // namespace arena::server
