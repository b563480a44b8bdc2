#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "arena/agents/agent.hpp"
#include "arena/server/service.hpp"

namespace arena::server {

/// Blocking NDJSON client for the arena wire protocol.
class ArenaClient {
 public:
  ArenaClient(const std::string& host, unsigned short port);
  ~ArenaClient();

  ArenaClient(const ArenaClient&) = delete;
  ArenaClient& operator=(const ArenaClient&) = delete;

  void send(const nlohmann::json& message);
  /// Next server message. Throws TimeoutError if none arrives in time.
  nlohmann::json receive(std::chrono::milliseconds timeout);
  void close();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct OnlineResult {
  std::string match_id;
  std::string env_id;
  int player_id = -1;
  nlohmann::json match_end;
  std::vector<std::string> observations;
};

/// Registers, enqueues and plays exactly one match with `agent`.
/// Protocol errors from the server are thrown as ArenaError.
OnlineResult play_online(ArenaClient& client, Agent& agent, const Registration& hello,
                         const std::vector<std::string>& env_ids,
                         std::chrono::milliseconds timeout = std::chrono::seconds(60));

}  // namespace arena::server
