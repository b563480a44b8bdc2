#pragma once

#include <memory>
#include <thread>

#include "arena/server/service.hpp"

namespace arena::server {

/// Network front end for an ArenaService: newline-delimited JSON over TCP,
/// and on a second port WebSocket (one JSON document per text frame) plus
/// HTTP GET for /leaderboard.json, /leaderboard.csv, /skill-profiles and
/// /skill-profiles.csv.
class ArenaServer {
 public:
  explicit ArenaServer(ServerConfig config);
  ~ArenaServer();

  ArenaServer(const ArenaServer&) = delete;
  ArenaServer& operator=(const ArenaServer&) = delete;

  /// Binds both ports and starts the network thread and the service.
  void start();
  void stop();

  /// Bound ports (useful when the config asked for port 0).
  unsigned short tcp_port() const;
  unsigned short http_port() const;

  ArenaService& service() { return service_; }

 private:
  struct Impl;
  ArenaService service_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace arena::server
