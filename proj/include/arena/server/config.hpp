#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "arena/rating/trueskill.hpp"

namespace arena::server {

struct ServerConfig {
  std::string host = "127.0.0.1";
  /// Newline-delimited JSON over TCP; 0 picks a free port.
  unsigned short port = 7070;
  /// WebSocket and HTTP GET (leaderboard, skill profiles); 0 picks a free port.
  unsigned short http_port = 7071;
  bool enable_http = true;
  std::filesystem::path data_dir = "arena-data";
  std::chrono::milliseconds sweep_interval{1000};
  std::chrono::milliseconds human_clock{120'000};
  std::chrono::milliseconds model_clock{60'000};
  std::chrono::milliseconds disconnect_grace{5'000};
  /// Tickets waiting longer than this are matched first, oldest first.
  std::chrono::milliseconds starvation_age{30'000};
  /// Agent specs the server seats itself, always queued for every
  /// multi-player env.
  std::vector<std::string> house_agents;
  RatingConfig rating;
};

/// Reads an INI file ([server], [clocks], [rating], [house] sections), then
/// applies ARENA_* environment overrides. An empty path skips the file.
/// Throws ArenaError on unreadable files or bad values.
ServerConfig load_server_config(const std::filesystem::path& path);

/// ARENA_HOST, ARENA_PORT, ARENA_HTTP_PORT, ARENA_DATA_DIR,
/// ARENA_SWEEP_INTERVAL_MS, ARENA_HUMAN_CLOCK_MS, ARENA_MODEL_CLOCK_MS,
/// ARENA_DISCONNECT_GRACE_MS, ARENA_HOUSE_AGENTS (';'-separated).
void apply_env_overrides(ServerConfig& config);

}  // namespace arena::server
