#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace arena::server {

struct Ticket {
  /// Queue key: one live ticket per participant.
  std::string participant;
  /// Leaderboard id; tickets sharing one (e.g. two humans) never meet.
  std::string rating_id;
  std::vector<std::string> env_ids;
  /// Enqueue sequence number; lower is older.
  std::uint64_t order = 0;
  std::chrono::steady_clock::time_point enqueued{};
  /// Global conservative score at enqueue time.
  double score = 0.0;
  /// Server-seated agent; two house tickets are never grouped.
  bool house = false;
};

struct MatchGroup {
  std::string env_id;
  /// Seat order.
  std::vector<Ticket> tickets;
};

/// One pass over the waiting tickets. Tickets older than `starvation_age`
/// anchor first (oldest first) and take their closest compatible partners;
/// the rest are grouped greedily by smallest score distance, older pairs
/// winning ties. Group size is the env's minimum (at least two). Matched
/// tickets are removed from `queue`.
std::vector<MatchGroup> matchmake_sweep(std::vector<Ticket>& queue, std::chrono::steady_clock::time_point now,
                                        std::chrono::milliseconds starvation_age);

}  // namespace arena::server
