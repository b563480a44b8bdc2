#pragma once

#include <filesystem>
#include <vector>

#include "arena/rating/leaderboard.hpp"
#include "arena/tools/match_record.hpp"

namespace arena::server {

/// matches.jsonl (append-only, one MatchRecord per line) plus the
/// leaderboard.json snapshot derived from it.
class MatchStore {
 public:
  explicit MatchStore(std::filesystem::path dir);

  const std::filesystem::path& matches_path() const { return matches_; }
  const std::filesystem::path& leaderboard_path() const { return leaderboard_; }

  /// Appends one line and flushes it to disk.
  void append(const MatchRecord& record);

  /// Writes the snapshot to a temporary file and renames it into place.
  void write_leaderboard(const Leaderboard& board) const;

  /// Every complete record in log order; a torn final line is skipped.
  std::vector<MatchRecord> load_records() const;

  /// Rebuilds ratings by replaying the whole log and rewrites the snapshot.
  Leaderboard recover(const RatingConfig& config) const;

 private:
  std::filesystem::path dir_;
  std::filesystem::path matches_;
  std::filesystem::path leaderboard_;
};

}  // namespace arena::server
