#include "arena/server/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <fstream>

#include <spdlog/spdlog.h>

#include "arena/core/errors.hpp"

namespace arena::server {
namespace {

void write_all(int fd, const std::string& data, const std::filesystem::path& path) {
  std::size_t done = 0;
  while (done < data.size()) {
    const auto n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) throw ArenaError("write failed: " + path.string());
    done += static_cast<std::size_t>(n);
  }
}

}  // namespace

MatchStore::MatchStore(std::filesystem::path dir)
    : dir_(std::move(dir)), matches_(dir_ / "matches.jsonl"), leaderboard_(dir_ / "leaderboard.json") {
  std::filesystem::create_directories(dir_);
}

void MatchStore::append(const MatchRecord& record) {
  const int fd = ::open(matches_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw ArenaError("cannot open " + matches_.string());
  try {
    write_all(fd, to_json(record).dump() + "\n", matches_);
    ::fsync(fd);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
}

void MatchStore::write_leaderboard(const Leaderboard& board) const {
  const auto tmp = leaderboard_.string() + ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) throw ArenaError("cannot open " + tmp);
  try {
    write_all(fd, board.to_json().dump(2) + "\n", tmp);
    ::fsync(fd);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
  std::filesystem::rename(tmp, leaderboard_);
}

std::vector<MatchRecord> MatchStore::load_records() const {
  std::vector<MatchRecord> records;
  std::ifstream in(matches_);
  if (!in) return records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const bool last = in.peek() == std::char_traits<char>::eof();
    try {
      records.push_back(match_record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      if (!last) throw ArenaError(matches_.string() + ":" + std::to_string(line_no) + ": " + e.what());
      spdlog::warn("skipping torn record at {}:{}", matches_.string(), line_no);
    }
  }
  return records;
}

Leaderboard MatchStore::recover(const RatingConfig& config) const {
  Leaderboard board(config);
  for (auto& record : load_records()) rate_match(board, record);
  write_leaderboard(board);
  return board;
}

}  // namespace arena::server
