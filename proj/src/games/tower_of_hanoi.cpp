#include "arena/games/tower_of_hanoi.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {
namespace {

std::optional<int> peg_index(std::string_view s) {
  const auto t = text::lower(s);
  if (t == "a") return 0;
  if (t == "b") return 1;
  if (t == "c") return 2;
  return std::nullopt;
}

constexpr char kPegNames[3] = {'A', 'B', 'C'};

}  // namespace

TowerOfHanoi::TowerOfHanoi(int num_players, std::uint64_t /*seed*/, Config config)
    : Game(tower_of_hanoi_info(), num_players), config_(config) {
  for (int d = config_.disks; d >= 1; --d) pegs_[0].push_back(d);
  broadcast(render(0));
}

LegalActions TowerOfHanoi::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  for (int from = 0; from < 3; ++from) {
    for (int to = 0; to < 3; ++to) {
      const auto& src = pegs_[static_cast<std::size_t>(from)];
      const auto& dst = pegs_[static_cast<std::size_t>(to)];
      if (from == to || src.empty()) continue;
      if (!dst.empty() && dst.back() < src.back()) continue;
      legal.tokens.push_back(std::string(1, kPegNames[from]) + " " + kPegNames[to]);
    }
  }
  return legal;
}

std::string TowerOfHanoi::render(int /*viewer*/) const {
  std::string out;
  for (int p = 0; p < 3; ++p) {
    out += kPegNames[p];
    out += ':';
    for (int d : pegs_[static_cast<std::size_t>(p)]) out += " " + std::to_string(d);
    out += '\n';
  }
  out += "Moves used: " + std::to_string(moves_) + "/" + std::to_string(config_.max_moves) + ".";
  return out;
}

void TowerOfHanoi::do_apply(int /*player*/, std::string_view token) {
  const auto parts = text::split_ws(token);
  if (parts.size() != 2) throw IllegalAction(std::string(token), "expected [from to], e.g. [A C]");
  const auto from = peg_index(parts[0]);
  const auto to = peg_index(parts[1]);
  if (!from || !to) throw IllegalAction(std::string(token), "pegs are A, B and C");
  if (*from == *to) throw IllegalAction(std::string(token), "source and target are the same peg");
  auto& src = pegs_[static_cast<std::size_t>(*from)];
  auto& dst = pegs_[static_cast<std::size_t>(*to)];
  if (src.empty()) throw IllegalAction(std::string(token), "source peg is empty");
  if (!dst.empty() && dst.back() < src.back()) {
    throw IllegalAction(std::string(token), "cannot place a larger disk on a smaller one");
  }
  dst.push_back(src.back());
  src.pop_back();
  ++moves_;
  broadcast(render(0));
  if (static_cast<int>(pegs_[2].size()) == config_.disks) {
    finish_winner(0, "tower moved");
    broadcast("Solved in " + std::to_string(moves_) + " moves.");
    return;
  }
  if (moves_ >= config_.max_moves) {
    broadcast("Out of moves.");
    finish(TerminalKind::Failure, {{0}}, "move limit");
  }
}

const GameInfo& tower_of_hanoi_info() {
  static const GameInfo info{
      .env_id = "TowerOfHanoi-v0",
      .min_players = 1,
      .max_players = 1,
      .turn_limit = 50,
      .draws_possible = false,
      .rules =
          "You are playing Tower of Hanoi with 3 disks on pegs A, B and C. Move the whole stack "
          "from A to C within 50 moves. Move the top disk of one peg onto another with "
          "[from to], e.g. [A C]. A disk may never rest on a smaller disk.",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::LogicalReasoning}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<TowerOfHanoi>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
