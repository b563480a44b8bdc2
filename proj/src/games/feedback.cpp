#include "arena/games/feedback.hpp"

#include <array>
#include <vector>

#include "arena/core/errors.hpp"

namespace arena {
namespace {

bool is_five_lowercase(std::string_view w) {
  if (w.size() != 5) return false;
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

}  // namespace

std::string wordle_feedback(std::string_view guess, std::string_view secret) {
  if (!is_five_lowercase(guess) || !is_five_lowercase(secret)) {
    throw BadLength("wordle words must be five lowercase letters");
  }
  std::string result(5, 'X');
  std::array<int, 26> remaining{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (guess[i] == secret[i]) {
      result[i] = 'G';
    } else {
      ++remaining[static_cast<std::size_t>(secret[i] - 'a')];
    }
  }
  for (std::size_t i = 0; i < 5; ++i) {
    if (result[i] == 'G') continue;
    auto& left = remaining[static_cast<std::size_t>(guess[i] - 'a')];
    if (left > 0) {
      result[i] = 'Y';
      --left;
    }
  }
  return result;
}

PegScore mastermind_feedback(std::span<const int> guess, std::span<const int> secret,
                             int num_symbols) {
  if (guess.size() != secret.size()) throw BadLength("code lengths differ");
  for (std::size_t i = 0; i < guess.size(); ++i) {
    if (guess[i] < 1 || guess[i] > num_symbols || secret[i] < 1 || secret[i] > num_symbols) {
      throw BadSymbol("symbol outside 1.." + std::to_string(num_symbols));
    }
  }
  PegScore score;
  std::vector<bool> secret_used(secret.size(), false);
  std::vector<bool> guess_used(guess.size(), false);
  for (std::size_t i = 0; i < guess.size(); ++i) {
    if (guess[i] == secret[i]) {
      ++score.black;
      secret_used[i] = guess_used[i] = true;
    }
  }
  for (std::size_t i = 0; i < guess.size(); ++i) {
    if (guess_used[i]) continue;
    for (std::size_t j = 0; j < secret.size(); ++j) {
      if (!secret_used[j] && guess[i] == secret[j]) {
        ++score.white;
        secret_used[j] = true;
        break;
      }
    }
  }
  return score;
}

}  // namespace arena
