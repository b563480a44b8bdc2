#pragma once

#include <span>
#include <string>
#include <string_view>

namespace arena {

/// Wordle colouring over {G, Y, X}. Greens consume their letter first; a
/// yellow is only given while unconsumed copies of the letter remain.
/// Throws BadLength unless both words have five lowercase letters.
std::string wordle_feedback(std::string_view guess, std::string_view secret);

struct PegScore {
  int black = 0;  // right symbol, right position
  int white = 0;  // right symbol, wrong position
  bool operator==(const PegScore&) const = default;
};

/// Throws BadLength on length mismatch and BadSymbol for symbols outside
/// [1, num_symbols].
PegScore mastermind_feedback(std::span<const int> guess, std::span<const int> secret,
                             int num_symbols = 6);

}  // namespace arena
