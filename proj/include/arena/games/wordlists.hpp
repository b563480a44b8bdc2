#pragma once

#include <span>
#include <string>

namespace arena {

/// Bundled five-letter list (Wordle), sorted and lowercase.
std::span<const std::string> five_letter_words();

/// Bundled general word list (Hangman, DontSayIt), sorted and lowercase.
std::span<const std::string> general_words();

bool is_five_letter_word(std::string_view word);

}  // namespace arena
