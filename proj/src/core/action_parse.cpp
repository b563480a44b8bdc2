#include "arena/core/action_parse.hpp"

#include "arena/core/errors.hpp"

namespace arena {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<std::string> try_parse_bracketed_action(std::string_view text) {
  std::optional<std::string> last;
  std::size_t open = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') {
      open = i;
    } else if (text[i] == ']' && open != std::string_view::npos) {
      const auto inner = trim(text.substr(open + 1, i - open - 1));
      if (!inner.empty()) last = std::string(inner);
      open = std::string_view::npos;
    }
  }
  return last;
}

std::string parse_bracketed_action(std::string_view text) {
  auto token = try_parse_bracketed_action(text);
  if (!token) throw NoBracketToken();
  return *std::move(token);
}

}  // namespace arena
