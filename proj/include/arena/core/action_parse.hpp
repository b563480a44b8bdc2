#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace arena {

/// Content of the last well-formed `[...]` group, trimmed, case preserved.
/// Throws NoBracketToken when there is none.
std::string parse_bracketed_action(std::string_view text);

/// Non-throwing variant.
std::optional<std::string> try_parse_bracketed_action(std::string_view text);

}  // namespace arena
