#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arena::text {

std::string lower(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on runs of whitespace.
std::vector<std::string> split_ws(std::string_view s);

/// Lowercased words with punctuation stripped; digits and apostrophes kept.
std::vector<std::string> words(std::string_view s);

/// Whole-string decimal integer (optional leading '-').
std::optional<long long> parse_int(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace arena::text
