#pragma once

#include <optional>
#include <string>
#include <vector>

namespace arena {

/// Sender index used for messages emitted by the environment itself.
inline constexpr int kGameSender = -1;

/// Who may see a message: everyone, or an explicit non-empty set of seats.
class Visibility {
 public:
  static Visibility broadcast() { return Visibility{}; }
  static Visibility only(std::vector<int> seats);
  static Visibility only(int seat) { return only(std::vector<int>{seat}); }

  bool is_broadcast() const { return !seats_.has_value(); }
  bool includes(int viewer) const;
  const std::vector<int>& seats() const;  // precondition: !is_broadcast()

  bool operator==(const Visibility&) const = default;

 private:
  std::optional<std::vector<int>> seats_;
};

struct Message {
  int sender = kGameSender;
  std::string content;
  Visibility visibility;

  bool operator==(const Message&) const = default;
};

/// Everything one viewer may see, in emission order. `text` is the rendering
/// handed to an agent; wrappers rewrite it.
struct Observation {
  int viewer = 0;
  std::vector<Message> messages;
  std::string text;

  bool operator==(const Observation&) const = default;
};

/// "[GAME]" or "[Player k]".
std::string sender_label(int sender);

}  // namespace arena
