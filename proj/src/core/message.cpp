#include "arena/core/message.hpp"

#include <algorithm>
#include <stdexcept>

namespace arena {

Visibility Visibility::only(std::vector<int> seats) {
  if (seats.empty()) throw std::logic_error("explicit visibility needs at least one seat");
  std::sort(seats.begin(), seats.end());
  seats.erase(std::unique(seats.begin(), seats.end()), seats.end());
  Visibility v;
  v.seats_ = std::move(seats);
  return v;
}

bool Visibility::includes(int viewer) const {
  return !seats_ || std::binary_search(seats_->begin(), seats_->end(), viewer);
}

const std::vector<int>& Visibility::seats() const {
  if (!seats_) throw std::logic_error("broadcast visibility has no seat list");
  return *seats_;
}

std::string sender_label(int sender) {
  if (sender == kGameSender) return "[GAME]";
  return "[Player " + std::to_string(sender) + "]";
}

}  // namespace arena
