#include "rankforge/cards.hpp"

#include <algorithm>

namespace rankforge {

namespace {
constexpr std::array<std::string_view, kNumClasses> kNames = {
    "HC", "1P", "2P", "3X", "ST", "FL", "FH", "4X", "SF"};
}

std::string_view class_name(HandClass c) { return kNames[class_index(c)]; }

std::optional<HandClass> class_from_name(std::string_view name) {
  for (unsigned i = 0; i < kNumClasses; ++i) {
    if (kNames[i] == name) return static_cast<HandClass>(i);
  }
  return std::nullopt;
}

bool valid_hand(const Hand7& hand, unsigned ranks, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (ranks < kMinRanks || ranks > kMaxRanks) return fail("rank count out of range");
  std::array<uint32_t, kHandSize> idx{};
  for (unsigned i = 0; i < kHandSize; ++i) {
    const Card c = hand.cards[i];
    if (c.rank >= ranks) return fail("card rank out of range");
    if (c.suit >= kNumSuits) return fail("card suit out of range");
    idx[i] = card_index(c);
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return fail("duplicate card");
  return true;
}

std::string ClassSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (HandClass c : kCanonicalClasses) {
    if (!contains(c)) continue;
    if (!first) out += ",";
    out += class_name(c);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rankforge
