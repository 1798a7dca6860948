#pragma once
// Cards, hand classes, and containment profiles for a four-suit deck with r
// ranks. Ranks are 0-based integers; mapping to 2..A is a display concern.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rankforge {

inline constexpr unsigned kNumSuits = 4;
inline constexpr unsigned kHandSize = 7;
inline constexpr unsigned kMinRanks = 5;   // smaller decks make some hand types impossible
inline constexpr unsigned kMaxRanks = 32;  // rank sets are kept in 32-bit masks

// The nine hand classes. The declared order is canonical: it fixes
// serialization and tie-breaking only and carries no frequency meaning.
enum class HandClass : uint8_t {
  HighCard = 0,
  OnePair,
  TwoPair,
  Trips,
  Straight,
  Flush,
  FullHouse,
  Quads,
  StraightFlush,
};

inline constexpr unsigned kNumClasses = 9;
inline constexpr unsigned kNumProfiles = 1u << kNumClasses;

inline constexpr std::array<HandClass, kNumClasses> kCanonicalClasses = {
    HandClass::HighCard, HandClass::OnePair,    HandClass::TwoPair,
    HandClass::Trips,    HandClass::Straight,   HandClass::Flush,
    HandClass::FullHouse, HandClass::Quads,     HandClass::StraightFlush,
};

constexpr unsigned class_index(HandClass c) { return static_cast<unsigned>(c); }
constexpr uint16_t class_bit(HandClass c) { return static_cast<uint16_t>(1u << class_index(c)); }

std::string_view class_name(HandClass c);                         // "HC", "1P", ...
std::optional<HandClass> class_from_name(std::string_view name);  // accepts the same abbreviations

struct Card {
  uint8_t rank = 0;
  uint8_t suit = 0;
  friend bool operator==(const Card&, const Card&) = default;
};

// Deck indices interleave suits: card i has rank i/4 and suit i%4.
constexpr uint32_t card_index(Card c) { return (uint32_t(c.rank) << 2) | c.suit; }
constexpr Card card_from_index(uint32_t i) {
  return Card{static_cast<uint8_t>(i >> 2), static_cast<uint8_t>(i & 3u)};
}
constexpr uint32_t deck_size(unsigned ranks) { return kNumSuits * ranks; }

// An unordered seven-card hand.
struct Hand7 {
  std::array<Card, kHandSize> cards{};
};

// Checks for duplicate cards and out-of-range ranks/suits.
bool valid_hand(const Hand7& hand, unsigned ranks, std::string* why = nullptr);

// ContainmentProfile: the set of classes present in a hand under inclusive
// counting. HighCard is present in every legal profile.
class ClassSet {
 public:
  constexpr ClassSet() = default;
  static constexpr ClassSet from_bits(uint16_t bits) {
    ClassSet s;
    s.bits_ = bits;
    return s;
  }
  constexpr uint16_t bits() const { return bits_; }
  constexpr bool contains(HandClass c) const { return (bits_ >> class_index(c)) & 1u; }
  constexpr void add(HandClass c) { bits_ |= class_bit(c); }
  constexpr unsigned size() const { return static_cast<unsigned>(__builtin_popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  friend constexpr bool operator==(ClassSet a, ClassSet b) { return a.bits_ == b.bits_; }

  // Closure rules every profile produced by classification satisfies.
  constexpr bool closure_ok() const;

  std::string to_string() const;  // "{HC,1P,2P}"

 private:
  uint16_t bits_ = 0;
};

constexpr bool ClassSet::closure_ok() const {
  auto has = [&](HandClass c) { return contains(c); };
  if (!has(HandClass::HighCard)) return false;
  if (has(HandClass::StraightFlush) && !(has(HandClass::Straight) && has(HandClass::Flush)))
    return false;
  if (has(HandClass::Quads) && !(has(HandClass::Trips) && has(HandClass::TwoPair))) return false;
  if (has(HandClass::FullHouse) && !(has(HandClass::Trips) && has(HandClass::TwoPair)))
    return false;
  if (has(HandClass::Trips) && !has(HandClass::OnePair)) return false;
  if (has(HandClass::TwoPair) && !has(HandClass::OnePair)) return false;
  return true;
}

}  // namespace rankforge
