#pragma once
// Direct containment classification of seven-card hands via per-suit rank
// masks: multiplicity masks for pairs/trips/quads, a bit-scan for straights.

#include <bit>
#include <cstdint>
#include <span>

#include "rankforge/cards.hpp"

namespace rankforge {

// One 32-bit rank mask per suit; bit k set means rank k of that suit is held.
struct SuitMasks {
  std::array<uint32_t, kNumSuits> m{};
};

// Wheel window: ranks {0,1,2,3} plus the top rank playing low.
constexpr uint32_t wheel_mask(unsigned ranks) { return 0xFu | (1u << (ranks - 1)); }

constexpr bool mask_has_straight(uint32_t m, uint32_t wheel) {
  const uint32_t run5 = m & (m >> 1) & (m >> 2) & (m >> 3) & (m >> 4);
  return run5 != 0 || (m & wheel) == wheel;
}

// Profile of a hand given its four suit masks. Bit layout follows HandClass.
constexpr uint16_t classify_suit_masks(uint32_t a, uint32_t b, uint32_t c, uint32_t d,
                                       uint32_t wheel) {
  const uint32_t ab_both = a & b, ab_any = a | b;
  const uint32_t cd_both = c & d, cd_any = c | d;
  const uint32_t any = ab_any | cd_any;
  // Ranks held in >=2, >=3, all 4 suits.
  const uint32_t ge2 = ab_both | cd_both | (ab_any & cd_any);
  const uint32_t ge3 = (ab_both & cd_any) | (cd_both & ab_any);
  const uint32_t ge4 = ab_both & cd_both;
  const uint32_t paired_multi = ge2 & (ge2 - 1);  // >=2 distinct paired ranks

  uint16_t f = class_bit(HandClass::HighCard);
  if (ge2) f |= class_bit(HandClass::OnePair);
  // A quad yields two one-rank pairs, so it counts as two pair.
  if (paired_multi | ge4) f |= class_bit(HandClass::TwoPair);
  if (ge3) f |= class_bit(HandClass::Trips);
  if (ge3 && paired_multi) f |= class_bit(HandClass::FullHouse);
  if (ge4) f |= class_bit(HandClass::Quads);
  if (mask_has_straight(any, wheel)) f |= class_bit(HandClass::Straight);
  bool fl = false, sf = false;
  for (uint32_t s : {a, b, c, d}) {
    fl |= std::popcount(s) >= 5;
    sf |= mask_has_straight(s, wheel);
  }
  if (fl) f |= class_bit(HandClass::Flush);
  if (sf) f |= class_bit(HandClass::StraightFlush);
  return f;
}

constexpr uint16_t classify_suit_masks(const SuitMasks& s, uint32_t wheel) {
  return classify_suit_masks(s.m[0], s.m[1], s.m[2], s.m[3], wheel);
}

SuitMasks suit_masks(const Hand7& hand);

// ContainmentProfile of a seven-card hand. Throws std::invalid_argument on an
// invalid hand or ranks outside [kMinRanks, kMaxRanks].
ClassSet classify(const Hand7& hand, unsigned ranks);

// True iff the five ranks form a consecutive run or the wheel window.
// Throws std::invalid_argument unless given exactly five distinct ranks in
// [0, ranks).
bool is_straight_ranks(std::span<const int> ranks5, unsigned ranks);

}  // namespace rankforge
