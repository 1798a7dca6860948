#include "rankforge/classify.hpp"

#include <stdexcept>

namespace rankforge {

SuitMasks suit_masks(const Hand7& hand) {
  SuitMasks s;
  for (const Card& c : hand.cards) s.m[c.suit] |= 1u << c.rank;
  return s;
}

ClassSet classify(const Hand7& hand, unsigned ranks) {
  std::string why;
  if (!valid_hand(hand, ranks, &why)) throw std::invalid_argument("classify: " + why);
  return ClassSet::from_bits(classify_suit_masks(suit_masks(hand), wheel_mask(ranks)));
}

bool is_straight_ranks(std::span<const int> ranks5, unsigned ranks) {
  if (ranks < kMinRanks || ranks > kMaxRanks)
    throw std::invalid_argument("is_straight_ranks: rank count out of range");
  if (ranks5.size() != 5) throw std::invalid_argument("is_straight_ranks: need exactly 5 ranks");
  uint32_t mask = 0;
  for (int v : ranks5) {
    if (v < 0 || static_cast<unsigned>(v) >= ranks)
      throw std::invalid_argument("is_straight_ranks: rank out of range");
    const uint32_t bit = 1u << v;
    if (mask & bit) throw std::invalid_argument("is_straight_ranks: duplicate rank");
    mask |= bit;
  }
  return mask_has_straight(mask, wheel_mask(ranks));
}

}  // namespace rankforge
