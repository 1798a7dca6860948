#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rankforge/classify.hpp"

using namespace rankforge;

namespace {

Hand7 hand(std::initializer_list<Card> cards) {
  Hand7 h;
  std::copy(cards.begin(), cards.end(), h.cards.begin());
  return h;
}

constexpr uint8_t kSpade = 0, kHeart = 1, kDiamond = 2, kClub = 3;

}  // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("straight windows include the wheel") {
  CHECK(is_straight_ranks(std::vector<int>{8, 9, 10, 11, 12}, 13));
  CHECK(is_straight_ranks(std::vector<int>{12, 0, 1, 2, 3}, 13));  // wheel
  CHECK_FALSE(is_straight_ranks(std::vector<int>{0, 1, 2, 3, 5}, 13));
  // Top rank plays low only as part of the wheel window.
  CHECK_FALSE(is_straight_ranks(std::vector<int>{11, 12, 0, 1, 2}, 13));
  CHECK(is_straight_ranks(std::vector<int>{4, 0, 1, 2, 3}, 5));

  CHECK_THROWS_AS((void)is_straight_ranks(std::vector<int>{0, 1, 2, 3, 13}, 13),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)is_straight_ranks(std::vector<int>{0, 1, 2, 3}, 13),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)is_straight_ranks(std::vector<int>{0, 1, 2, 3, 3}, 13),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)is_straight_ranks(std::vector<int>{0, 1, 2, 3, 4}, 4),
                  std::invalid_argument);
}

TEST_CASE("quads imply trips and two pair") {
  // Footnote rule: a bare quad still contains a (degenerate) two pair.
  const Hand7 h = hand({{2, kSpade},
                        {2, kHeart},
                        {2, kDiamond},
                        {2, kClub},
                        {5, kSpade},
                        {7, kHeart},
                        {9, kDiamond}});
  const ClassSet s = classify(h, 13);
  CHECK(s.contains(HandClass::HighCard));
  CHECK(s.contains(HandClass::OnePair));
  CHECK(s.contains(HandClass::TwoPair));
  CHECK(s.contains(HandClass::Trips));
  CHECK(s.contains(HandClass::Quads));
  CHECK_FALSE(s.contains(HandClass::FullHouse));
  CHECK_FALSE(s.contains(HandClass::Straight));
  CHECK(s.size() == 5);
}

TEST_CASE("straight flush pulls in straight and flush") {
  const Hand7 h = hand({{3, kSpade},
                        {4, kSpade},
                        {5, kSpade},
                        {6, kSpade},
                        {7, kSpade},
                        {9, kHeart},
                        {11, kDiamond}});
  const ClassSet s = classify(h, 13);
  CHECK(s == ClassSet::from_bits(class_bit(HandClass::HighCard) | class_bit(HandClass::Straight) |
                                 class_bit(HandClass::Flush) |
                                 class_bit(HandClass::StraightFlush)));
}

TEST_CASE("five distinct ranks in one suit at r=5 is always a straight flush") {
  // Any five distinct ranks out of five form a run; flush implies SF here.
  const Hand7 h = hand({{0, kHeart},
                        {1, kHeart},
                        {2, kHeart},
                        {3, kHeart},
                        {4, kHeart},
                        {0, kSpade},
                        {2, kClub}});
  const ClassSet s = classify(h, 5);
  CHECK(s.contains(HandClass::Flush));
  CHECK(s.contains(HandClass::StraightFlush));
}

TEST_CASE("full house needs a trip plus a second paired rank") {
  const Hand7 with = hand({{4, kSpade},
                           {4, kHeart},
                           {4, kDiamond},
                           {9, kSpade},
                           {9, kClub},
                           {2, kHeart},
                           {11, kDiamond}});
  CHECK(classify(with, 13).contains(HandClass::FullHouse));

  const Hand7 without = hand({{4, kSpade},
                              {4, kHeart},
                              {4, kDiamond},
                              {9, kSpade},
                              {8, kClub},
                              {2, kHeart},
                              {11, kDiamond}});
  const ClassSet s = classify(without, 13);
  CHECK(s.contains(HandClass::Trips));
  CHECK_FALSE(s.contains(HandClass::FullHouse));
  CHECK_FALSE(s.contains(HandClass::TwoPair));
}

TEST_CASE("input validation") {
  Hand7 dup = hand({{2, kSpade},
                    {2, kSpade},
                    {3, kHeart},
                    {4, kHeart},
                    {5, kHeart},
                    {6, kHeart},
                    {7, kHeart}});
  CHECK_THROWS_AS((void)classify(dup, 13), std::invalid_argument);
  Hand7 high = hand({{12, kSpade},
                     {1, kSpade},
                     {3, kHeart},
                     {4, kHeart},
                     {5, kHeart},
                     {6, kHeart},
                     {7, kHeart}});
  CHECK_THROWS_AS((void)classify(high, 12), std::invalid_argument);  // rank 12 needs r >= 13
  CHECK_THROWS_AS((void)classify(high, 4), std::invalid_argument);
}

TEST_CASE("matches the literal five-card-subset oracle on random hands") {
  std::mt19937_64 rng(20240901);
  for (unsigned r = 5; r <= 14; ++r) {
    for (int i = 0; i < 100000; ++i) {
      const Hand7 h = testing::random_hand(rng, r);
      const ClassSet direct = classify(h, r);
      const ClassSet subsets = testing::classify_by_subsets(h, r);
      REQUIRE(direct == subsets);
    }
  }
}

TEST_CASE("profiles honor closure rules and suit-permutation invariance") {
  std::mt19937_64 rng(7);
  for (unsigned r : {5u, 9u, 13u, 23u}) {
    for (int i = 0; i < 5000; ++i) {
      const Hand7 h = testing::random_hand(rng, r);
      const ClassSet s = classify(h, r);
      REQUIRE(s.closure_ok());

      // Relabeling suits never changes the profile.
      std::array<uint8_t, kNumSuits> perm{0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      Hand7 relabeled = h;
      for (Card& c : relabeled.cards) c.suit = perm[c.suit];
      REQUIRE(classify(relabeled, r) == s);
    }
  }
}

TEST_CASE("quads exclude straight flushes in seven cards") {
  // Exhaustive small-r sweeps: quads leave at most four same-suit cards.
  for (unsigned r : {5u, 6u}) {
    const uint32_t deck = deck_size(r);
    uint32_t c[7];
    for (c[0] = 0; c[0] < deck; ++c[0])
      for (c[1] = c[0] + 1; c[1] < deck; ++c[1])
        for (c[2] = c[1] + 1; c[2] < deck; ++c[2])
          for (c[3] = c[2] + 1; c[3] < deck; ++c[3])
            for (c[4] = c[3] + 1; c[4] < deck; ++c[4])
              for (c[5] = c[4] + 1; c[5] < deck; ++c[5])
                for (c[6] = c[5] + 1; c[6] < deck; ++c[6]) {
                  Hand7 h;
                  for (int i = 0; i < 7; ++i) h.cards[i] = card_from_index(c[i]);
                  const ClassSet s = classify(h, r);
                  REQUIRE(s.closure_ok());
                  if (s.contains(HandClass::Quads))
                    REQUIRE_FALSE(s.contains(HandClass::StraightFlush));
                }
  }
}

TEST_SUITE_END();
