#pragma once
// Rankings over the nine hand classes: a strict total order with explicit
// tie annotations. Rarer hands rank higher. Two rankings are considered
// equal when they induce the same strict comparisons; the internal order of
// a tie group is canonical-declaration order and carries no meaning.

#include <span>
#include <string>
#include <vector>

#include "rankforge/cards.hpp"
#include "rankforge/exact.hpp"

namespace rankforge {

struct Ranking {
  // All nine classes, lowest (most frequent) first; tie groups contiguous.
  std::array<HandClass, kNumClasses> order{};
  // Height per class index; tied classes share a level, levels are dense
  // starting at 0.
  std::array<uint8_t, kNumClasses> level{};
  // Tie groups of size >= 2, each in canonical declaration order.
  std::vector<std::vector<HandClass>> ties;

  // Ranking by descending count: the rarest class ends up on top. Exact
  // count ties become tie groups.
  static Ranking from_counts(std::span<const Int, kNumClasses> counts);

  // Ranking from explicit groups, lowest first; groups of size >= 2 are ties.
  // Throws std::invalid_argument unless the groups cover all nine classes
  // exactly once.
  static Ranking from_groups(const std::vector<std::vector<HandClass>>& groups);

  bool has_ties() const { return !ties.empty(); }

  // Equality of induced strict comparisons.
  bool same_order(const Ranking& o) const { return level == o.level; }
  // Same, restricted to the eight classes other than `skip`.
  bool same_order_excluding(const Ranking& o, HandClass skip) const;

  // Highest-ranked class present in the profile. A ranking tie among the
  // maximal classes resolves to the latest class in canonical declaration
  // order; `tied` reports that a tie occurred.
  HandClass best(ClassSet profile, bool* tied = nullptr) const;

  // One class per line, lowest first; tie groups joined by '=' on one line.
  std::string serialize() const;
  static Ranking parse(const std::string& text);  // throws std::invalid_argument
};

}  // namespace rankforge
