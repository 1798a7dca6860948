#pragma once
// Ranking derivation and analysis: frequency rankings over r, breakpoint
// segmentation, polynomial stability certificates, showdown rankings, the
// recursive showdown iteration, and minimal-agreement searches.

#include <optional>
#include <vector>

#include "rankforge/closed_form.hpp"
#include "rankforge/enumerate.hpp"
#include "rankforge/exact.hpp"
#include "rankforge/ranking.hpp"

namespace rankforge {

// All closed forms (SF needs 6, ST needs 8) hold from here on; smaller r
// falls back to enumeration.
inline constexpr unsigned kAllFormulasValidR = 8;

// Inclusive counts for all nine classes: closed forms from
// kAllFormulasValidR, an enumeration sweep below.
std::array<Int, kNumClasses> inclusive_counts(unsigned r, Enumerator& en);

// Ranking by inclusive frequency: rarer classes higher, exact ties grouped.
Ranking frequency_ranking(unsigned r, Enumerator& en);

struct RankingSegment {
  unsigned r_low = 0;
  unsigned r_high = 0;
  Ranking ranking;
};

struct BreakpointReport {
  unsigned r_min = 0;
  unsigned r_max = 0;
  std::vector<RankingSegment> segments;
  std::vector<unsigned> starts() const;
};

// Exact segmentation of [r_min, r_max] by frequency-ranking equality.
BreakpointReport scan_breakpoints(unsigned r_min, unsigned r_max, Enumerator& en);

struct PairCertificate {
  HandClass lower;   // expected more frequent from from_r on
  HandClass higher;  // expected rarer
  SignCertificate cert;
  bool ok() const { return cert.ok && cert.sign > 0; }
};

struct StabilityReport {
  unsigned from_r = 0;
  Ranking ranking;        // frequency ranking at from_r
  bool hc_most_common = false;  // HighCard dominance checked numerically
  std::vector<PairCertificate> pairs;
  bool ok() const;
};

// Certifies that the frequency ranking at from_r never changes again: for
// each adjacent pair of non-HighCard classes, the difference of their
// frequency polynomials keeps one sign on [from_r, infinity). Requires
// from_r >= kAllFormulasValidR.
StabilityReport certify_stability(unsigned from_r);

// Same machinery restricted to one class pair (ordered by the ranking at
// from_r). The classes need not be adjacent.
StabilityReport certify_stability_pair(unsigned from_r, HandClass a, HandClass b);

// Ranking induced by showdown counts under `base`.
Ranking showdown_ranking(unsigned r, const Ranking& base, Enumerator& en);

struct IterationStep {
  Ranking ranking;
};

struct IterationResult {
  enum class Kind { Fixpoint, Cycle, NoConvergence };
  Kind kind = Kind::NoConvergence;
  // trajectory[0] is the base ranking; each next entry is the showdown
  // ranking of its predecessor.
  std::vector<Ranking> trajectory;
  unsigned cycle_start = 0;  // index into trajectory (Fixpoint/Cycle)
  unsigned cycle_length = 0; // 1 for a fixpoint
};

// Recursive showdown iteration from `base`. Cycles longer than 2 are not
// expected; they are still detected and reported.
IterationResult iterate_showdown(unsigned r, const Ranking& base, unsigned max_iter,
                                 Enumerator& en);

inline constexpr unsigned kDefaultMaxIterations = 32;

// Smallest r <= r_max whose showdown ranking (w.r.t. its frequency ranking)
// equals the frequency ranking; include_hc=false ignores HighCard's position.
std::optional<unsigned> find_min_agreement(bool include_hc, unsigned r_max, Enumerator& en);

}  // namespace rankforge
