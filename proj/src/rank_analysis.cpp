#include "rankforge/rank_analysis.hpp"

#include <stdexcept>
#include <string>

namespace rankforge {

std::array<Int, kNumClasses> inclusive_counts(unsigned r, Enumerator& en) {
  std::array<Int, kNumClasses> counts;
  if (r >= kAllFormulasValidR) {
    for (unsigned c = 0; c < kNumClasses; ++c)
      counts[c] = freq_closed(static_cast<HandClass>(c), r);
  } else {
    counts = en.inclusive(r).counts;
  }
  return counts;
}

Ranking frequency_ranking(unsigned r, Enumerator& en) {
  const auto counts = inclusive_counts(r, en);
  return Ranking::from_counts(counts);
}

std::vector<unsigned> BreakpointReport::starts() const {
  std::vector<unsigned> s;
  s.reserve(segments.size());
  for (const auto& seg : segments) s.push_back(seg.r_low);
  return s;
}

BreakpointReport scan_breakpoints(unsigned r_min, unsigned r_max, Enumerator& en) {
  if (r_min < kMinRanks || r_min > r_max)
    throw std::invalid_argument("scan_breakpoints: need 5 <= r_min <= r_max");
  BreakpointReport report;
  report.r_min = r_min;
  report.r_max = r_max;
  for (unsigned r = r_min; r <= r_max; ++r) {
    Ranking rk = frequency_ranking(r, en);
    if (!report.segments.empty() && report.segments.back().ranking.same_order(rk)) {
      report.segments.back().r_high = r;
    } else {
      report.segments.push_back(RankingSegment{r, r, std::move(rk)});
    }
  }
  return report;
}

bool StabilityReport::ok() const {
  if (!hc_most_common) return false;
  for (const auto& p : pairs) {
    if (!p.ok()) return false;
  }
  return true;
}

namespace {

PairCertificate certify_pair(HandClass lower, HandClass higher, unsigned from_r) {
  // Lower rank means more frequent: the count difference must stay positive.
  const Poly diff = freq_formula(lower).poly - freq_formula(higher).poly;
  return PairCertificate{lower, higher, certify_sign_permanence(diff, Int(from_r))};
}

// HighCard's count is the full total; confirm it strictly dominates the most
// common non-HighCard class at from_r so excluding it from the pair list is
// sound.
bool hc_dominates(const Ranking& rk, unsigned from_r) {
  const HandClass runner_up = rk.order[0] == HandClass::HighCard ? rk.order[1] : rk.order[0];
  const PairCertificate pc = certify_pair(HandClass::HighCard, runner_up, from_r);
  return pc.ok();
}

Enumerator& scratch_enumerator() {
  static Enumerator en;  // frequency rankings at r >= 8 never enumerate
  return en;
}

}  // namespace

StabilityReport certify_stability(unsigned from_r) {
  if (from_r < kAllFormulasValidR)
    throw std::invalid_argument("certify_stability: requires r >= 8 (all formulas valid)");
  StabilityReport report;
  report.from_r = from_r;
  report.ranking = frequency_ranking(from_r, scratch_enumerator());
  report.hc_most_common = hc_dominates(report.ranking, from_r);
  for (unsigned pos = 0; pos + 1 < kNumClasses; ++pos) {
    const HandClass lower = report.ranking.order[pos];
    const HandClass higher = report.ranking.order[pos + 1];
    if (lower == HandClass::HighCard || higher == HandClass::HighCard) continue;
    report.pairs.push_back(certify_pair(lower, higher, from_r));
  }
  return report;
}

StabilityReport certify_stability_pair(unsigned from_r, HandClass a, HandClass b) {
  if (from_r < kAllFormulasValidR)
    throw std::invalid_argument("certify_stability: requires r >= 8 (all formulas valid)");
  if (a == b) throw std::invalid_argument("certify_stability: need two distinct classes");
  if (a == HandClass::HighCard || b == HandClass::HighCard)
    throw std::invalid_argument("certify_stability: HighCard has no formula pair");
  StabilityReport report;
  report.from_r = from_r;
  report.ranking = frequency_ranking(from_r, scratch_enumerator());
  report.hc_most_common = hc_dominates(report.ranking, from_r);
  const bool a_lower =
      report.ranking.level[class_index(a)] <= report.ranking.level[class_index(b)];
  const HandClass lower = a_lower ? a : b;
  const HandClass higher = a_lower ? b : a;
  report.pairs.push_back(certify_pair(lower, higher, from_r));
  return report;
}

Ranking showdown_ranking(unsigned r, const Ranking& base, Enumerator& en) {
  return Ranking::from_counts(en.showdown(r, base).counts);
}

IterationResult iterate_showdown(unsigned r, const Ranking& base, unsigned max_iter,
                                 Enumerator& en) {
  if (max_iter < 2) throw std::invalid_argument("iterate_showdown: max_iter must be >= 2");
  IterationResult res;
  res.trajectory.push_back(base);
  for (unsigned step = 0; step < max_iter; ++step) {
    Ranking next = showdown_ranking(r, res.trajectory.back(), en);
    // Any repetition of an earlier ranking closes a cycle.
    for (unsigned i = 0; i < res.trajectory.size(); ++i) {
      if (res.trajectory[i].same_order(next)) {
        const unsigned len = static_cast<unsigned>(res.trajectory.size()) - i;
        res.kind = len == 1 ? IterationResult::Kind::Fixpoint : IterationResult::Kind::Cycle;
        res.cycle_start = i;
        res.cycle_length = len;
        return res;
      }
    }
    res.trajectory.push_back(std::move(next));
  }
  res.kind = IterationResult::Kind::NoConvergence;
  return res;
}

std::optional<unsigned> find_min_agreement(bool include_hc, unsigned r_max, Enumerator& en) {
  for (unsigned r = kMinRanks; r <= r_max; ++r) {
    const Ranking freq = frequency_ranking(r, en);
    const Ranking show = showdown_ranking(r, freq, en);
    const bool equal = include_hc ? freq.same_order(show)
                                  : freq.same_order_excluding(show, HandClass::HighCard);
    if (equal) return r;
  }
  return std::nullopt;
}

}  // namespace rankforge
