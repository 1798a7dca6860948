#pragma once
// Exhaustive sweeps over all C(4r,7) seven-card hands. A sweep reduces the
// deck to a 512-bin histogram over containment profiles; inclusive tables,
// showdown tables under any ranking, and nothing-counts are all linear reads
// of those bins, so one sweep per r answers every downstream question.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

#include "rankforge/cards.hpp"
#include "rankforge/exact.hpp"
#include "rankforge/kernels.hpp"
#include "rankforge/ranking.hpp"

namespace rankforge {

struct ProfileHistogram {
  unsigned r = 0;
  std::array<uint64_t, kNumProfiles> bins{};
  uint64_t total() const;
};

enum class SweepMode {
  Auto,           // plain below the cutover rank count, suit-canonical from it on
  Plain,          // every combination, split into contiguous colex ranges
  SuitCanonical,  // one representative per suit-permutation orbit, weighted
};

inline constexpr unsigned kCanonicalCutoverR = 15;
inline constexpr unsigned kDefaultCeilingR = 16;

struct SweepOptions {
  unsigned threads = 0;  // 0: RANKFORGE_THREADS env, else hardware concurrency
  unsigned ceiling = kDefaultCeilingR;  // beyond this long_run must be set
  bool long_run = false;
  SweepMode mode = SweepMode::Auto;
  const kernels::KernelSet* kernel = nullptr;  // null: preferred_kernels()
  // Invoked with (r, hands done, hands total) about every progress_interval
  // hands and once at completion. Null disables reporting.
  std::function<void(unsigned, uint64_t, uint64_t)> progress;
  uint64_t progress_interval = 1ull << 26;
};

struct CountTable {
  enum class Mode { Inclusive, Showdown };
  unsigned r = 0;
  Mode mode = Mode::Inclusive;
  std::optional<Ranking> ranking;  // showdown only
  std::array<Int, kNumClasses> counts{};
  Int total;
};

CountTable inclusive_table(const ProfileHistogram& hist);
CountTable showdown_table(const ProfileHistogram& hist, const Ranking& ranking);

// Memoizes one histogram per r; safe to share across threads.
class Enumerator {
 public:
  explicit Enumerator(SweepOptions opts = {});
  const ProfileHistogram& sweep(unsigned r);
  CountTable inclusive(unsigned r);
  CountTable showdown(unsigned r, const Ranking& ranking);
  // Hands with no class beyond the high card; equals the showdown HighCard
  // count under every ranking.
  Int nothing_count(unsigned r);
  SweepOptions& options() { return opts_; }

 private:
  SweepOptions opts_;
  std::mutex mu_;
  std::map<unsigned, ProfileHistogram> memo_;
};

// Single-shot conveniences; each call sweeps afresh.
ProfileHistogram sweep_profiles(unsigned r, const SweepOptions& opts = {});
CountTable enumerate_inclusive(unsigned r, const SweepOptions& opts = {});
CountTable enumerate_showdown(unsigned r, const Ranking& ranking, const SweepOptions& opts = {});

}  // namespace rankforge
