#include "rankforge/enumerate.hpp"

#include <atomic>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rankforge/classify.hpp"

namespace rankforge {

uint64_t ProfileHistogram::total() const {
  uint64_t t = 0;
  for (uint64_t b : bins) t += b;
  return t;
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RANKFORGE_THREADS")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// C(n,k) for n <= 4*kMaxRanks, k <= 7; fits comfortably in 64 bits.
struct SmallBinom {
  explicit SmallBinom(unsigned max_n) : max_n_(max_n), c_((max_n + 1) * 8, 0) {
    for (unsigned n = 0; n <= max_n; ++n) {
      at(n, 0) = 1;
      for (unsigned k = 1; k <= 7 && k <= n; ++k) {
        at(n, k) = (n == k) ? 1 : at(n - 1, k - 1) + at(n - 1, k);
      }
    }
  }
  uint64_t operator()(unsigned n, unsigned k) const {
    return (k > 7 || k > n) ? 0 : c_[n * 8 + k];
  }

 private:
  uint64_t& at(unsigned n, unsigned k) { return c_[n * 8 + k]; }
  unsigned max_n_;
  std::vector<uint64_t> c_;
};

struct ProgressMeter {
  const SweepOptions* opts;
  unsigned r;
  uint64_t total;
  std::atomic<uint64_t> done{0};
  std::atomic<uint64_t> next_tick;

  ProgressMeter(const SweepOptions& o, unsigned rr, uint64_t tot)
      : opts(&o), r(rr), total(tot), next_tick(o.progress_interval) {}

  void add(uint64_t hands) {
    if (!opts->progress) return;
    const uint64_t now = done.fetch_add(hands, std::memory_order_relaxed) + hands;
    uint64_t tick = next_tick.load(std::memory_order_relaxed);
    while (now >= tick) {
      if (next_tick.compare_exchange_weak(tick, tick + opts->progress_interval)) {
        opts->progress(r, now, total);
        break;
      }
    }
  }
  void finish() {
    // Completion line only for sweeps big enough to have reported at all.
    if (opts->progress && total >= opts->progress_interval) opts->progress(r, total, total);
  }
};

// ---------------------------------------------------------------------------
// Plain sweep: all C(4r,7) combinations in colex order, one contiguous index
// range per worker. The innermost loop extends a fixed six-card tail by every
// deck index below the next card, which is exactly a kernel delta run.
// ---------------------------------------------------------------------------

struct ColexState {
  std::array<uint32_t, 9> a{};  // a[1..7] ascending card indices
  // Suffix suit masks: suffix[j] = masks of cards a[j..7]; suffix[8] empty.
  std::array<std::array<uint32_t, kNumSuits>, 9> suffix{};

  void refresh_suffix(unsigned from) {
    for (unsigned j = from; j >= 2; --j) {
      suffix[j] = suffix[j + 1];
      const Card c = card_from_index(a[j]);
      suffix[j][c.suit] |= 1u << c.rank;
    }
  }
};

void unrank_colex(uint64_t index, const SmallBinom& binom, unsigned deck, ColexState& st) {
  uint64_t rem = index;
  unsigned upper = deck;
  for (unsigned i = 7; i >= 1; --i) {
    unsigned v = upper - 1;
    while (binom(v, i) > rem) --v;
    st.a[i] = v;
    rem -= binom(v, i);
    upper = v;
  }
  assert(rem == 0);
  st.suffix[8] = {};
  st.refresh_suffix(7);
}

void plain_worker(unsigned r, uint64_t begin, uint64_t end, const SmallBinom& binom,
                  const kernels::KernelSet& ks, ProgressMeter& meter,
                  ProfileHistogram& hist) {
  if (begin >= end) return;
  const unsigned deck = deck_size(r);
  const uint32_t wheel = wheel_mask(r);

  ColexState st;
  unrank_colex(begin, binom, deck, st);

  std::array<uint16_t, kNumSuits * kMaxRanks + 8> out{};
  uint64_t remaining = end - begin;
  uint64_t since_report = 0;

  while (true) {
    const uint32_t run_lo = st.a[1];
    const uint32_t run_hi =
        st.a[2] - run_lo <= remaining ? st.a[2] : run_lo + static_cast<uint32_t>(remaining);
    kernels::DeltaRun run{st.suffix[2], wheel};
    ks.delta_run(run, run_lo, run_hi, out.data());
    const uint32_t len = run_hi - run_lo;
    for (uint32_t i = 0; i < len; ++i) ++hist.bins[out[i]];

    remaining -= len;
    since_report += len;
    if (since_report >= (1u << 22)) {
      meter.add(since_report);
      since_report = 0;
    }
    if (remaining == 0) break;

    // Colex odometer: bump the lowest level that can advance, reset below.
    unsigned j = 2;
    while (j < 7 && st.a[j] + 1 == st.a[j + 1]) ++j;
    assert(j < 7 || st.a[7] + 1 < deck);  // remaining > 0 guarantees a successor
    ++st.a[j];
    for (unsigned i = 2; i < j; ++i) st.a[i] = i - 1;
    st.a[1] = 0;
    st.refresh_suffix(j);
  }
  meter.add(since_report);
}

ProfileHistogram sweep_plain(unsigned r, const SweepOptions& opts, unsigned threads,
                             const kernels::KernelSet& ks) {
  const unsigned deck = deck_size(r);
  const SmallBinom binom(deck);
  const uint64_t total = binom(deck, 7);

  ProgressMeter meter(opts, r, total);
  const unsigned t = static_cast<unsigned>(
      std::min<uint64_t>(threads, std::max<uint64_t>(total / 1024, 1)));
  std::vector<ProfileHistogram> parts(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    const uint64_t begin = total / t * w + std::min<uint64_t>(total % t, w);
    const uint64_t end = begin + total / t + (w < total % t ? 1 : 0);
    pool.emplace_back(plain_worker, r, begin, end, std::cref(binom), std::cref(ks),
                      std::ref(meter), std::ref(parts[w]));
  }
  for (auto& th : pool) th.join();
  meter.finish();

  ProfileHistogram hist;
  hist.r = r;
  for (const auto& p : parts) {
    for (unsigned i = 0; i < kNumProfiles; ++i) hist.bins[i] += p.bins[i];
  }
  return hist;
}

// ---------------------------------------------------------------------------
// Suit-canonical sweep. A hand is a 4-tuple of per-suit rank masks; the suit
// relabeling group acts by permuting the tuple. Enumerating only tuples
// sorted by (popcount, mask) descending and weighting each by its orbit size
// 4!/prod(multiplicities!) reproduces the plain histogram exactly with ~24x
// fewer classifications.
// ---------------------------------------------------------------------------

struct MaskLists {
  // lists[k]: all C(r,k) rank masks of popcount k, ascending, padded so
  // vector lanes may read past the end.
  std::array<std::vector<uint32_t>, 8> lists;
  std::array<size_t, 8> size{};

  explicit MaskLists(unsigned r) {
    for (unsigned k = 0; k <= 7; ++k) {
      auto& v = lists[k];
      if (k == 0) {
        v.push_back(0);
      } else if (k <= r) {
        // Gosper's hack in 64 bits so the r = 32 limit does not wrap.
        uint64_t m = (1ull << k) - 1;
        const uint64_t limit = 1ull << r;
        while (m < limit) {
          v.push_back(static_cast<uint32_t>(m));
          const uint64_t c = m & (~m + 1);
          const uint64_t next = m + c;
          m = (((m ^ next) >> 2) / c) | next;
        }
      }
      size[k] = v.size();
      for (int pad = 0; pad < 8; ++pad) v.push_back(0);
    }
  }
};

struct Partition {
  std::array<unsigned, 4> k;  // k[0] >= k[1] >= k[2] >= k[3], sum 7
};

std::vector<Partition> partitions_of_seven() {
  std::vector<Partition> out;
  for (unsigned k0 = 2; k0 <= 7; ++k0) {
    for (unsigned k1 = 0; k1 <= k0; ++k1) {
      for (unsigned k2 = 0; k2 <= k1 && k0 + k1 + k2 <= 7; ++k2) {
        const unsigned k3 = 7 - k0 - k1 - k2;
        if (k3 <= k2) out.push_back(Partition{{k0, k1, k2, k3}});
      }
    }
  }
  return out;
}

uint64_t orbit_weight(bool e01, bool e12, bool e23) {
  unsigned denom = 1, len = 1;
  for (bool link : {e01, e12, e23}) {
    if (link) {
      ++len;
    } else {
      for (unsigned i = 2; i <= len; ++i) denom *= i;
      len = 1;
    }
  }
  for (unsigned i = 2; i <= len; ++i) denom *= i;
  return 24 / denom;
}

struct CanonicalTask {
  uint16_t part;
  uint32_t i3;
  uint32_t i2;
};

void canonical_worker(const std::vector<Partition>& parts, const MaskLists& ml,
                      const std::vector<CanonicalTask>& tasks, size_t first, size_t stride,
                      uint32_t wheel, const kernels::KernelSet& ks, ProgressMeter& meter,
                      ProfileHistogram& hist) {
  std::vector<uint16_t> out(4096 + 8);
  uint64_t since_report = 0;

  for (size_t ti = first; ti < tasks.size(); ti += stride) {
    const CanonicalTask& task = tasks[ti];
    const Partition& p = parts[task.part];
    const auto& l0 = ml.lists[p.k[0]];
    const auto& l1 = ml.lists[p.k[1]];
    const uint32_t m2 = ml.lists[p.k[2]][task.i2];
    const uint32_t m3 = ml.lists[p.k[3]][task.i3];
    const bool e23 = p.k[2] == p.k[3] && task.i2 == task.i3;

    const size_t n1 = ml.size[p.k[1]];
    const size_t lo1 = p.k[1] == p.k[2] ? task.i2 : 0;
    for (size_t i1 = lo1; i1 < n1; ++i1) {
      const uint32_t m1 = l1[i1];
      const bool e12 = p.k[1] == p.k[2] && i1 == task.i2;
      const size_t n0 = ml.size[p.k[0]];
      size_t lo0 = p.k[0] == p.k[1] ? i1 : 0;

      const kernels::TailRun run{{m1, m2, m3}, wheel};
      // First candidate may equal m1; its orbit is smaller.
      if (p.k[0] == p.k[1] && lo0 < n0) {
        const uint16_t prof =
            classify_suit_masks(l0[lo0], m1, m2, m3, wheel);
        hist.bins[prof] += orbit_weight(true, e12, e23);
        since_report += orbit_weight(true, e12, e23);
        ++lo0;
      }
      const uint64_t w = orbit_weight(false, e12, e23);
      size_t i0 = lo0;
      while (i0 < n0) {
        const size_t chunk = std::min<size_t>(n0 - i0, 4096);
        ks.tail_run(run, l0.data() + i0, chunk, out.data());
        for (size_t i = 0; i < chunk; ++i) hist.bins[out[i]] += w;
        since_report += w * chunk;
        i0 += chunk;
        if (since_report >= (1u << 24)) {
          meter.add(since_report);
          since_report = 0;
        }
      }
    }
  }
  meter.add(since_report);
}

ProfileHistogram sweep_canonical(unsigned r, const SweepOptions& opts, unsigned threads,
                                 const kernels::KernelSet& ks) {
  const MaskLists ml(r);
  const std::vector<Partition> parts = partitions_of_seven();

  std::vector<CanonicalTask> tasks;
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const Partition& p = parts[pi];
    for (uint32_t i3 = 0; i3 < ml.size[p.k[3]]; ++i3) {
      const uint32_t lo2 = p.k[2] == p.k[3] ? i3 : 0;
      for (uint32_t i2 = lo2; i2 < ml.size[p.k[2]]; ++i2) {
        tasks.push_back(CanonicalTask{static_cast<uint16_t>(pi), i3, i2});
      }
    }
  }

  const SmallBinom binom(deck_size(r));
  const uint64_t total = binom(deck_size(r), 7);
  ProgressMeter meter(opts, r, total);

  const unsigned t = std::max(1u, std::min<unsigned>(threads, tasks.size()));
  std::vector<ProfileHistogram> partial(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    pool.emplace_back(canonical_worker, std::cref(parts), std::cref(ml), std::cref(tasks), w, t,
                      wheel_mask(r), std::cref(ks), std::ref(meter), std::ref(partial[w]));
  }
  for (auto& th : pool) th.join();
  meter.finish();

  ProfileHistogram hist;
  hist.r = r;
  for (const auto& p : partial) {
    for (unsigned i = 0; i < kNumProfiles; ++i) hist.bins[i] += p.bins[i];
  }
  return hist;
}

}  // namespace

ProfileHistogram sweep_profiles(unsigned r, const SweepOptions& opts) {
  if (r < kMinRanks) throw std::invalid_argument("sweep: r must be at least 5");
  if (r > kMaxRanks)
    throw std::invalid_argument("sweep: r > " + std::to_string(kMaxRanks) +
                                " exceeds the enumerable range");
  if (r > opts.ceiling && !opts.long_run)
    throw std::invalid_argument("sweep: r=" + std::to_string(r) +
                                " is past the routine ceiling; enable long-run mode");
  if (r > opts.ceiling)
    std::fprintf(stderr, "rankforge: long-run sweep at r=%u (%u cards)\n", r, deck_size(r));

  const kernels::KernelSet& ks = opts.kernel ? *opts.kernel : kernels::preferred_kernels();
  const unsigned threads = resolve_threads(opts.threads);

  const bool canonical = opts.mode == SweepMode::SuitCanonical ||
                         (opts.mode == SweepMode::Auto && r >= kCanonicalCutoverR);
  ProfileHistogram hist =
      canonical ? sweep_canonical(r, opts, threads, ks) : sweep_plain(r, opts, threads, ks);

  // Cheap global invariant: bins must account for every hand exactly once.
  const Int expect = binom(4ll * r, 7);
  if (Int(hist.total()) != expect)
    throw std::logic_error("sweep: histogram total mismatch at r=" + std::to_string(r));
  return hist;
}

CountTable inclusive_table(const ProfileHistogram& hist) {
  CountTable t;
  t.r = hist.r;
  t.mode = CountTable::Mode::Inclusive;
  for (unsigned p = 0; p < kNumProfiles; ++p) {
    if (hist.bins[p] == 0) continue;
    t.total += hist.bins[p];
    for (unsigned c = 0; c < kNumClasses; ++c) {
      if (p & (1u << c)) t.counts[c] += hist.bins[p];
    }
  }
  return t;
}

CountTable showdown_table(const ProfileHistogram& hist, const Ranking& ranking) {
  CountTable t;
  t.r = hist.r;
  t.mode = CountTable::Mode::Showdown;
  t.ranking = ranking;
  for (unsigned p = 0; p < kNumProfiles; ++p) {
    if (hist.bins[p] == 0) continue;
    t.total += hist.bins[p];
    const HandClass best = ranking.best(ClassSet::from_bits(static_cast<uint16_t>(p)));
    t.counts[class_index(best)] += hist.bins[p];
  }
  return t;
}

Enumerator::Enumerator(SweepOptions opts) : opts_(std::move(opts)) {}

const ProfileHistogram& Enumerator::sweep(unsigned r) {
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(r);
    if (it != memo_.end()) return it->second;
  }
  ProfileHistogram hist = sweep_profiles(r, opts_);
  std::lock_guard lock(mu_);
  return memo_.emplace(r, std::move(hist)).first->second;
}

CountTable Enumerator::inclusive(unsigned r) { return inclusive_table(sweep(r)); }

CountTable Enumerator::showdown(unsigned r, const Ranking& ranking) {
  return showdown_table(sweep(r), ranking);
}

Int Enumerator::nothing_count(unsigned r) {
  return Int(sweep(r).bins[class_bit(HandClass::HighCard)]);
}

CountTable enumerate_inclusive(unsigned r, const SweepOptions& opts) {
  return inclusive_table(sweep_profiles(r, opts));
}

CountTable enumerate_showdown(unsigned r, const Ranking& ranking, const SweepOptions& opts) {
  return showdown_table(sweep_profiles(r, opts), ranking);
}

}  // namespace rankforge
