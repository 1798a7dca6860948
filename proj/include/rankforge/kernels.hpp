#pragma once
// Batch classification kernels, the hot inner loops of the enumerator.
//
// Two batch shapes cover both sweep strategies:
//   - delta runs: a fixed six-card base extended by each card in a contiguous
//     deck-index range (plain colex sweep, innermost loop);
//   - tail runs: three fixed suit masks joined by candidate masks from a
//     sorted list (suit-canonical sweep, innermost loop).
//
// The scalar kernel is the reference; SIMD variants (AVX2 on x86-64, NEON on
// aarch64) are selected at runtime and must match it bit for bit, which the
// test suite enforces.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rankforge/cards.hpp"

namespace rankforge::kernels {

// Per-suit one-bit masks indexed by deck card index, zero-padded so vector
// lanes may read past the deck end.
inline constexpr uint32_t kDeltaTableSize = kNumSuits * kMaxRanks + 8;
struct DeltaTables {
  std::array<std::array<uint32_t, kDeltaTableSize>, kNumSuits> t{};
};
const DeltaTables& delta_tables();

struct DeltaRun {
  std::array<uint32_t, kNumSuits> base{};  // suit masks of the six fixed cards
  uint32_t wheel = 0;
};

struct TailRun {
  std::array<uint32_t, 3> fixed{};  // three fixed suit masks
  uint32_t wheel = 0;
};

// Batch contract shared by both run shapes: kernels may process in full
// vector widths, so `out` needs capacity for the run length rounded up to a
// multiple of 8 (entries past the end are scratch), and `cand` must stay
// readable for the same rounded length. DeltaTables carries its own padding.

// out[i] = profile of base + card(lo + i), for lo + i < hi.
using DeltaRunFn = void (*)(const DeltaRun&, uint32_t lo, uint32_t hi, uint16_t* out);
// out[i] = profile of {fixed[0], fixed[1], fixed[2], cand[i]}.
using TailRunFn = void (*)(const TailRun&, const uint32_t* cand, size_t n, uint16_t* out);

struct KernelSet {
  std::string_view name;
  DeltaRunFn delta_run;
  TailRunFn tail_run;
};

const KernelSet& scalar_kernels();

// Kernels compiled in and usable on this host, scalar first.
std::vector<const KernelSet*> available_kernels();

// Scalar unless a SIMD set is usable; RANKFORGE_KERNEL overrides by name.
const KernelSet& preferred_kernels();

// Lookup across compiled-in sets; nullptr when unknown or unusable here.
const KernelSet* kernels_by_name(std::string_view name);

// Defined only where the respective ISA support is compiled in.
const KernelSet* avx2_kernels();  // nullptr when the CPU lacks AVX2
const KernelSet* neon_kernels();

}  // namespace rankforge::kernels
