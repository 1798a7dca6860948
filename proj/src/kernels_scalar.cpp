#include "rankforge/classify.hpp"
#include "rankforge/kernels.hpp"

namespace rankforge::kernels {

const DeltaTables& delta_tables() {
  static const DeltaTables tables = [] {
    DeltaTables d;
    for (uint32_t c = 0; c < kNumSuits * kMaxRanks; ++c) {
      d.t[c & 3u][c] = 1u << (c >> 2);
    }
    return d;
  }();
  return tables;
}

namespace {

void delta_run_scalar(const DeltaRun& run, uint32_t lo, uint32_t hi, uint16_t* out) {
  const DeltaTables& d = delta_tables();
  for (uint32_t c = lo; c < hi; ++c) {
    out[c - lo] = classify_suit_masks(run.base[0] | d.t[0][c], run.base[1] | d.t[1][c],
                                      run.base[2] | d.t[2][c], run.base[3] | d.t[3][c],
                                      run.wheel);
  }
}

void tail_run_scalar(const TailRun& run, const uint32_t* cand, size_t n, uint16_t* out) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = classify_suit_masks(run.fixed[0], run.fixed[1], run.fixed[2], cand[i], run.wheel);
  }
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet k{"scalar", &delta_run_scalar, &tail_run_scalar};
  return k;
}

}  // namespace rankforge::kernels
