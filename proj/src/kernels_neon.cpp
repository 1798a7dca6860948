// NEON variants of the classification kernels: four 32-bit lanes per step.
// NEON is baseline on aarch64, so no runtime check is needed there.

#include "rankforge/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace rankforge::kernels {
namespace {

inline uint32x4_t nonzero_mask(uint32x4_t x) {
  return vmvnq_u32(vceqq_u32(x, vdupq_n_u32(0)));
}

inline uint32x4_t straight_mask(uint32x4_t m, uint32x4_t wheel) {
  uint32x4_t run = vandq_u32(m, vshrq_n_u32(m, 1));
  run = vandq_u32(run, vshrq_n_u32(m, 2));
  run = vandq_u32(run, vshrq_n_u32(m, 3));
  run = vandq_u32(run, vshrq_n_u32(m, 4));
  const uint32x4_t wheel_hit = vceqq_u32(vandq_u32(m, wheel), wheel);
  return vorrq_u32(nonzero_mask(run), wheel_hit);
}

inline uint32x4_t pop_ge5_mask(uint32x4_t x) {
  const uint32x4_t one = vdupq_n_u32(1);
  uint32x4_t y = x;
  for (int i = 0; i < 4; ++i) y = vandq_u32(y, vsubq_u32(y, one));
  return nonzero_mask(y);
}

inline uint32x4_t or_bit(uint32x4_t prof, uint32x4_t mask, HandClass cls) {
  return vorrq_u32(prof, vandq_u32(mask, vdupq_n_u32(class_bit(cls))));
}

inline uint32x4_t classify4(uint32x4_t a, uint32x4_t b, uint32x4_t c, uint32x4_t d,
                            uint32x4_t wheel) {
  const uint32x4_t ab_both = vandq_u32(a, b), ab_any = vorrq_u32(a, b);
  const uint32x4_t cd_both = vandq_u32(c, d), cd_any = vorrq_u32(c, d);
  const uint32x4_t any = vorrq_u32(ab_any, cd_any);
  const uint32x4_t ge2 = vorrq_u32(vorrq_u32(ab_both, cd_both), vandq_u32(ab_any, cd_any));
  const uint32x4_t ge3 = vorrq_u32(vandq_u32(ab_both, cd_any), vandq_u32(cd_both, ab_any));
  const uint32x4_t ge4 = vandq_u32(ab_both, cd_both);
  const uint32x4_t multi2 = vandq_u32(ge2, vsubq_u32(ge2, vdupq_n_u32(1)));

  const uint32x4_t m_1p = nonzero_mask(ge2);
  const uint32x4_t m_2p = nonzero_mask(vorrq_u32(multi2, ge4));
  const uint32x4_t m_3x = nonzero_mask(ge3);
  const uint32x4_t m_fh = vandq_u32(m_3x, nonzero_mask(multi2));
  const uint32x4_t m_4x = nonzero_mask(ge4);
  const uint32x4_t m_st = straight_mask(any, wheel);
  const uint32x4_t m_fl = vorrq_u32(vorrq_u32(pop_ge5_mask(a), pop_ge5_mask(b)),
                                    vorrq_u32(pop_ge5_mask(c), pop_ge5_mask(d)));
  const uint32x4_t m_sf = vorrq_u32(vorrq_u32(straight_mask(a, wheel), straight_mask(b, wheel)),
                                    vorrq_u32(straight_mask(c, wheel), straight_mask(d, wheel)));

  uint32x4_t prof = vdupq_n_u32(class_bit(HandClass::HighCard));
  prof = or_bit(prof, m_1p, HandClass::OnePair);
  prof = or_bit(prof, m_2p, HandClass::TwoPair);
  prof = or_bit(prof, m_3x, HandClass::Trips);
  prof = or_bit(prof, m_st, HandClass::Straight);
  prof = or_bit(prof, m_fl, HandClass::Flush);
  prof = or_bit(prof, m_fh, HandClass::FullHouse);
  prof = or_bit(prof, m_4x, HandClass::Quads);
  prof = or_bit(prof, m_sf, HandClass::StraightFlush);
  return prof;
}

void delta_run_neon(const DeltaRun& run, uint32_t lo, uint32_t hi, uint16_t* out) {
  const DeltaTables& dt = delta_tables();
  const uint32x4_t b0 = vdupq_n_u32(run.base[0]);
  const uint32x4_t b1 = vdupq_n_u32(run.base[1]);
  const uint32x4_t b2 = vdupq_n_u32(run.base[2]);
  const uint32x4_t b3 = vdupq_n_u32(run.base[3]);
  const uint32x4_t wheel = vdupq_n_u32(run.wheel);
  for (uint32_t c = lo; c < hi; c += 4) {
    const uint32x4_t s0 = vorrq_u32(b0, vld1q_u32(dt.t[0].data() + c));
    const uint32x4_t s1 = vorrq_u32(b1, vld1q_u32(dt.t[1].data() + c));
    const uint32x4_t s2 = vorrq_u32(b2, vld1q_u32(dt.t[2].data() + c));
    const uint32x4_t s3 = vorrq_u32(b3, vld1q_u32(dt.t[3].data() + c));
    vst1_u16(out + (c - lo), vmovn_u32(classify4(s0, s1, s2, s3, wheel)));
  }
}

void tail_run_neon(const TailRun& run, const uint32_t* cand, size_t n, uint16_t* out) {
  const uint32x4_t f0 = vdupq_n_u32(run.fixed[0]);
  const uint32x4_t f1 = vdupq_n_u32(run.fixed[1]);
  const uint32x4_t f2 = vdupq_n_u32(run.fixed[2]);
  const uint32x4_t wheel = vdupq_n_u32(run.wheel);
  for (size_t i = 0; i < n; i += 4) {
    const uint32x4_t s3 = vld1q_u32(cand + i);
    vst1_u16(out + i, vmovn_u32(classify4(f0, f1, f2, s3, wheel)));
  }
}

}  // namespace

const KernelSet* neon_kernels() {
  static const KernelSet k{"neon", &delta_run_neon, &tail_run_neon};
  return &k;
}

}  // namespace rankforge::kernels

#else

namespace rankforge::kernels {
const KernelSet* neon_kernels() { return nullptr; }
}  // namespace rankforge::kernels

#endif
