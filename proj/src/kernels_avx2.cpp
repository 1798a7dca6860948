// AVX2 variants of the classification kernels: eight 32-bit lanes per step,
// one hand per lane. Compiled via the target attribute and gated on a
// runtime CPUID check, so the TU builds with baseline flags.

#include "rankforge/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace rankforge::kernels {
namespace {

#define RF_AVX2 __attribute__((target("avx2")))

RF_AVX2 inline __m256i nonzero_mask(__m256i x) {
  return _mm256_xor_si256(_mm256_cmpeq_epi32(x, _mm256_setzero_si256()),
                          _mm256_set1_epi32(-1));
}

RF_AVX2 inline __m256i straight_mask(__m256i m, __m256i wheel) {
  __m256i run = _mm256_and_si256(m, _mm256_srli_epi32(m, 1));
  run = _mm256_and_si256(run, _mm256_srli_epi32(m, 2));
  run = _mm256_and_si256(run, _mm256_srli_epi32(m, 3));
  run = _mm256_and_si256(run, _mm256_srli_epi32(m, 4));
  const __m256i wheel_hit = _mm256_cmpeq_epi32(_mm256_and_si256(m, wheel), wheel);
  return _mm256_or_si256(nonzero_mask(run), wheel_hit);
}

// popcount >= 5, as "still nonzero after clearing four set bits".
RF_AVX2 inline __m256i pop_ge5_mask(__m256i x) {
  const __m256i one = _mm256_set1_epi32(1);
  __m256i y = x;
  for (int i = 0; i < 4; ++i) y = _mm256_and_si256(y, _mm256_sub_epi32(y, one));
  return nonzero_mask(y);
}

RF_AVX2 inline __m256i or_bit(__m256i prof, __m256i mask, HandClass cls) {
  return _mm256_or_si256(prof, _mm256_and_si256(mask, _mm256_set1_epi32(class_bit(cls))));
}

RF_AVX2 inline __m256i classify8(__m256i a, __m256i b, __m256i c, __m256i d, __m256i wheel) {
  const __m256i ab_both = _mm256_and_si256(a, b), ab_any = _mm256_or_si256(a, b);
  const __m256i cd_both = _mm256_and_si256(c, d), cd_any = _mm256_or_si256(c, d);
  const __m256i any = _mm256_or_si256(ab_any, cd_any);
  const __m256i ge2 = _mm256_or_si256(_mm256_or_si256(ab_both, cd_both),
                                      _mm256_and_si256(ab_any, cd_any));
  const __m256i ge3 = _mm256_or_si256(_mm256_and_si256(ab_both, cd_any),
                                      _mm256_and_si256(cd_both, ab_any));
  const __m256i ge4 = _mm256_and_si256(ab_both, cd_both);
  const __m256i multi2 =
      _mm256_and_si256(ge2, _mm256_sub_epi32(ge2, _mm256_set1_epi32(1)));

  const __m256i m_1p = nonzero_mask(ge2);
  const __m256i m_2p = nonzero_mask(_mm256_or_si256(multi2, ge4));
  const __m256i m_3x = nonzero_mask(ge3);
  const __m256i m_fh = _mm256_and_si256(m_3x, nonzero_mask(multi2));
  const __m256i m_4x = nonzero_mask(ge4);
  const __m256i m_st = straight_mask(any, wheel);
  const __m256i m_fl = _mm256_or_si256(_mm256_or_si256(pop_ge5_mask(a), pop_ge5_mask(b)),
                                       _mm256_or_si256(pop_ge5_mask(c), pop_ge5_mask(d)));
  const __m256i m_sf =
      _mm256_or_si256(_mm256_or_si256(straight_mask(a, wheel), straight_mask(b, wheel)),
                      _mm256_or_si256(straight_mask(c, wheel), straight_mask(d, wheel)));

  __m256i prof = _mm256_set1_epi32(class_bit(HandClass::HighCard));
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

RF_AVX2 inline void store_profiles(uint16_t* out, __m256i prof) {
  const __m128i lo = _mm256_castsi256_si128(prof);
  const __m128i hi = _mm256_extracti128_si256(prof, 1);
  _mm_storeu_si128(reinterpret_cast<__m128i*>(out), _mm_packus_epi32(lo, hi));
}

RF_AVX2 void delta_run_avx2(const DeltaRun& run, uint32_t lo, uint32_t hi, uint16_t* out) {
  const DeltaTables& dt = delta_tables();
  const __m256i b0 = _mm256_set1_epi32(run.base[0]);
  const __m256i b1 = _mm256_set1_epi32(run.base[1]);
  const __m256i b2 = _mm256_set1_epi32(run.base[2]);
  const __m256i b3 = _mm256_set1_epi32(run.base[3]);
  const __m256i wheel = _mm256_set1_epi32(run.wheel);
  for (uint32_t c = lo; c < hi; c += 8) {
    const __m256i s0 = _mm256_or_si256(
        b0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dt.t[0].data() + c)));
    const __m256i s1 = _mm256_or_si256(
        b1, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dt.t[1].data() + c)));
    const __m256i s2 = _mm256_or_si256(
        b2, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dt.t[2].data() + c)));
    const __m256i s3 = _mm256_or_si256(
        b3, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dt.t[3].data() + c)));
    store_profiles(out + (c - lo), classify8(s0, s1, s2, s3, wheel));
  }
}

RF_AVX2 void tail_run_avx2(const TailRun& run, const uint32_t* cand, size_t n, uint16_t* out) {
  const __m256i f0 = _mm256_set1_epi32(run.fixed[0]);
  const __m256i f1 = _mm256_set1_epi32(run.fixed[1]);
  const __m256i f2 = _mm256_set1_epi32(run.fixed[2]);
  const __m256i wheel = _mm256_set1_epi32(run.wheel);
  for (size_t i = 0; i < n; i += 8) {
    const __m256i s3 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cand + i));
    store_profiles(out + i, classify8(f0, f1, f2, s3, wheel));
  }
}

#undef RF_AVX2

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet k{"avx2", &delta_run_avx2, &tail_run_avx2};
  return __builtin_cpu_supports("avx2") ? &k : nullptr;
}

}  // namespace rankforge::kernels

#else

namespace rankforge::kernels {
const KernelSet* avx2_kernels() { return nullptr; }
}  // namespace rankforge::kernels

#endif
