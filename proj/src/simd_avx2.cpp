// AVX2+FMA kernel variants. This TU is compiled with -mavx2 -mfma; callers
// must check detail::avx2_available() first (dispatch does).

#include "hyperharm/simd.hpp"

#ifdef HH_HAVE_AVX2_TU
#include <immintrin.h>

namespace hh::simd::detail {

namespace {

// interleaved complex product of two packed pairs: [re0,im0,re1,im1]
inline __m256d cprod(__m256d a, __m256d b) {
  const __m256d ar = _mm256_movedup_pd(a);       // [ar0,ar0,ar1,ar1]
  const __m256d ai = _mm256_permute_pd(a, 0xF);  // [ai0,ai0,ai1,ai1]
  const __m256d bs = _mm256_permute_pd(b, 0x5);  // [bi0,br0,bi1,br1]
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

}  // namespace

Complex cdotu_avx2(const Complex* a, const Complex* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < pairs; ++i) {
    const __m256d va = _mm256_loadu_pd(pa + 4 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 4 * i);
    const __m256d prod = cprod(va, vb);
    // vector Kahan step
    const __m256d y = _mm256_sub_pd(prod, c);
    const __m256d t = _mm256_add_pd(s, y);
    c = _mm256_sub_pd(_mm256_sub_pd(t, s), y);
    s = t;
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, s);
  num::KahanCSum acc;
  acc.add({lanes[0], lanes[1]});
  acc.add({lanes[2], lanes[3]});
  for (std::size_t i = 2 * pairs; i < n; ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

void cmul_avx2(const Complex* a, const Complex* b, Complex* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* po = reinterpret_cast<double*>(out);
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < pairs; ++i) {
    const __m256d va = _mm256_loadu_pd(pa + 4 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 4 * i);
    _mm256_storeu_pd(po + 4 * i, cprod(va, vb));
  }
  for (std::size_t i = 2 * pairs; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace hh::simd::detail
#endif  // HH_HAVE_AVX2_TU
