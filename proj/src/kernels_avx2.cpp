#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "lapflow/kernels.hpp"

namespace lapflow::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

}  // namespace

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i] * y[i];
  return hsum(acc) + tail;
}

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i];
  return hsum(acc) + tail;
}

double sum_abs(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_loadu_pd(x + i), kAbsMask));
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += std::abs(x[i]);
  return hsum(acc) + tail;
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_max_pd(acc, _mm256_and_pd(d, kAbsMask));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace lapflow::kernels::avx2

#endif  // __x86_64__
