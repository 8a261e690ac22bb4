// Compiled with -mavx2 only for this translation unit; selected at runtime.

#include <immintrin.h>

#include <bit>

#include "cograph/bitrow.hpp"

namespace cograph::bitrow {
namespace {

// Nibble lookup popcount (Mula et al.), per-64-bit lane sums via vpsadbw.
inline __m256i lane_popcount(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

std::size_t popcount_avx2(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, lane_popcount(load(a + i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    acc = _mm256_add_epi64(acc, lane_popcount(_mm256_and_si256(load(a + i), load(b + i))));
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::size_t pattern_popcount_avx2(const Word* const* rows, std::size_t nrows, unsigned flips,
                                  const Word* valid, std::size_t words) {
  Word flip_words[kMaxPatternRows];
  __m256i flip_vecs[kMaxPatternRows];
  for (std::size_t r = 0; r < nrows; ++r) {
    flip_words[r] = ((flips >> r) & 1U) ? ~Word{0} : Word{0};
    flip_vecs[r] = _mm256_set1_epi64x(static_cast<long long>(flip_words[r]));
  }
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i v = load(valid + i);
    for (std::size_t r = 0; r < nrows; ++r) v = _mm256_and_si256(v, _mm256_xor_si256(load(rows[r] + i), flip_vecs[r]));
    acc = _mm256_add_epi64(acc, lane_popcount(v));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) {
    Word w = valid[i];
    for (std::size_t r = 0; r < nrows; ++r) w &= rows[r][i] ^ flip_words[r];
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

void complement_avx2(Word* dst, const Word* src, const Word* valid, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(valid + i)));
  for (; i < words; ++i) dst[i] = ~src[i] & valid[i];
}

bool and_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t words) {
  __m256i any = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_and_si256(load(a + i), load(b + i));
    store(dst + i, v);
    any = _mm256_or_si256(any, v);
  }
  bool nonzero = !_mm256_testz_si256(any, any);
  for (; i < words; ++i) {
    dst[i] = a[i] & b[i];
    nonzero |= dst[i] != 0;
  }
  return nonzero;
}

bool andnot_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t words) {
  __m256i any = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_andnot_si256(load(b + i), load(a + i));
    store(dst + i, v);
    any = _mm256_or_si256(any, v);
  }
  bool nonzero = !_mm256_testz_si256(any, any);
  for (; i < words; ++i) {
    dst[i] = a[i] & ~b[i];
    nonzero |= dst[i] != 0;
  }
  return nonzero;
}

void andnot_assign_avx2(Word* dst, const Word* a, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_andnot_si256(load(a + i), load(dst + i)));
  for (; i < words; ++i) dst[i] &= ~a[i];
}

void or_assign_avx2(Word* dst, const Word* a, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(a + i)));
  for (; i < words; ++i) dst[i] |= a[i];
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels kernels{popcount_avx2,   and_popcount_avx2,  pattern_popcount_avx2,
                               complement_avx2, and_into_avx2,      andnot_into_avx2,
                               andnot_assign_avx2,
                               or_assign_avx2};
  return &kernels;
}

}  // namespace cograph::bitrow
