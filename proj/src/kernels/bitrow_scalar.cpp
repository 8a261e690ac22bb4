#include <bit>

#include "cograph/bitrow.hpp"

namespace cograph::bitrow {
namespace {

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::size_t pattern_popcount_scalar(const Word* const* rows, std::size_t nrows, unsigned flips,
                                    const Word* valid, std::size_t words) {
  Word flip_words[kMaxPatternRows];
  for (std::size_t r = 0; r < nrows; ++r) flip_words[r] = ((flips >> r) & 1U) ? ~Word{0} : Word{0};
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    Word acc = valid[i];
    for (std::size_t r = 0; r < nrows; ++r) acc &= rows[r][i] ^ flip_words[r];
    total += static_cast<std::size_t>(std::popcount(acc));
  }
  return total;
}

void complement_scalar(Word* dst, const Word* src, const Word* valid, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = ~src[i] & valid[i];
}

bool and_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t words) {
  Word any = 0;
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] = a[i] & b[i];
    any |= dst[i];
  }
  return any != 0;
}

bool andnot_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t words) {
  Word any = 0;
  for (std::size_t i = 0; i < words; ++i) {
    dst[i] = a[i] & ~b[i];
    any |= dst[i];
  }
  return any != 0;
}

void andnot_assign_scalar(Word* dst, const Word* a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= ~a[i];
}

void or_assign_scalar(Word* dst, const Word* a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= a[i];
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels kernels{popcount_scalar,   and_popcount_scalar,  pattern_popcount_scalar,
                               complement_scalar, and_into_scalar,      andnot_into_scalar,
                               andnot_assign_scalar,
                               or_assign_scalar};
  return kernels;
}

}  // namespace cograph::bitrow
