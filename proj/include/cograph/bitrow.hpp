#pragma once

// Word-level kernels over adjacency bit rows.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The variant is picked once at startup from CPUID; tests
// pin either backend with set_backend() and check both agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cograph::bitrow {

using Word = std::uint64_t;

enum class Backend { Scalar, Avx2 };

/// Rows are combined as (row ^ flip_word) where flip_word is all ones when the
/// matching bit of `flips` is set; this is how complemented neighbourhoods are
/// expressed without materializing them.
inline constexpr std::size_t kMaxPatternRows = 3;

struct Kernels {
  std::size_t (*popcount)(const Word* a, std::size_t words);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
  std::size_t (*pattern_popcount)(const Word* const* rows, std::size_t nrows, unsigned flips,
                                  const Word* valid, std::size_t words);
  void (*complement)(Word* dst, const Word* src, const Word* valid, std::size_t words);
  /// dst = a & b; returns true when dst is non-zero.
  bool (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
  /// dst = a & ~b; returns true when dst is non-zero.
  bool (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
  /// dst &= ~a
  void (*andnot_assign)(Word* dst, const Word* a, std::size_t words);
  /// dst |= a
  void (*or_assign)(Word* dst, const Word* a, std::size_t words);
};

const Kernels& scalar_kernels();
/// Null when the AVX2 variant was not compiled in.
const Kernels* avx2_kernels();

bool cpu_has_avx2();
Backend active_backend();
/// Throws InvalidArgument when the requested backend is unavailable.
void set_backend(Backend backend);
std::string_view backend_name(Backend backend);

const Kernels& active();

inline std::size_t popcount(const Word* a, std::size_t words) { return active().popcount(a, words); }
inline std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  return active().and_popcount(a, b, words);
}
inline std::size_t pattern_popcount(const Word* const* rows, std::size_t nrows, unsigned flips,
                                    const Word* valid, std::size_t words) {
  return active().pattern_popcount(rows, nrows, flips, valid, words);
}
inline void complement(Word* dst, const Word* src, const Word* valid, std::size_t words) {
  active().complement(dst, src, valid, words);
}
inline bool and_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
  return active().and_into(dst, a, b, words);
}
inline bool andnot_into(Word* dst, const Word* a, const Word* b, std::size_t words) {
  return active().andnot_into(dst, a, b, words);
}
inline void andnot_assign(Word* dst, const Word* a, std::size_t words) {
  active().andnot_assign(dst, a, words);
}
inline void or_assign(Word* dst, const Word* a, std::size_t words) { active().or_assign(dst, a, words); }

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace cograph::bitrow
