#include <gtest/gtest.h>

#include <vector>

#include "cograph/bitrow.hpp"
#include "cograph/rng.hpp"

using namespace cograph;
using bitrow::Word;

namespace {

std::vector<Word> random_words(Rng& rng, std::size_t words) {
  std::vector<Word> out(words);
  for (auto& w : out) w = rng();
  return out;
}

std::vector<Word> valid_mask(std::size_t bits) {
  std::vector<Word> out(bitrow::words_for(bits), ~Word{0});
  if (bits % 64) out.back() = (Word{1} << (bits % 64)) - 1;
  return out;
}

class BitrowEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
    if (bitrow::avx2_kernels() == nullptr || !bitrow::cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this machine";
  }
};

}  // namespace

TEST_P(BitrowEquivalence, AllKernelsAgreeWithScalar) {
  const std::size_t bits = GetParam();
  const std::size_t words = bitrow::words_for(bits);
  const auto& s = bitrow::scalar_kernels();
  const auto& v = *bitrow::avx2_kernels();
  Rng rng(bits);
  for (int round = 0; round < 20; ++round) {
    auto a = random_words(rng, words);
    auto b = random_words(rng, words);
    auto c = random_words(rng, words);
    const auto valid = valid_mask(bits);
    EXPECT_EQ(s.popcount(a.data(), words), v.popcount(a.data(), words));
    EXPECT_EQ(s.and_popcount(a.data(), b.data(), words), v.and_popcount(a.data(), b.data(), words));
    const Word* rows[] = {a.data(), b.data(), c.data()};
    for (std::size_t nrows = 1; nrows <= bitrow::kMaxPatternRows; ++nrows)
      for (unsigned flips = 0; flips < (1U << nrows); ++flips)
        EXPECT_EQ(s.pattern_popcount(rows, nrows, flips, valid.data(), words),
                  v.pattern_popcount(rows, nrows, flips, valid.data(), words));

    std::vector<Word> x(words), y(words);
    s.complement(x.data(), a.data(), valid.data(), words);
    v.complement(y.data(), a.data(), valid.data(), words);
    EXPECT_EQ(x, y);
    EXPECT_EQ(s.and_into(x.data(), a.data(), b.data(), words), v.and_into(y.data(), a.data(), b.data(), words));
    EXPECT_EQ(x, y);
    EXPECT_EQ(s.andnot_into(x.data(), a.data(), b.data(), words), v.andnot_into(y.data(), a.data(), b.data(), words));
    EXPECT_EQ(x, y);
    s.andnot_assign(x.data(), c.data(), words);
    v.andnot_assign(y.data(), c.data(), words);
    EXPECT_EQ(x, y);
    s.or_assign(x.data(), b.data(), words);
    v.or_assign(y.data(), b.data(), words);
    EXPECT_EQ(x, y);
  }
}

INSTANTIATE_TEST_SUITE_P(Widths, BitrowEquivalence, ::testing::Values(1, 63, 64, 65, 255, 256, 257, 1000, 4099));

TEST(Bitrow, EmptyIntersectionReported) {
  const std::size_t words = 5;
  std::vector<Word> a(words, 0x5555555555555555ULL), b(words, 0xaaaaaaaaaaaaaaaaULL), dst(words);
  EXPECT_FALSE(bitrow::scalar_kernels().and_into(dst.data(), a.data(), b.data(), words));
  EXPECT_TRUE(bitrow::scalar_kernels().andnot_into(dst.data(), a.data(), b.data(), words));
  EXPECT_EQ(bitrow::scalar_kernels().popcount(dst.data(), words), 32U * words);
}

TEST(Bitrow, BackendSwitch) {
  const auto before = bitrow::active_backend();
  bitrow::set_backend(bitrow::Backend::Scalar);
  EXPECT_EQ(bitrow::active_backend(), bitrow::Backend::Scalar);
  EXPECT_EQ(bitrow::backend_name(bitrow::Backend::Scalar), "scalar");
  bitrow::set_backend(before);
}
