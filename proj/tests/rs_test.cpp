#include <gtest/gtest.h>

#include <random>

#include "tecodes/rs.hpp"

using namespace tecodes;

namespace {

Symbols random_message(const Field& f, std::size_t k, std::mt19937_64& rng) {
  Symbols m(k);
  for (auto& s : m) s = f.element(rng() % f.size());
  return m;
}

// All k-subsets of [0, n).
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      idx[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

TEST(Rs, ZeroMessage) {
  RsCode c(Field(3), 7, 5);
  EXPECT_EQ(c.encode(Symbols(5)), Symbols(7));
  EXPECT_EQ(c.min_distance(), 3u);
}

TEST(Rs, Systematic) {
  std::mt19937_64 rng(1);
  RsCode c(Field(3), 7, 5);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_message(c.field(), 5, rng);
    const auto w = c.encode(m);
    EXPECT_TRUE(std::equal(m.begin(), m.end(), w.begin()));
    EXPECT_TRUE(c.is_codeword(w));
  }
}

TEST(Rs, EveryKColumnsInvertible) {
  for (unsigned m : {2u, 3u}) {
    const Field f(m);
    for (std::size_t n = 2; n <= std::min<std::size_t>(8, f.size() + 1); ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        RsCode c(f, n, k);
        for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
          ASSERT_EQ(c.generator().select_columns(s).rank(), k) << "m=" << m << " n=" << n << " k=" << k;
        });
      }
  }
}

TEST(Rs, ErasureSweepUpTo8) {
  std::mt19937_64 rng(2);
  for (unsigned m : {2u, 3u}) {
    const Field f(m);
    for (std::size_t n = 2; n <= std::min<std::size_t>(8, f.size() + 1); ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        RsCode c(f, n, k);
        for (int trial = 0; trial < 3; ++trial) {
          const auto msg = random_message(f, k, rng);
          const auto w = c.encode(msg);
          for (std::size_t e = 0; e <= n - k; ++e)
            for_each_subset(n, e, [&](const std::vector<std::size_t>& erased) {
              ErasedSymbols r(w.begin(), w.end());
              for (auto j : erased) r[j].reset();
              ASSERT_EQ(c.decode_erasures(r), msg);
            });
        }
      }
  }
}

TEST(Rs, CapacityAndConsistency) {
  RsCode c(Field(3), 7, 5);
  std::mt19937_64 rng(3);
  const auto w = c.encode(random_message(c.field(), 5, rng));
  ErasedSymbols r(w.begin(), w.end());
  EXPECT_EQ(c.decode_erasures(r), Symbols(w.begin(), w.begin() + 5));
  r[0].reset();
  r[3].reset();
  r[6].reset();
  EXPECT_THROW(c.decode_erasures(r), CapacityExceeded);
  ErasedSymbols bad(w.begin(), w.end());
  bad[1] = *bad[1] + c.field().one();
  bad[6].reset();
  EXPECT_THROW(c.decode_erasures(bad), NotACodeword);
}

TEST(Rs, LengthLimits) {
  EXPECT_NO_THROW(RsCode(Field(3), 9, 3));
  EXPECT_THROW(RsCode(Field(3), 10, 3), std::invalid_argument);
  EXPECT_THROW(RsCode(Field(3), 7, 0), std::invalid_argument);
}
