#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "tecodes/array.hpp"

using namespace tecodes;

namespace {

BitArray random_array(std::mt19937_64& rng, std::size_t n, std::size_t L) {
  BitArray a(n, L);
  for (std::size_t i = 0; i < n; ++i) a.set_row_word(i, rng());
  return a;
}

// Every word reachable from x by deleting k bits then inserting k bits, by
// explicit edit scripts.
std::set<Bits> edit_ball(const Bits& x, std::size_t k) {
  std::set<Bits> shorter{x};
  for (std::size_t s = 0; s < k; ++s) {
    std::set<Bits> next;
    for (const auto& w : shorter)
      for (std::size_t p = 0; p < w.size(); ++p) {
        Bits v = w;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(p));
        next.insert(v);
      }
    shorter = next;
  }
  std::set<Bits> cur = shorter;
  for (std::size_t s = 0; s < k; ++s) {
    std::set<Bits> next;
    for (const auto& w : cur)
      for (std::size_t p = 0; p <= w.size(); ++p)
        for (std::uint8_t b : {0, 1}) {
          Bits v = w;
          v.insert(v.begin() + static_cast<std::ptrdiff_t>(p), b);
          next.insert(v);
        }
    cur = next;
  }
  return cur;
}

Bits word(std::uint64_t v, std::size_t L) {
  Bits b(L);
  for (std::size_t j = 0; j < L; ++j) b[j] = (v >> j) & 1;
  return b;
}

}  // namespace

TEST(TePattern, ExampleOne) {
  const auto x = parse_bit_array("101\n001\n");
  const auto y = apply_te_pattern(x, {2, 1});
  EXPECT_EQ(to_text(y), "1??\n00?\n");
}

TEST(TePattern, ZeroPatternKeepsArray) {
  const auto x = parse_bit_array("101\n011\n");
  const auto y = apply_te_pattern(x, {0, 0});
  EXPECT_EQ(y.known_bits(), x);
}

TEST(TePattern, FullRowErasure) {
  const auto y = apply_te_pattern(parse_bit_array("101\n011\n"), {3, 0});
  EXPECT_EQ(to_text(y), "???\n011\n");
  EXPECT_THROW(apply_te_pattern(BitArray(2, 3), {4, 0}), std::invalid_argument);
  EXPECT_THROW(apply_te_pattern(BitArray(2, 3), {1}), std::invalid_argument);
}

TEST(RhoTe, ExampleTwo) {
  const auto x = parse_bit_array("101\n001\n");
  const auto y = parse_bit_array("100\n011\n");
  EXPECT_EQ(rho_te_distance(x, y), 3u);
  EXPECT_EQ(rho_te_distance(x, x), 0u);
  auto z = x;
  z.flip(0, 0);
  EXPECT_EQ(rho_te_distance(x, z), 3u);
  EXPECT_THROW(rho_te_distance(x, BitArray(2, 4)), std::invalid_argument);
}

TEST(RhoTe, SupportSubsetDoesNotShrinkDistance) {
  // Z differs from X only where Y does, yet both are at distance 3.
  const auto x = parse_bit_array("101\n001\n");
  const auto y = parse_bit_array("110\n000\n");
  const auto z = parse_bit_array("111\n000\n");
  EXPECT_EQ(rho_te_distance(x, y), 3u);
  EXPECT_EQ(rho_te_distance(x, z), 3u);
}

TEST(RhoTe, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 5000; ++k) {
    const std::size_t n = 1 + rng() % 5, L = 1 + rng() % 8;
    const auto a = random_array(rng, n, L), b = random_array(rng, n, L), c = random_array(rng, n, L);
    const auto ab = rho_te_distance(a, b);
    ASSERT_EQ(ab, rho_te_distance(b, a));
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_LE(rho_te_distance(a, c), ab + rho_te_distance(b, c));
    ASSERT_EQ(ab, w_te(a ^ b));
  }
}

TEST(RhoTe, EqualsMinimumErasureWeightExhaustive3x3) {
  // Oracle: smallest ||p||_1 under which the two erased arrays coincide.
  const std::size_t n = 3, L = 3;
  std::mt19937_64 rng(2);
  const auto patterns = enumerate_patterns(n * L, L, n);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_array(rng, n, L), y = random_array(rng, n, L);
    std::size_t best = n * L + 1;
    for (const auto& p : patterns)
      if (apply_te_pattern(x, p) == apply_te_pattern(y, p)) best = std::min(best, pattern_weight(p));
    ASSERT_EQ(rho_te_distance(x, y), best);
  }
}

TEST(Patterns, SmallCounts) {
  EXPECT_EQ(enumerate_patterns(0, 4, 3), std::vector<TePattern>{TePattern(3, 0)});
  EXPECT_EQ(enumerate_patterns(1, 1, 2).size(), 3u);
  const std::set<TePattern> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}};
  const auto got = enumerate_patterns(2, 2, 2);
  EXPECT_EQ(std::set<TePattern>(got.begin(), got.end()), expected);
  EXPECT_EQ(got.size(), expected.size());
}

TEST(Patterns, LexicographicAndComplete) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t L = 0; L <= 3; ++L)
      for (std::size_t e = 0; e <= 5; ++e) {
        const auto got = enumerate_patterns(e, L, n);
        ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
        ASSERT_EQ(std::set<TePattern>(got.begin(), got.end()).size(), got.size());
        // Count by brute force over [0, L]^n.
        std::size_t count = 0;
        TePattern p(n, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
          if (i == n) {
            count += pattern_weight(p) <= e;
            return;
          }
          for (std::size_t v = 0; v <= L; ++v) {
            p[i] = v;
            rec(i + 1);
          }
        };
        rec(0);
        ASSERT_EQ(got.size(), count);
      }
}

TEST(Fll, Examples) {
  EXPECT_EQ(fll_distance(bits_from_string("0110"), bits_from_string("0110")), 0u);
  EXPECT_EQ(fll_distance(bits_from_string("0000"), bits_from_string("1111")), 4u);
  EXPECT_EQ(fll_distance(bits_from_string("0101"), bits_from_string("1010")), 1u);
  EXPECT_THROW(fll_distance(bits_from_string("01"), bits_from_string("011")), std::invalid_argument);
}

TEST(Fll, MatchesEditScriptsUpTo6) {
  for (std::size_t L = 1; L <= 6; ++L)
    for (std::uint64_t a = 0; a < (1u << L); ++a) {
      const Bits x = word(a, L);
      // Ball of radius k via explicit scripts; the distance to y is the
      // smallest k whose ball holds y.
      std::vector<std::set<Bits>> balls;
      for (std::size_t k = 0; k <= L; ++k) balls.push_back(edit_ball(x, k));
      for (std::uint64_t b = 0; b < (1u << L); ++b) {
        const Bits y = word(b, L);
        std::size_t k = 0;
        while (!balls[k].count(y)) ++k;
        ASSERT_EQ(fll_distance(x, y), k) << bits_to_string(x) << " " << bits_to_string(y);
      }
    }
}

TEST(Dsdc, Cases) {
  const auto x = parse_bit_array("0101\n1100\n0011\n");
  EXPECT_EQ(d_sdc_distance(x, x, 2), ExtDistance(0));
  auto y = x;
  y.flip(0, 1);
  EXPECT_EQ(d_sdc_distance(x, y, 0), std::nullopt);
  y.flip(2, 3);
  EXPECT_EQ(fll_distance(x.row(0), y.row(0)), 1u);
  EXPECT_EQ(d_sdc_distance(x, y, 1), ExtDistance(2));
  EXPECT_EQ(d_sdc_distance(y, x, 1), ExtDistance(2));
}

TEST(D1dc, Cases) {
  const auto x = parse_bit_array("0101\n1100\n0011\n");
  EXPECT_EQ(d1_dc_distance(x, x), ExtDistance(0));
  auto y = x;
  y.flip(0, 0);
  y.flip(2, 0);
  EXPECT_EQ(d1_dc_distance(x, y), ExtDistance(2));
  y.flip(1, 1);
  EXPECT_EQ(d1_dc_distance(x, y), std::nullopt);
}

TEST(Runs, Counts) {
  EXPECT_EQ(run_count(bits_from_string("0000")), 1u);
  EXPECT_EQ(run_count(bits_from_string("0101")), 4u);
  const auto s = run_stats(parse_bit_array("011\n110\n001\n"));
  EXPECT_EQ(s.per_row, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(s.total, 6u);
}

TEST(TextFormat, RoundTrips) {
  const std::string txt = "# comment\n0110\n1?\n";
  EXPECT_THROW(parse_bit_array(txt), std::invalid_argument);
  const auto e = parse_erased_array("01??\n1110\n");
  EXPECT_EQ(e.pattern(), (TePattern{2, 0}));
  EXPECT_EQ(parse_erased_array(to_text(e)), e);
  EXPECT_THROW(parse_erased_array("0?1\n"), std::invalid_argument);
  const RaggedArray r({bits_from_string("011"), {}, bits_from_string("1")}, 4);
  EXPECT_EQ(parse_ragged_array(to_text(r)), r);
  const auto x = parse_bit_array("0110\n1001\n");
  EXPECT_EQ(parse_bit_array(to_text(x)), x);
}
