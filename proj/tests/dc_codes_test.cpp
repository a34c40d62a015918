#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "tecodes/dc_codes.hpp"

using namespace tecodes;

namespace {

Bits random_bits(std::mt19937_64& rng, std::size_t len) {
  Bits b(len);
  for (auto& v : b) v = rng() & 1;
  return b;
}

Bits delete_at(Bits row, std::size_t p) {
  row.erase(row.begin() + static_cast<std::ptrdiff_t>(p));
  return row;
}

// Syndrome sum_j j * x_j mod 2^h computed directly.
std::uint32_t ref_syndrome(const Bits& row, unsigned h) {
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < row.size(); ++j) s += (j + 1) * row[j];
  return static_cast<std::uint32_t>(s % (std::uint64_t{1} << h));
}

// Every outer codeword, by encoding all messages.
std::set<std::vector<std::uint32_t>> all_outer_words(const RsCode& rs) {
  std::set<std::vector<std::uint32_t>> out;
  const std::uint64_t q = rs.field().size();
  Symbols m(rs.k());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rs.k(); ++i) total *= q;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t r = v;
    for (std::size_t i = 0; i < rs.k(); ++i) {
      m[i] = {static_cast<std::uint32_t>(r % q)};
      r /= q;
    }
    std::vector<std::uint32_t> w;
    for (auto s : rs.encode(m)) w.push_back(s.value);
    out.insert(w);
  }
  return out;
}

}  // namespace

TEST(DcCode, FlagshipParameters) {
  DcCodeSpec spec(7, 5, 2);
  EXPECT_EQ(spec.h, 3u);
  EXPECT_EQ(spec.outer.field().degree(), 3u);
  EXPECT_EQ(spec.outer.n(), 7u);
  EXPECT_EQ(spec.outer.k(), 5u);
  EXPECT_EQ(spec.outer.min_distance(), 3u);
  EXPECT_EQ(spec.message_bits(), 29u);
  EXPECT_EQ(spec.redundancy_bits(), 6u);
}

TEST(DcCode, RejectsBadParameters) {
  EXPECT_THROW(DcCodeSpec(3, 3, 0), std::invalid_argument);
  EXPECT_THROW(DcCodeSpec(3, 3, 3), std::invalid_argument);
  EXPECT_THROW(DcCodeSpec(3, 3, 2, 1), std::invalid_argument);
  // GF(4) allows at most 5 rows.
  EXPECT_THROW(DcCodeSpec(6, 3, 1), std::invalid_argument);
  DcCodeSpec spec(7, 5, 2);
  EXPECT_THROW(dc_encode(Bits(28), spec), std::invalid_argument);
}

TEST(DcCode, ZeroMessageGivesZeroArray) {
  DcCodeSpec spec(7, 5, 2);
  const auto x = dc_encode(Bits(spec.message_bits()), spec);
  EXPECT_EQ(x, BitArray(7, 5));
  EXPECT_TRUE(dc_membership(BitArray(7, 5), spec));
}

TEST(DcCode, MembershipMatchesDirectRecheck) {
  DcCodeSpec spec(7, 5, 2);
  const auto words = all_outer_words(spec.outer);
  ASSERT_EQ(words.size(), 32768u);
  auto oracle = [&](const BitArray& x) {
    std::vector<std::uint32_t> s;
    for (std::size_t i = 0; i < x.n(); ++i) s.push_back(ref_syndrome(x.row(i), spec.h));
    return words.count(s) > 0;
  };
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = dc_encode(random_bits(rng, spec.message_bits()), spec);
    ASSERT_TRUE(dc_membership(x, spec));
    ASSERT_TRUE(oracle(x));
    auto y = x;
    y.flip(5 + rng() % 2, rng() % 5);
    ASSERT_EQ(dc_membership(y, spec), oracle(y));
    ASSERT_FALSE(dc_membership(y, spec));
  }
}

TEST(DcCode, FirstRowsCarryMessageVerbatim) {
  DcCodeSpec spec(7, 5, 2);
  std::mt19937_64 rng(4);
  const Bits m = random_bits(rng, spec.message_bits());
  const auto x = dc_encode(m, spec);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) ASSERT_EQ(x.get(i, j), m[i * 5 + j] != 0);
  EXPECT_EQ(dc_extract(x, spec), m);
}

TEST(DcCode, InjectiveExhaustive3x3) {
  DcCodeSpec spec(3, 3, 1);
  ASSERT_EQ(spec.message_bits(), 7u);
  std::set<BitArray> seen;
  for (std::uint32_t v = 0; v < 128; ++v) {
    Bits m(7);
    for (std::size_t j = 0; j < 7; ++j) m[j] = (v >> j) & 1;
    const auto x = dc_encode(m, spec);
    ASSERT_TRUE(dc_membership(x, spec));
    ASSERT_EQ(dc_extract(x, spec), m);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 128u);
}

TEST(DcCode, CosetsPartitionTheSpace3x3) {
  // Shift c of the outer code: arrays whose syndrome word lies in C + c.
  DcCodeSpec spec(3, 3, 1);
  std::map<std::vector<std::uint32_t>, std::size_t> classes;
  std::size_t members = 0;
  for (std::uint32_t v = 0; v < 512; ++v) {
    BitArray x(3, 3);
    for (std::size_t b = 0; b < 9; ++b) x.set(b / 3, b % 3, (v >> b) & 1);
    Symbols s(3);
    for (std::size_t i = 0; i < 3; ++i) s[i] = {ref_syndrome(x.row(i), spec.h)};
    const auto w = spec.outer.encode({s[0], s[1]});
    std::vector<std::uint32_t> shift{(w[2] + s[2]).value};
    ++classes[shift];
    members += dc_membership(x, spec);
  }
  EXPECT_EQ(classes.size(), std::size_t{1} << (spec.R * spec.h));
  std::size_t total = 0;
  for (const auto& [k, c] : classes) total += c;
  EXPECT_EQ(total, 512u);
  EXPECT_EQ(members, classes[{0}]);
  EXPECT_GE(members, std::size_t{1} << spec.message_bits());
}

TEST(DcCode, FlagshipExhaustiveDeletionSweep) {
  DcCodeSpec spec(7, 5, 2);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = dc_encode(random_bits(rng, spec.message_bits()), spec);
    ASSERT_EQ(dc_decode(RaggedArray::from(x), spec), x);
    for (std::size_t a = 0; a < 7; ++a)
      for (std::size_t b = a; b < 7; ++b)
        for (std::size_t pa = 0; pa < 5; ++pa)
          for (std::size_t pb = 0; pb < 5; ++pb) {
            auto rows = RaggedArray::from(x).rows();
            rows[a] = delete_at(rows[a], pa);
            if (b != a) rows[b] = delete_at(rows[b], pb);
            ASSERT_EQ(dc_decode(RaggedArray(rows, 5), spec), x) << a << " " << b << " " << pa << " " << pb;
          }
  }
}

TEST(DcCode, RoundTripAcrossSmallShapes) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t L = 3; L <= 6; ++L)
      for (std::size_t t = 1; t < n && t <= 2; ++t) {
        if (n > (std::size_t{1} << vt_h(L)) + 1) continue;
        DcCodeSpec spec(n, L, t);
        for (int trial = 0; trial < 3; ++trial) {
          const auto x = dc_encode(random_bits(rng, spec.message_bits()), spec);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t pa = 0; pa < L; ++pa) {
              auto rows = RaggedArray::from(x).rows();
              rows[a] = delete_at(rows[a], pa);
              if (t == 2) rows[(a + 1) % n] = delete_at(rows[(a + 1) % n], (pa * 3) % L);
              ASSERT_EQ(dc_decode(RaggedArray(rows, L), spec), x) << n << "x" << L << " t=" << t;
            }
        }
      }
}

TEST(DcCode, DecoderErrors) {
  DcCodeSpec spec(7, 5, 2);
  const auto x = dc_encode(Bits(spec.message_bits()), spec);
  auto rows = RaggedArray::from(x).rows();
  for (std::size_t i = 0; i < 3; ++i) rows[i].pop_back();
  EXPECT_THROW(dc_decode(RaggedArray(rows, 5), spec), CapacityExceeded);
  rows = RaggedArray::from(x).rows();
  rows[0].resize(3);
  EXPECT_THROW(dc_decode(RaggedArray(rows, 5), spec), ContractViolation);
}
