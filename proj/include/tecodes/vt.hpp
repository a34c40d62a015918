#pragma once

// Varshamov-Tenengolts codes with modulus 2^h, h = ceil(log2(L+1)).
// Positions are 1-based in all formulas; vectors are stored 0-based.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tecodes/array.hpp"
#include "tecodes/errors.hpp"
#include "tecodes/gf.hpp"

namespace tecodes {

inline unsigned vt_h(std::size_t L) { return ceil_log2(static_cast<std::uint64_t>(L) + 1); }

struct VtSpec {
  std::size_t L = 0;
  unsigned h = 0;
  std::uint64_t a = 0;

  VtSpec() = default;
  VtSpec(std::size_t len, std::uint64_t syndrome) : L(len), h(vt_h(len)), a(syndrome) {
    if (a >= modulus()) throw std::invalid_argument("VtSpec: syndrome out of range");
  }
  std::uint64_t modulus() const { return std::uint64_t{1} << h; }
  std::size_t data_bits() const { return L - h; }
};

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline std::uint64_t vt_syndrome(const Bits& x, std::uint64_t q) {
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j]) s += j + 1;
  return s % q;
}

// Restores the length-(len(y)+1) word of syndrome a (mod 2^h) from which y
// arose by a single deletion.
inline Bits vt_decode(const Bits& y, std::uint64_t a, unsigned h) {
  const std::uint64_t q = std::uint64_t{1} << h;
  const std::size_t L = y.size() + 1;
  std::size_t w = 0;
  for (auto b : y) w += b != 0;
  const std::uint64_t delta = (a % q + q - vt_syndrome(y, q)) % q;

  Bits x;
  x.reserve(L);
  if (delta <= w) {
    // Insert a 0 with exactly delta ones to its right.
    std::size_t ones_right = w;
    std::size_t pos = 0;
    while (ones_right > delta) {
      ones_right -= y[pos] != 0;
      ++pos;
    }
    x.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(pos));
    x.push_back(0);
    x.insert(x.end(), y.begin() + static_cast<std::ptrdiff_t>(pos), y.end());
  } else {
    // Insert a 1 with delta - w - 1 zeros to its left.
    const std::uint64_t zeros_left = delta - w - 1;
    if (zeros_left > y.size() - w) throw CorruptInput("vt_decode: no single insertion matches the syndrome");
    std::size_t zeros = 0;
    std::size_t pos = 0;
    while (zeros < zeros_left) {
      zeros += y[pos] == 0;
      ++pos;
    }
    x.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(pos));
    x.push_back(1);
    x.insert(x.end(), y.begin() + static_cast<std::ptrdiff_t>(pos), y.end());
  }
  if (vt_syndrome(x, q) != a % q) throw CorruptInput("vt_decode: reconstruction misses the syndrome");
  return x;
}

inline Bits vt_decode(const Bits& y, const VtSpec& spec) {
  if (y.size() + 1 != spec.L) throw std::invalid_argument("vt_decode: expected exactly one deletion");
  return vt_decode(y, spec.a, spec.h);
}

// Places d into the non-power-of-two positions (in order) and fills positions
// 1, 2, 4, ..., 2^(h-1) so the syndrome equals a. When tail_len > 0 the last
// tail_len positions must all be non-powers; they then carry the last tail_len
// bits of d.
inline Bits vt_systematic_encode(const Bits& d, std::uint64_t a, std::size_t L, std::size_t tail_len = 0) {
  const unsigned h = vt_h(L);
  const std::uint64_t q = std::uint64_t{1} << h;
  if (d.size() != L - h) throw std::invalid_argument("vt_systematic_encode: data length must be L - h");
  if (a >= q) throw std::invalid_argument("vt_systematic_encode: syndrome out of range");
  if (tail_len > L - h) throw std::invalid_argument("vt_systematic_encode: tail longer than the data");
  for (std::size_t pos = L - tail_len + 1; pos <= L; ++pos)
    if (is_power_of_two(pos)) throw std::invalid_argument("vt_systematic_encode: tail overlaps a redundancy position");

  Bits x(L, 0);
  std::size_t k = 0;
  for (std::size_t pos = 1; pos <= L; ++pos)
    if (!is_power_of_two(pos)) x[pos - 1] = d[k++];
  const std::uint64_t deficit = (a + q - vt_syndrome(x, q)) % q;
  for (unsigned i = 0; i < h; ++i)
    if ((deficit >> i) & 1U) x[(std::size_t{1} << i) - 1] = 1;
  return x;
}

// Inverse of the data placement: the bits at non-power positions.
inline Bits vt_extract_data(const Bits& x) {
  Bits d;
  for (std::size_t pos = 1; pos <= x.size(); ++pos)
    if (!is_power_of_two(pos)) d.push_back(x[pos - 1]);
  return d;
}

}  // namespace tecodes
