#pragma once

// (t,1,e) tail-erasure-deletion arrays. Each row contributes the symbol
// theta = (VT syndrome, last e bits) over GF(2^(h+e)), and these symbols form a
// Reed-Solomon codeword with distance at least t + e + 1.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "tecodes/array.hpp"
#include "tecodes/errors.hpp"
#include "tecodes/rs.hpp"
#include "tecodes/vt.hpp"

namespace tecodes {

// Syndrome in bits 0..h-1, then x_{L-e+1}, ..., x_L in bits h..h+e-1.
inline FieldElement theta(const Bits& row, std::size_t e, unsigned h) {
  if (e > row.size()) throw std::invalid_argument("theta: tail longer than the row");
  auto v = static_cast<std::uint32_t>(vt_syndrome(row, std::uint64_t{1} << h));
  for (std::size_t u = 0; u < e; ++u)
    if (row[row.size() - e + u]) v |= std::uint32_t{1} << (h + u);
  return {v};
}

struct RowDigest {
  std::uint64_t syndrome = 0;
  Bits tail;
};

inline RowDigest split_theta(FieldElement th, std::size_t e, unsigned h) {
  RowDigest d;
  d.syndrome = th.value & ((std::uint32_t{1} << h) - 1);
  for (std::size_t u = 0; u < e; ++u) d.tail.push_back((th.value >> (h + u)) & 1U);
  return d;
}

// The last e positions avoid every power of two up to L.
inline bool ted_feasible(std::size_t L, std::size_t e) {
  const unsigned h = vt_h(L);
  return e + (std::size_t{1} << (h - 1)) < L + 1;
}

struct TedCodeSpec {
  std::size_t n = 0;
  std::size_t L = 0;
  std::size_t t = 0;
  std::size_t e = 0;
  unsigned h = 0;
  std::size_t R = 0;  // outer redundancy in symbols, at least t + e
  RsCode outer;

  // R = 0 selects R = t + e.
  TedCodeSpec(std::size_t n_, std::size_t L_, std::size_t t_, std::size_t e_, std::size_t R_ = 0)
      : n(n_), L(L_), t(t_), e(e_), h(vt_h(L_)), R(R_ ? R_ : t_ + e_),
        outer(make_outer(n_, L_, t_, e_, R_ ? R_ : t_ + e_)) {}

  std::size_t message_bits() const { return n * L - R * (e + h); }
  std::size_t redundancy_bits() const { return R * (e + h); }
  bool encodable() const { return ted_feasible(L, e); }

  std::string describe() const {
    return "code=ted n=" + std::to_string(n) + " L=" + std::to_string(L) + " t=" + std::to_string(t) +
           " e=" + std::to_string(e) + " outer=rs m=" + std::to_string(h + e) + " k=" + std::to_string(n - R);
  }

 private:
  static RsCode make_outer(std::size_t n, std::size_t L, std::size_t t, std::size_t e, std::size_t R) {
    if (n < 1 || L < 1) throw std::invalid_argument("TedCodeSpec: need n, L >= 1");
    if (e >= L) throw std::invalid_argument("TedCodeSpec: need e < L");
    if (t + e == 0 || R < t + e) throw std::invalid_argument("TedCodeSpec: outer redundancy must cover t + e");
    if (R >= n) throw std::invalid_argument("TedCodeSpec: outer redundancy must leave at least one data row");
    return RsCode(Field(vt_h(L) + static_cast<unsigned>(e)), n, n - R);
  }
};

inline bool ted_membership(const BitArray& x, const TedCodeSpec& spec) {
  if (x.n() != spec.n || x.L() != spec.L) return false;
  Symbols s(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) s[i] = theta(x.row(i), spec.e, spec.h);
  return spec.outer.is_codeword(s);
}

inline BitArray ted_encode(const Bits& message, const TedCodeSpec& spec) {
  if (!spec.encodable())
    throw std::invalid_argument("ted_encode: tail positions collide with VT redundancy (need e < L + 1 - 2^(h-1))");
  if (message.size() != spec.message_bits())
    throw std::invalid_argument("ted_encode: message must have " + std::to_string(spec.message_bits()) + " bits");
  const std::size_t k = spec.n - spec.R;
  BitArray x(spec.n, spec.L);
  std::size_t pos = 0;
  Symbols data(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < spec.L; ++j) x.set(i, j, message[pos++] != 0);
    data[i] = theta(x.row(i), spec.e, spec.h);
  }
  const Symbols word = spec.outer.encode(data);
  const std::size_t free_bits = spec.L - spec.h - spec.e;
  for (std::size_t r = 0; r < spec.R; ++r) {
    const RowDigest dg = split_theta(word[k + r], spec.e, spec.h);
    const auto first = message.begin() + static_cast<std::ptrdiff_t>(pos);
    Bits d(first, first + static_cast<std::ptrdiff_t>(free_bits));
    pos += free_bits;
    d.insert(d.end(), dg.tail.begin(), dg.tail.end());
    x.set_row(k + r, vt_systematic_encode(d, dg.syndrome, spec.L, spec.e));
  }
  return x;
}

// Inverse of ted_encode on codewords.
inline Bits ted_extract(const BitArray& x, const TedCodeSpec& spec) {
  const std::size_t k = spec.n - spec.R;
  Bits m;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < spec.L; ++j) m.push_back(x.get(i, j));
  for (std::size_t r = 0; r < spec.R; ++r) {
    const Bits d = vt_extract_data(x.row(k + r));
    m.insert(m.end(), d.begin(), d.end() - static_cast<std::ptrdiff_t>(spec.e));
  }
  return m;
}

inline BitArray ted_decode(const RaggedArray& y, const TedCodeSpec& spec) {
  if (y.n() != spec.n || y.L() != spec.L) throw std::invalid_argument("ted_decode: shape mismatch");
  ErasedSymbols received(spec.n);
  std::size_t short_rows = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    const auto len = y.row(i).size();
    if (len == spec.L) {
      received[i] = theta(y.row(i), spec.e, spec.h);
    } else if (len + spec.e + 1 >= spec.L) {
      ++short_rows;
    } else {
      throw ContractViolation("ted_decode: row " + std::to_string(i) + " is shorter than L - e - 1");
    }
  }
  if (short_rows > spec.t + spec.e)
    throw CapacityExceeded("ted_decode: " + std::to_string(short_rows) + " short rows exceed t + e = " +
                           std::to_string(spec.t + spec.e));
  const Symbols word = spec.outer.decode_codeword(received);
  BitArray x(spec.n, spec.L);
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (received[i]) {
      x.set_row(i, y.row(i));
      continue;
    }
    const RowDigest dg = split_theta(word[i], spec.e, spec.h);
    Bits row = y.row(i);
    const std::size_t missing = spec.L - row.size();
    // Refill all but one missing bit from the stored tail; the last one is
    // then a single deletion.
    row.insert(row.end(), dg.tail.end() - static_cast<std::ptrdiff_t>(missing - 1), dg.tail.end());
    const Bits full = vt_decode(row, dg.syndrome, spec.h);
    if (theta(full, spec.e, spec.h) != word[i])
      throw CorruptInput("ted_decode: row " + std::to_string(i) + " disagrees with its digest");
    x.set_row(i, full);
  }
  return x;
}

}  // namespace tecodes
