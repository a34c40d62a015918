#pragma once

// (t,1)-deletion-correcting arrays: every row is a VT word whose syndrome,
// read as a field symbol, belongs to an outer Reed-Solomon codeword. A short
// row marks its own position, so the outer code only sees erasures.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "tecodes/array.hpp"
#include "tecodes/errors.hpp"
#include "tecodes/rs.hpp"
#include "tecodes/vt.hpp"

namespace tecodes {

struct DcCodeSpec {
  std::size_t n = 0;
  std::size_t L = 0;
  std::size_t t = 0;
  unsigned h = 0;
  std::size_t R = 0;  // outer redundancy in symbols, at least t
  RsCode outer;

  // R = 0 selects R = t.
  DcCodeSpec(std::size_t n_, std::size_t L_, std::size_t t_, std::size_t R_ = 0)
      : n(n_), L(L_), t(t_), h(vt_h(L_)), R(R_ ? R_ : t_), outer(make_outer(n_, L_, t_, R_ ? R_ : t_)) {}

  std::size_t message_bits() const { return n * L - R * h; }
  std::size_t redundancy_bits() const { return R * h; }

  std::string describe() const {
    return "code=dc n=" + std::to_string(n) + " L=" + std::to_string(L) + " t=" + std::to_string(t) +
           " outer=rs m=" + std::to_string(h) + " k=" + std::to_string(n - R);
  }

 private:
  static RsCode make_outer(std::size_t n, std::size_t L, std::size_t t, std::size_t R) {
    if (n < 1 || L < 1) throw std::invalid_argument("DcCodeSpec: need n, L >= 1");
    if (t < 1 || R < t) throw std::invalid_argument("DcCodeSpec: need 1 <= t <= R");
    if (R >= n) throw std::invalid_argument("DcCodeSpec: outer redundancy must leave at least one data row");
    return RsCode(Field(vt_h(L)), n, n - R);
  }
};

// The syndrome's binary representation as a field symbol.
inline FieldElement row_symbol(const Bits& row, unsigned h) {
  return {static_cast<std::uint32_t>(vt_syndrome(row, std::uint64_t{1} << h))};
}

inline bool dc_membership(const BitArray& x, const DcCodeSpec& spec) {
  if (x.n() != spec.n || x.L() != spec.L) return false;
  Symbols s(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) s[i] = row_symbol(x.row(i), spec.h);
  return spec.outer.is_codeword(s);
}

inline BitArray dc_encode(const Bits& message, const DcCodeSpec& spec) {
  if (message.size() != spec.message_bits())
    throw std::invalid_argument("dc_encode: message must have " + std::to_string(spec.message_bits()) + " bits");
  const std::size_t k = spec.n - spec.R;
  BitArray x(spec.n, spec.L);
  std::size_t pos = 0;
  Symbols data(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < spec.L; ++j) x.set(i, j, message[pos++] != 0);
    data[i] = row_symbol(x.row(i), spec.h);
  }
  const Symbols word = spec.outer.encode(data);
  const std::size_t per_row = spec.L - spec.h;
  for (std::size_t r = 0; r < spec.R; ++r) {
    const auto first = message.begin() + static_cast<std::ptrdiff_t>(pos);
    const Bits d(first, first + static_cast<std::ptrdiff_t>(per_row));
    pos += per_row;
    x.set_row(k + r, vt_systematic_encode(d, word[k + r].value, spec.L));
  }
  return x;
}

// Inverse of dc_encode on codewords.
inline Bits dc_extract(const BitArray& x, const DcCodeSpec& spec) {
  const std::size_t k = spec.n - spec.R;
  Bits m;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < spec.L; ++j) m.push_back(x.get(i, j));
  for (std::size_t r = 0; r < spec.R; ++r) {
    const Bits d = vt_extract_data(x.row(k + r));
    m.insert(m.end(), d.begin(), d.end());
  }
  return m;
}

inline BitArray dc_decode(const RaggedArray& y, const DcCodeSpec& spec) {
  if (y.n() != spec.n || y.L() != spec.L) throw std::invalid_argument("dc_decode: shape mismatch");
  ErasedSymbols received(spec.n);
  std::size_t short_rows = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    const auto len = y.row(i).size();
    if (len == spec.L) {
      received[i] = row_symbol(y.row(i), spec.h);
    } else if (len + 1 == spec.L) {
      ++short_rows;
    } else {
      throw ContractViolation("dc_decode: row " + std::to_string(i) + " lost more than one bit");
    }
  }
  if (short_rows > spec.t)
    throw CapacityExceeded("dc_decode: " + std::to_string(short_rows) + " damaged rows exceed t = " +
                           std::to_string(spec.t));
  const Symbols word = spec.outer.decode_codeword(received);
  BitArray x(spec.n, spec.L);
  for (std::size_t i = 0; i < spec.n; ++i)
    x.set_row(i, received[i] ? y.row(i) : vt_decode(y.row(i), word[i].value, spec.h));
  return x;
}

}  // namespace tecodes
