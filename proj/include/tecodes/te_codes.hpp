#pragma once

// Linear tail-erasure codes described by a three-dimensional parity-check
// array: one column h(i,j) in GF(2)^r per array cell. An array X is a codeword
// iff sum over cells of x(i,j) * h(i,j) = 0.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tecodes/array.hpp"
#include "tecodes/errors.hpp"
#include "tecodes/gf.hpp"

namespace tecodes {

class TeParityCheck {
 public:
  TeParityCheck() = default;
  TeParityCheck(std::size_t r, std::size_t n, std::size_t L) : r_(r), n_(n), L_(L), cols_(n * L, BitVec(r)) {}

  std::size_t r() const { return r_; }
  std::size_t n() const { return n_; }
  std::size_t L() const { return L_; }

  const BitVec& column(std::size_t i, std::size_t j) const { return cols_[i * L_ + j]; }
  void set_column(std::size_t i, std::size_t j, BitVec h) {
    if (h.size() != r_) throw std::invalid_argument("TeParityCheck: column height mismatch");
    cols_[i * L_ + j] = std::move(h);
  }
  const std::vector<BitVec>& columns() const { return cols_; }

  // r x nL matrix, column index i*L + j.
  BitMatrix matrix() const { return BitMatrix::from_columns(cols_, r_); }

  std::size_t rank() const { return gf2_rank(std::span<const BitVec>(cols_)); }
  std::size_t redundancy() const { return rank(); }
  std::size_t dimension() const { return n_ * L_ - rank(); }

  BitVec syndrome(const BitArray& x) const {
    if (x.n() != n_ || x.L() != L_) throw std::invalid_argument("TeParityCheck: array shape mismatch");
    BitVec s(r_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < L_; ++j)
        if (x.get(i, j)) s ^= column(i, j);
    return s;
  }
  bool is_codeword(const BitArray& x) const { return !syndrome(x).any(); }

  // The multiset of columns under a TE pattern, listed from the last cell of
  // each row backwards.
  std::vector<BitVec> erased_columns(const TePattern& p) const {
    check_pattern(p, n_, L_);
    std::vector<BitVec> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t u = 0; u < p[i]; ++u) out.push_back(column(i, L_ - 1 - u));
    return out;
  }

  bool pattern_independent(const TePattern& p) const {
    XorBasis basis(r_);
    for (auto& c : erased_columns(p))
      if (!basis.insert(c)) return false;
    return true;
  }

  friend bool operator==(const TeParityCheck&, const TeParityCheck&) = default;

 private:
  std::size_t r_ = 0;
  std::size_t n_ = 0;
  std::size_t L_ = 0;
  std::vector<BitVec> cols_;
};

struct TeCodeSpec {
  std::size_t n = 0;
  std::size_t L = 0;
  std::size_t d = 0;  // claimed minimum rho_TE-distance
  std::size_t redundancy = 0;
  std::string provenance;  // base-odd | base-even | parity | cyclic-d5 | hasse | two-column
  std::string base;        // how the base code was obtained
  unsigned field_m = 0;    // extension degree when built over GF(2^m), else 0
  bool validated = false;  // claimed d confirmed by verify_min_distance
  TeParityCheck H;
};

// ---------------------------------------------------------------------------
// Base codes (r x N binary parity-check matrices)
// ---------------------------------------------------------------------------

inline BitMatrix keep_last_columns(const BitMatrix& h, std::size_t count) {
  if (count > h.cols()) throw std::invalid_argument("shortening: more columns requested than available");
  BitMatrix out(h.rows(), count);
  const std::size_t off = h.cols() - count;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < count; ++c)
      if (h.get(r, off + c)) out.set(r, c);
  return out;
}

// Column j (1-based) is the binary representation of j.
inline BitMatrix hamming_parity(unsigned m) {
  const std::size_t N = (std::size_t{1} << m) - 1;
  BitMatrix h(m, N);
  for (std::size_t j = 1; j <= N; ++j)
    for (unsigned b = 0; b < m; ++b)
      if ((j >> b) & 1U) h.set(b, j - 1);
  return h;
}

// [N, N - m, 3] with m = ceil(log2(N + 1)); shortened by dropping leading columns.
inline BitMatrix shortened_hamming(std::size_t N) {
  if (N < 3) throw std::invalid_argument("shortened_hamming: need N >= 3");
  const unsigned m = ceil_log2(N + 1);
  return keep_last_columns(hamming_parity(m), N);
}

// Adds an overall parity check: [[H, 0], [1 ... 1, 1]].
inline BitMatrix parity_extend(const BitMatrix& h) {
  BitMatrix out(h.rows() + 1, h.cols() + 1);
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (h.get(r, c)) out.set(r, c);
  for (std::size_t c = 0; c <= h.cols(); ++c) out.set(h.rows(), c);
  return out;
}

// Narrow-sense binary BCH of length 2^m - 1 and designed distance 2t + 1:
// rows alpha^((2i-1) j) for i = 1..t, binary-expanded. Rows may be dependent.
inline BitMatrix bch_parity(unsigned m, std::size_t t) {
  const Field f(m);
  const std::size_t N = f.multiplicative_order();
  FieldMatrix fm(f, t, N);
  for (std::size_t i = 1; i <= t; ++i)
    for (std::size_t j = 0; j < N; ++j) fm(i - 1, j) = f.alpha_pow(static_cast<std::int64_t>((2 * i - 1) * j));
  return binary_expand(fm);
}

// Shortened BCH of length N with designed distance 2t + 1, m = ceil(log2(N + 1)).
inline BitMatrix shortened_bch(std::size_t N, std::size_t t) {
  const unsigned m = std::max(1U, ceil_log2(N + 1));
  return keep_last_columns(bch_parity(m, t), N);
}

// Cyclic code of length 2^m - 1 with generator (x+1) m1(x) m3(x): columns
// (alpha^j, alpha^(3j), 1), 2m + 1 rows, minimum distance at least 6.
inline BitMatrix cyclic_d6_parity(unsigned m) {
  if (m < 3) throw std::invalid_argument("cyclic_d6_parity: need m >= 3");
  const Field f(m);
  const std::size_t N = f.multiplicative_order();
  FieldMatrix fm(f, 2, N);
  for (std::size_t j = 0; j < N; ++j) {
    fm(0, j) = f.alpha_pow(static_cast<std::int64_t>(j));
    fm(1, j) = f.alpha_pow(static_cast<std::int64_t>(3 * j));
  }
  const BitMatrix ex = binary_expand(fm);
  BitMatrix h(2 * m + 1, N);
  for (std::size_t r = 0; r < ex.rows(); ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (ex.get(r, c)) h.set(r, c);
  for (std::size_t c = 0; c < N; ++c) h.set(2 * m, c);
  return h;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

// Odd distance d = 2t + 1 from an [nt, k, d] base code. Row i holds base block
// i followed by block i+1 reversed; the last row wraps to block 0.
inline TeParityCheck construct_odd(const BitMatrix& base_h, std::size_t n, std::size_t t) {
  if (n == 2) throw std::invalid_argument("construct_odd: n = 2 is degenerate");
  if (n < 1 || t < 1) throw std::invalid_argument("construct_odd: need n >= 1 and t >= 1");
  if (base_h.cols() != n * t) throw std::invalid_argument("construct_odd: base code length must be n*t");
  const std::size_t r = base_h.rows();
  TeParityCheck H(r, n, 2 * t);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    for (std::size_t u = 0; u < t; ++u) {
      H.set_column(i, u, base_h.column(i * t + u));
      H.set_column(i, t + u, base_h.column(next * t + (t - 1 - u)));
    }
  }
  return H;
}

// Even distance d + 1 from an [nt + 1, k, d + 1] base code whose last column
// is shared by all rows and sits between the two halves.
inline TeParityCheck construct_even(const BitMatrix& base_h_star, std::size_t n, std::size_t t) {
  if (n == 2) throw std::invalid_argument("construct_even: n = 2 is degenerate");
  if (n < 1 || t < 1) throw std::invalid_argument("construct_even: need n >= 1 and t >= 1");
  if (base_h_star.cols() != n * t + 1) throw std::invalid_argument("construct_even: base code length must be n*t + 1");
  const std::size_t r = base_h_star.rows();
  const BitVec shared = base_h_star.column(n * t);
  TeParityCheck H(r, n, 2 * t + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    for (std::size_t u = 0; u < t; ++u) {
      H.set_column(i, u, base_h_star.column(i * t + u));
      H.set_column(i, t + 1 + u, base_h_star.column(next * t + (t - 1 - u)));
    }
    H.set_column(i, t, shared);
  }
  return H;
}

// Minimum distance 2: one parity bit over every entry.
inline TeParityCheck construct_parity(std::size_t n, std::size_t L) {
  TeParityCheck H(1, n, L);
  BitVec one(1);
  one.set(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < L; ++j) H.set_column(i, j, one);
  return H;
}

inline unsigned cyclic_d5_degree(std::size_t n) { return ceil_log2(n + 5); }

// n x 4 code of distance 5 from the shortened distance-6 cyclic code of
// length n + 4. Row i: (h[n+4], h[n+3], h[i+1] + h[i+2], h[i]), 1-based.
inline TeParityCheck construct_cyclic_d5(std::size_t n) {
  if (n < 1) throw std::invalid_argument("construct_cyclic_d5: need n >= 1");
  const unsigned m = cyclic_d5_degree(n);
  const BitMatrix base = keep_last_columns(cyclic_d6_parity(m), n + 4);
  auto h = [&](std::size_t k) { return base.column(k - 1); };
  TeParityCheck H(base.rows(), n, 4);
  for (std::size_t i = 1; i <= n; ++i) {
    H.set_column(i - 1, 0, h(n + 4));
    H.set_column(i - 1, 1, h(n + 3));
    H.set_column(i - 1, 2, h(i + 1) ^ h(i + 2));
    H.set_column(i - 1, 3, h(i));
  }
  return H;
}

// C(a, b) mod 2 by Lucas' theorem.
inline bool binomial_odd(std::size_t a, std::size_t b) { return b <= a && (b & ~a) == 0; }

inline TeParityCheck from_field_columns(const Field& f, const std::vector<std::vector<FieldElement>>& cols,
                                        std::size_t n, std::size_t L) {
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  FieldMatrix fm(f, rows, n * L);
  for (std::size_t c = 0; c < n * L; ++c)
    for (std::size_t k = 0; k < rows; ++k) fm(k, c) = cols[c][k];
  const BitMatrix bin = binary_expand(fm);
  TeParityCheck H(bin.rows(), n, L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < L; ++j) H.set_column(i, j, bin.column(i * L + j));
  return H;
}

inline unsigned hasse_degree(std::size_t n) { return std::max(1U, ceil_log2(n + 1)); }

// Hasse-derivative construction over GF(2^m), m = ceil(log2(n + 1)), corrects
// any e tail erasures with no restriction relating e and L.
// Entry k of column (i, j), 1-based: C(k, L - j) * beta_i^(k - L + j), beta_i = alpha^i.
inline TeParityCheck construct_hasse(std::size_t n, std::size_t L, std::size_t e) {
  if (n < 1 || L < 1 || e < 1) throw std::invalid_argument("construct_hasse: need n, L, e >= 1");
  const Field f(hasse_degree(n));
  std::vector<std::vector<FieldElement>> cols(n * L, std::vector<FieldElement>(e));
  for (std::size_t i = 1; i <= n; ++i) {
    const FieldElement beta = f.alpha_pow(static_cast<std::int64_t>(i));
    for (std::size_t j = 1; j <= L; ++j)
      for (std::size_t k = 0; k < e; ++k)
        if (binomial_odd(k, L - j)) cols[(i - 1) * L + (j - 1)][k] = f.pow(beta, static_cast<std::int64_t>(k + j - L));
  }
  return from_field_columns(f, cols, n, L);
}

// n x 2 code correcting any 5 tail erasures: h(i,1) = (1, 0, 1, b^2),
// h(i,2) = (0, 1, b, b^3) with b = alpha^i over GF(2^m), 2^m > n.
inline TeParityCheck construct_two_column(std::size_t n) {
  if (n < 1) throw std::invalid_argument("construct_two_column: need n >= 1");
  const Field f(hasse_degree(n));
  std::vector<std::vector<FieldElement>> cols(2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    const FieldElement b = f.alpha_pow(static_cast<std::int64_t>(i));
    cols[(i - 1) * 2] = {f.one(), f.zero(), f.one(), f.pow(b, 2)};
    cols[(i - 1) * 2 + 1] = {f.zero(), f.one(), b, f.pow(b, 3)};
  }
  return from_field_columns(f, cols, n, 2);
}

// Widens an n x e code to n x (e + extra) by putting `extra` unchecked columns
// in front; they are never reached by up to e tail erasures.
inline TeParityCheck prepend_columns(const TeParityCheck& H, std::size_t extra) {
  TeParityCheck out(H.r(), H.n(), H.L() + extra);
  for (std::size_t i = 0; i < H.n(); ++i)
    for (std::size_t j = 0; j < H.L(); ++j) out.set_column(i, extra + j, H.column(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Encoding and erasure decoding
// ---------------------------------------------------------------------------

// Systematic encoder derived from the reduced row echelon form of H: message
// bits occupy the non-pivot cells (row-major order), pivot cells are parity.
class TeEncoder {
 public:
  explicit TeEncoder(const TeParityCheck& H) : n_(H.n()), L_(H.L()), rref_(H.matrix()) {
    pivots_ = gf2_rref(rref_);
    std::vector<bool> is_pivot(n_ * L_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t c = 0; c < n_ * L_; ++c)
      if (!is_pivot[c]) free_.push_back(c);
  }

  std::size_t k() const { return free_.size(); }
  std::size_t n() const { return n_; }
  std::size_t L() const { return L_; }
  const std::vector<std::size_t>& message_cells() const { return free_; }
  const std::vector<std::size_t>& parity_cells() const { return pivots_; }

  BitArray encode(const Bits& message) const {
    if (message.size() != k()) throw std::invalid_argument("TeEncoder::encode: message length must be k");
    BitVec x(n_ * L_);
    for (std::size_t u = 0; u < free_.size(); ++u)
      if (message[u]) x.set(free_[u]);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      // Row r reads x[pivot] + sum over free cells = 0.
      BitVec masked = rref_.row(r);
      masked.set(pivots_[r], false);
      if (masked.dot(x)) x.set(pivots_[r]);
    }
    BitArray out(n_, L_);
    for (std::size_t c = 0; c < n_ * L_; ++c)
      if (x.get(c)) out.set(c / L_, c % L_);
    return out;
  }

  Bits extract(const BitArray& x) const {
    Bits m;
    for (auto c : free_) m.push_back(x.get(c / L_, c % L_));
    return m;
  }

 private:
  std::size_t n_;
  std::size_t L_;
  BitMatrix rref_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

inline TeEncoder derive_generator(const TeParityCheck& H) { return TeEncoder(H); }

// Fills the erased suffixes so the result satisfies every parity check.
inline BitArray te_decode(const TeParityCheck& H, const ErasedArray& y) {
  if (y.n() != H.n() || y.L() != H.L()) throw std::invalid_argument("te_decode: shape mismatch");
  const BitVec target = H.syndrome(y.known_bits());  // erased cells read as zero
  std::vector<BitVec> cols;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < y.n(); ++i)
    for (std::size_t j = y.L() - y.pattern()[i]; j < y.L(); ++j) {
      cols.push_back(H.column(i, j));
      cells.emplace_back(i, j);
    }
  BitArray x = y.known_bits();
  if (cells.empty()) {
    if (target.any()) throw NotACodeword("te_decode: received array fails the parity checks");
    return x;
  }
  const auto sol = gf2_solve(BitMatrix::from_columns(cols, H.r()), target);
  if (sol.status == SolveStatus::inconsistent) throw NotACodeword("te_decode: no codeword matches the unerased cells");
  if (sol.status == SolveStatus::underdetermined) throw Ambiguous("te_decode: erasure pattern admits several codewords");
  for (std::size_t u = 0; u < cells.size(); ++u) x.set(cells[u].first, cells[u].second, sol.x.get(u));
  return x;
}

// ---------------------------------------------------------------------------
// Minimum distance verification
// ---------------------------------------------------------------------------

struct DistanceVerdict {
  // Exact minimum distance when `exact`; otherwise a lower bound (all
  // patterns up to weight max_e were independent).
  std::size_t d = 0;
  bool exact = false;
  std::optional<TePattern> witness;  // a dependent pattern of weight d when exact
  std::size_t patterns_checked = 0;
};

// The minimum weight of a TE pattern whose column multiset is dependent, over
// patterns of weight at most max_e. Depth-first over rows, inserting each
// row's erased columns from the end, so every dependency is caught at the
// smallest prefix pattern that exhibits it.
inline DistanceVerdict verify_min_distance(const TeParityCheck& H, std::size_t max_e) {
  const std::size_t n = H.n();
  const std::size_t L = H.L();
  max_e = std::min(max_e, n * L);
  DistanceVerdict v;
  std::size_t best = max_e + 1;  // smallest dependent weight seen so far
  TePattern p(n, 0);
  std::optional<TePattern> witness;

  auto rec = [&](auto&& self, std::size_t i, std::size_t weight, const XorBasis& basis) -> void {
    if (i == n) {
      ++v.patterns_checked;
      return;
    }
    // p_i = 0
    self(self, i + 1, weight, basis);
    XorBasis b = basis;
    for (std::size_t u = 1; u <= L && weight + u < best; ++u) {
      p[i] = u;
      ++v.patterns_checked;
      if (!b.insert(H.column(i, L - u))) {
        best = weight + u;
        witness = p;
        for (std::size_t z = i + 1; z < n; ++z) (*witness)[z] = 0;
        break;
      }
      self(self, i + 1, weight + u, b);
    }
    p[i] = 0;
  };
  rec(rec, 0, 0, XorBasis(H.r()));

  if (best <= max_e) {
    v.d = best;
    v.exact = true;
    v.witness = witness;
  } else {
    v.d = max_e + 1;
    // Erasing every cell is independent only for the zero code.
    v.exact = max_e == n * L;
  }
  return v;
}

inline TeCodeSpec make_spec(TeParityCheck H, std::size_t claimed_d, std::string provenance, std::string base,
                            unsigned field_m = 0) {
  TeCodeSpec s;
  s.n = H.n();
  s.L = H.L();
  s.d = claimed_d;
  s.redundancy = H.rank();
  s.provenance = std::move(provenance);
  s.base = std::move(base);
  s.field_m = field_m;
  s.H = std::move(H);
  return s;
}

// Checks the claimed distance exactly (searching one weight beyond it).
inline bool validate_spec(TeCodeSpec& spec) {
  const auto v = verify_min_distance(spec.H, spec.d);
  spec.validated = v.exact && v.d == spec.d;
  return spec.validated;
}

// Named factories used by the CLI and the table generators.
inline TeCodeSpec build_te_code(const std::string& provenance, std::size_t n, std::size_t L, std::size_t d) {
  if (provenance == "parity") return make_spec(construct_parity(n, L), 2, "parity", "single parity bit");
  if (provenance == "base-odd") {
    if (d % 2 == 0 || d < 3) throw std::invalid_argument("base-odd needs odd d >= 3");
    const std::size_t t = (d - 1) / 2;
    if (t == 1)
      return make_spec(construct_odd(shortened_hamming(n), n, 1), d, provenance,
                       "shortened Hamming [" + std::to_string(n) + "], leading columns dropped");
    return make_spec(construct_odd(shortened_bch(n * t, t), n, t), d, provenance,
                     "shortened BCH length " + std::to_string(n * t) + " designed distance " + std::to_string(d) +
                         ", leading columns dropped");
  }
  if (provenance == "base-even") {
    if (d % 2 != 0 || d < 4) throw std::invalid_argument("base-even needs even d >= 4");
    const std::size_t t = (d - 2) / 2;
    const BitMatrix base = t == 1 ? shortened_hamming(n) : shortened_bch(n * t, t);
    return make_spec(construct_even(parity_extend(base), n, t), d, provenance,
                     "parity-extended base of length " + std::to_string(n * t + 1) + ", leading columns dropped");
  }
  if (provenance == "cyclic-d5")
    return make_spec(construct_cyclic_d5(n), 5, provenance,
                     "cyclic (x+1)m1m3 code, m=" + std::to_string(cyclic_d5_degree(n)) + ", shortened to length " +
                         std::to_string(n + 4) + " by dropping leading columns",
                     cyclic_d5_degree(n));
  if (provenance == "hasse")
    return make_spec(construct_hasse(n, L, d - 1), d, provenance, "Hasse derivative columns", hasse_degree(n));
  if (provenance == "two-column") return make_spec(construct_two_column(n), 6, provenance, "two-column field code", hasse_degree(n));
  throw std::invalid_argument("unknown TE construction '" + provenance + "'");
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {
inline void put_u32(std::ostream& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.put(static_cast<char>((v >> (8 * b)) & 0xFF));
}
inline std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw std::runtime_error("parity-check file: truncated");
    v |= static_cast<std::uint32_t>(c & 0xFF) << (8 * b);
  }
  return v;
}
}  // namespace detail

inline constexpr std::uint32_t kParityFormatVersion = 1;

// Layout: "TEPC", version, r, n, L, field m, claimed d, provenance length and
// bytes, then n*L columns of ceil(r/8) bytes each, least significant bit first.
inline void write_binary(std::ostream& out, const TeCodeSpec& spec) {
  out.write("TEPC", 4);
  detail::put_u32(out, kParityFormatVersion);
  detail::put_u32(out, static_cast<std::uint32_t>(spec.H.r()));
  detail::put_u32(out, static_cast<std::uint32_t>(spec.n));
  detail::put_u32(out, static_cast<std::uint32_t>(spec.L));
  detail::put_u32(out, spec.field_m);
  detail::put_u32(out, static_cast<std::uint32_t>(spec.d));
  detail::put_u32(out, static_cast<std::uint32_t>(spec.provenance.size()));
  out.write(spec.provenance.data(), static_cast<std::streamsize>(spec.provenance.size()));
  const std::size_t bytes = (spec.H.r() + 7) / 8;
  for (const auto& c : spec.H.columns())
    for (std::size_t b = 0; b < bytes; ++b) {
      unsigned char v = 0;
      for (std::size_t k = 0; k < 8 && 8 * b + k < c.size(); ++k)
        if (c.get(8 * b + k)) v |= static_cast<unsigned char>(1U << k);
      out.put(static_cast<char>(v));
    }
}

inline TeCodeSpec read_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string(magic, 4) != "TEPC") throw std::runtime_error("parity-check file: bad magic");
  if (detail::get_u32(in) != kParityFormatVersion) throw std::runtime_error("parity-check file: unsupported version");
  const std::size_t r = detail::get_u32(in);
  const std::size_t n = detail::get_u32(in);
  const std::size_t L = detail::get_u32(in);
  const unsigned m = detail::get_u32(in);
  const std::size_t d = detail::get_u32(in);
  std::string prov(detail::get_u32(in), '\0');
  if (!in.read(prov.data(), static_cast<std::streamsize>(prov.size()))) throw std::runtime_error("parity-check file: truncated");
  TeParityCheck H(r, n, L);
  const std::size_t bytes = (r + 7) / 8;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      BitVec c(r);
      for (std::size_t b = 0; b < bytes; ++b) {
        const int v = in.get();
        if (v == std::char_traits<char>::eof()) throw std::runtime_error("parity-check file: truncated");
        for (std::size_t k = 0; k < 8 && 8 * b + k < r; ++k)
          if ((v >> k) & 1) c.set(8 * b + k);
      }
      H.set_column(i, j, std::move(c));
    }
  return make_spec(std::move(H), d, std::move(prov), "", m);
}

// Human-readable dump: header lines then one line per array row with the
// columns written as bit strings (top entry first).
inline std::string dump_text(const TeCodeSpec& spec) {
  std::ostringstream s;
  s << "# provenance=" << spec.provenance << "\n";
  if (!spec.base.empty()) s << "# base=" << spec.base << "\n";
  s << "# n=" << spec.n << " L=" << spec.L << " r=" << spec.H.r() << " rank=" << spec.redundancy
    << " k=" << spec.n * spec.L - spec.redundancy << " d=" << spec.d;
  if (spec.field_m) s << " field_m=" << spec.field_m;
  s << " validated=" << (spec.validated ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.L; ++j) s << (j ? " " : "") << spec.H.column(i, j).to_string();
    s << "\n";
  }
  return s.str();
}

}  // namespace tecodes
