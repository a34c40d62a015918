#pragma once

// Arithmetic over GF(2) and GF(2^m), and the binary linear algebra used by
// every code construction in the library.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tecodes {

// ---------------------------------------------------------------------------
// BitVec: a dense, word-packed vector over GF(2).
// ---------------------------------------------------------------------------
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static BitVec from_bits(std::span<const std::uint8_t> bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) v.set(i);
    return v;
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVec& operator^=(const BitVec& o) {
    if (o.size_ != size_) throw std::invalid_argument("BitVec: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  std::size_t popcount() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }
  bool dot(const BitVec& o) const {
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Incremental GF(2) basis. insert() reports whether the vector was independent
// of everything inserted so far; a repeated vector is always dependent.
class XorBasis {
 public:
  explicit XorBasis(std::size_t dim) : dim_(dim) {}

  bool insert(BitVec v) {
    for (const auto& [pivot, row] : rows_)
      if (v.get(pivot)) v ^= row;
    const std::size_t p = v.lowest();
    if (p == dim_) return false;
    rows_.emplace_back(p, std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }
  void clear() { rows_.clear(); }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, BitVec>> rows_;
};

// ---------------------------------------------------------------------------
// BitMatrix
// ---------------------------------------------------------------------------
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  // Builds a matrix whose j-th column is columns[j] (all of equal length).
  static BitMatrix from_columns(std::span<const BitVec> columns, std::size_t rows) {
    BitMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i)
        if (columns[j].get(i)) m.set(i, j);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  void append_row(BitVec r) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: row width mismatch");
    rows_.push_back(std::move(r));
  }

  BitVec column(std::size_t c) const {
    BitVec v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (get(r, c)) v.set(r);
    return v;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  BitVec multiply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::multiply: dimension mismatch");
    BitVec y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
      if (rows_[r].dot(x)) y.set(r);
    return y;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// Reduced row echelon form in place; returns the pivot column of each nonzero
// row in order.
inline std::vector<std::size_t> gf2_rref(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && !m.get(sel, c)) ++sel;
    if (sel == m.rows()) continue;
    std::swap(m.row(sel), m.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t gf2_rank(BitMatrix m) { return gf2_rref(m).size(); }

inline std::size_t gf2_rank(std::span<const BitVec> vectors) {
  if (vectors.empty()) return 0;
  XorBasis basis(vectors.front().size());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  BitVec x;  // one solution (free variables zero); empty when inconsistent
};

// Solves A x = b over GF(2).
inline SolveResult gf2_solve(const BitMatrix& a, const BitVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("gf2_solve: dimension mismatch");
  const std::size_t n = a.cols();
  // Augmented matrix [A | b].
  BitMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (a.get(r, c)) aug.set(r, c);
    if (b.get(r)) aug.set(r, n);
  }
  const auto pivots = gf2_rref(aug);
  if (!pivots.empty() && pivots.back() == n) return {SolveStatus::inconsistent, {}};
  BitVec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (aug.get(i, n)) x.set(pivots[i]);
  const auto status = pivots.size() == n ? SolveStatus::unique : SolveStatus::underdetermined;
  return {status, std::move(x)};
}

// ---------------------------------------------------------------------------
// GF(2^m)
// ---------------------------------------------------------------------------

// Polynomial basis: bit i of value is the coefficient of x^i.
struct FieldElement {
  std::uint32_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) { return {a.value ^ b.value}; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

namespace detail {

// Primitive polynomials, x^m term included. Lowest-weight entries from the
// standard tables (Lin & Costello, Table 2.7).
inline constexpr std::uint64_t kPrimitivePolys[32] = {
    0,          0x3,        0x7,        0xB,        0x13,       0x25,       0x43,       0x89,
    0x11D,      0x211,      0x409,      0x805,      0x1053,     0x201B,     0x4443,     0x8003,
    0x1100B,    0x20009,    0x40081,    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,
    0x1000087,  0x2000009,  0x4000047,  0x8000027,  0x10000009, 0x20000005, 0x40800007, 0x80000009,
};

struct FieldTables {
  unsigned m = 0;
  std::uint64_t poly = 0;
  std::uint32_t order = 0;  // 2^m - 1
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
      if (b & 1U) acc ^= aa;
      b >>= 1;
      aa <<= 1;
    }
    for (int bit = 2 * static_cast<int>(m) - 2; bit >= static_cast<int>(m); --bit)
      if ((acc >> bit) & 1U) acc ^= poly << (bit - static_cast<int>(m));
    return static_cast<std::uint32_t>(acc);
  }
};

}  // namespace detail

// A binary extension field with a fixed primitive polynomial. Cheap to copy.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 31;
  static constexpr unsigned kTableDegree = 16;

  Field() : Field(1) {}

  explicit Field(unsigned m) {
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("Field: degree must be in [1, 31]");
    auto t = std::make_shared<detail::FieldTables>();
    t->m = m;
    t->poly = detail::kPrimitivePolys[m];
    t->order = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
    if (m <= kTableDegree) {
      t->exp.resize(2 * static_cast<std::size_t>(t->order) + 1);
      t->log.assign(static_cast<std::size_t>(t->order) + 1, 0);
      std::uint32_t x = 1;
      const std::uint32_t a = m == 1 ? 1U : 2U;
      for (std::uint32_t i = 0; i < t->order; ++i) {
        t->exp[i] = x;
        t->log[x] = i;
        x = t->slow_mul(x, a);
      }
      for (std::size_t i = t->order; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - t->order];
    }
    tables_ = std::move(t);
  }

  unsigned degree() const { return tables_->m; }
  std::uint64_t primitive_poly() const { return tables_->poly; }
  std::uint64_t size() const { return std::uint64_t{1} << degree(); }
  std::uint32_t multiplicative_order() const { return tables_->order; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // The residue of x modulo the primitive polynomial.
  FieldElement alpha() const { return {degree() == 1 ? 1U : 2U}; }

  FieldElement element(std::uint64_t bits) const {
    if (bits >= size()) throw std::invalid_argument("Field: value does not fit in m bits");
    return {static_cast<std::uint32_t>(bits)};
  }

  FieldElement add(FieldElement a, FieldElement b) const { return a + b; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    const auto& t = *tables_;
    if (!t.exp.empty()) return {t.exp[t.log[a.value] + t.log[b.value]]};
    return {t.slow_mul(a.value, b.value)};
  }

  FieldElement square(FieldElement a) const { return mul(a, a); }

  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw std::domain_error("Field: inversion of zero");
    const auto& t = *tables_;
    if (!t.exp.empty()) return {t.exp[(t.order - t.log[a.value]) % t.order]};
    return pow(a, static_cast<std::int64_t>(t.order) - 1);
  }

  // a^k; negative k requires a != 0. 0^0 = 1.
  FieldElement pow(FieldElement a, std::int64_t k) const {
    if (k == 0) return one();
    if (a.is_zero()) {
      if (k < 0) throw std::domain_error("Field: negative power of zero");
      return zero();
    }
    const std::int64_t ord = tables_->order;
    std::int64_t e = k % ord;
    if (e < 0) e += ord;
    const auto& t = *tables_;
    if (!t.exp.empty())
      return {t.exp[static_cast<std::size_t>((static_cast<std::uint64_t>(t.log[a.value]) * static_cast<std::uint64_t>(e)) % t.order)]};
    FieldElement result = one();
    FieldElement base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  FieldElement alpha_pow(std::int64_t k) const { return pow(alpha(), k); }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.degree() == b.degree() && a.primitive_poly() == b.primitive_poly();
  }

 private:
  std::shared_ptr<const detail::FieldTables> tables_;
};

inline Field field_make(unsigned m) { return Field(m); }

// ---------------------------------------------------------------------------
// FieldMatrix
// ---------------------------------------------------------------------------
class FieldMatrix {
 public:
  FieldMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FieldMatrix multiply(const FieldMatrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_)) throw std::invalid_argument("FieldMatrix::multiply: mismatch");
    FieldMatrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const FieldElement a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = out(i, j) + field_.mul(a, o(k, j));
      }
    return out;
  }

  FieldMatrix select_columns(std::span<const std::size_t> idx) const {
    FieldMatrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
    return out;
  }

  // Gauss-Jordan rank.
  std::size_t rank() const {
    FieldMatrix m = *this;
    return m.eliminate();
  }

  // Inverse of a square matrix; throws std::domain_error when singular.
  FieldMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FieldMatrix::inverse: not square");
    const std::size_t n = rows_;
    FieldMatrix aug(field_, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
      aug(r, n + r) = field_.one();
    }
    if (aug.eliminate(n) != n) throw std::domain_error("FieldMatrix::inverse: singular matrix");
    FieldMatrix out(field_, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
  }

 private:
  // Reduces the leading `limit` columns to RREF with unit pivots; returns rank.
  std::size_t eliminate(std::size_t limit = static_cast<std::size_t>(-1)) {
    limit = std::min(limit, cols_);
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && (*this)(sel, c).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
      const FieldElement inv = field_.inv((*this)(r, c));
      for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const FieldElement f = (*this)(i, c);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) + field_.mul(f, (*this)(r, j));
      }
      ++r;
    }
    return r;
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

// Replaces every entry by its m-bit coefficient column (bit 0 on top), so an
// r x c field matrix becomes an (r*m) x c binary matrix.
inline BitMatrix binary_expand(const FieldMatrix& m) {
  const unsigned deg = m.field().degree();
  BitMatrix out(m.rows() * deg, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::uint32_t v = m(r, c).value;
      for (unsigned b = 0; b < deg; ++b)
        if ((v >> b) & 1U) out.set(r * deg + b, c);
    }
  return out;
}

// Integer helpers shared across modules.
inline unsigned ceil_log2(std::uint64_t x) {
  // smallest k with 2^k >= x
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}

}  // namespace tecodes

template <>
struct std::hash<tecodes::BitVec> {
  std::size_t operator()(const tecodes::BitVec& v) const noexcept {
    std::size_t h = v.size();
    for (auto w : v.words()) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};
