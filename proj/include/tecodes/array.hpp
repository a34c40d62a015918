#pragma once

// n x L binary arrays, tail-erasure patterns, channel outputs and the distance
// functions defined on them.
//
// Indexing is 0-based throughout the API: row i in [0, n), column j in [0, L).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tecodes {

using Bits = std::vector<std::uint8_t>;

class BitArray {
 public:
  static constexpr std::size_t kMaxL = 64;

  BitArray() = default;
  BitArray(std::size_t n, std::size_t L) : n_(n), L_(L), rows_(n, 0) {
    if (L > kMaxL) throw std::invalid_argument("BitArray: row length above 64");
  }

  static BitArray from_rows(const std::vector<Bits>& rows) {
    const std::size_t L = rows.empty() ? 0 : rows.front().size();
    BitArray a(rows.size(), L);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != L) throw std::invalid_argument("BitArray: ragged input rows");
      for (std::size_t j = 0; j < L; ++j) a.set(i, j, rows[i][j] != 0);
    }
    return a;
  }

  std::size_t n() const { return n_; }
  std::size_t L() const { return L_; }
  std::size_t size() const { return n_ * L_; }

  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }
  void set(std::size_t i, std::size_t j, bool v = true) {
    if (v)
      rows_[i] |= std::uint64_t{1} << j;
    else
      rows_[i] &= ~(std::uint64_t{1} << j);
  }
  void flip(std::size_t i, std::size_t j) { rows_[i] ^= std::uint64_t{1} << j; }

  // Row as a packed word, bit j = column j.
  std::uint64_t row_word(std::size_t i) const { return rows_[i]; }
  void set_row_word(std::size_t i, std::uint64_t w) { rows_[i] = w & row_mask(); }

  Bits row(std::size_t i) const {
    Bits r(L_);
    for (std::size_t j = 0; j < L_; ++j) r[j] = get(i, j);
    return r;
  }
  void set_row(std::size_t i, const Bits& r) {
    if (r.size() != L_) throw std::invalid_argument("BitArray: row length mismatch");
    rows_[i] = 0;
    for (std::size_t j = 0; j < L_; ++j)
      if (r[j]) set(i, j);
  }

  std::uint64_t row_mask() const { return L_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << L_) - 1; }

  // Row-major flattening (i*L + j).
  Bits flatten() const {
    Bits out;
    out.reserve(size());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < L_; ++j) out.push_back(get(i, j));
    return out;
  }
  static BitArray unflatten(const Bits& bits, std::size_t n, std::size_t L) {
    if (bits.size() != n * L) throw std::invalid_argument("BitArray: flat size mismatch");
    BitArray a(n, L);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < L; ++j) a.set(i, j, bits[i * L + j] != 0);
    return a;
  }

  BitArray& operator^=(const BitArray& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < n_; ++i) rows_[i] ^= o.rows_[i];
    return *this;
  }
  friend BitArray operator^(BitArray a, const BitArray& b) { return a ^= b; }

  void check_same_shape(const BitArray& o) const {
    if (o.n_ != n_ || o.L_ != L_) throw std::invalid_argument("BitArray: dimension mismatch");
  }

  friend bool operator==(const BitArray&, const BitArray&) = default;
  friend auto operator<=>(const BitArray&, const BitArray&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t L_ = 0;
  std::vector<std::uint64_t> rows_;
};

using TePattern = std::vector<std::size_t>;

inline std::size_t pattern_weight(const TePattern& p) { return std::accumulate(p.begin(), p.end(), std::size_t{0}); }

inline void check_pattern(const TePattern& p, std::size_t n, std::size_t L) {
  if (p.size() != n) throw std::invalid_argument("TePattern: length does not match row count");
  for (auto v : p)
    if (v > L) throw std::invalid_argument("TePattern: entry exceeds row length");
}

// Array whose rows each lost a suffix. Erased cells are stored as a per-row
// count; the underlying bits in erased cells are kept zero.
class ErasedArray {
 public:
  ErasedArray() = default;
  ErasedArray(BitArray known, TePattern erased) : bits_(std::move(known)), erased_(std::move(erased)) {
    check_pattern(erased_, bits_.n(), bits_.L());
    for (std::size_t i = 0; i < bits_.n(); ++i)
      for (std::size_t j = bits_.L() - erased_[i]; j < bits_.L(); ++j) bits_.set(i, j, false);
  }

  std::size_t n() const { return bits_.n(); }
  std::size_t L() const { return bits_.L(); }
  const TePattern& pattern() const { return erased_; }
  const BitArray& known_bits() const { return bits_; }

  bool is_erased(std::size_t i, std::size_t j) const { return j >= L() - erased_[i]; }
  // '0', '1' or '?'.
  char symbol(std::size_t i, std::size_t j) const { return is_erased(i, j) ? '?' : (bits_.get(i, j) ? '1' : '0'); }

  friend bool operator==(const ErasedArray&, const ErasedArray&) = default;

 private:
  BitArray bits_;
  TePattern erased_;
};

// Rows of possibly different lengths, each at most the declared L.
class RaggedArray {
 public:
  RaggedArray() = default;
  RaggedArray(std::vector<Bits> rows, std::size_t L) : L_(L), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() > L_) throw std::invalid_argument("RaggedArray: row longer than declared length");
  }
  static RaggedArray from(const BitArray& x) {
    std::vector<Bits> rows;
    for (std::size_t i = 0; i < x.n(); ++i) rows.push_back(x.row(i));
    return RaggedArray(std::move(rows), x.L());
  }
  static RaggedArray from(const ErasedArray& y) {
    std::vector<Bits> rows;
    for (std::size_t i = 0; i < y.n(); ++i) {
      Bits r = y.known_bits().row(i);
      r.resize(y.L() - y.pattern()[i]);
      rows.push_back(std::move(r));
    }
    return RaggedArray(std::move(rows), y.L());
  }

  std::size_t n() const { return rows_.size(); }
  std::size_t L() const { return L_; }
  const Bits& row(std::size_t i) const { return rows_[i]; }
  Bits& row(std::size_t i) { return rows_[i]; }
  const std::vector<Bits>& rows() const { return rows_; }

  friend bool operator==(const RaggedArray&, const RaggedArray&) = default;
  friend auto operator<=>(const RaggedArray&, const RaggedArray&) = default;

 private:
  std::size_t L_ = 0;
  std::vector<Bits> rows_;
};

// ---------------------------------------------------------------------------
// Tail erasures and the rho_TE metric
// ---------------------------------------------------------------------------

inline ErasedArray apply_te_pattern(const BitArray& x, const TePattern& p) { return ErasedArray(x, p); }

inline std::size_t rho_te_row(std::uint64_t x, std::uint64_t y, std::size_t L) {
  const std::uint64_t d = x ^ y;
  if (d == 0) return 0;
  return L - static_cast<std::size_t>(std::countr_zero(d));
}

inline std::size_t rho_te_distance(const BitArray& x, const BitArray& y) {
  x.check_same_shape(y);
  std::size_t total = 0;
  for (std::size_t i = 0; i < x.n(); ++i) total += rho_te_row(x.row_word(i), y.row_word(i), x.L());
  return total;
}

inline std::size_t w_te(const BitArray& z) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < z.n(); ++i) total += rho_te_row(z.row_word(i), 0, z.L());
  return total;
}

// Visits every p with sum <= e and entries <= L in lexicographic order of
// (p_1, ..., p_n). The visitor returns false to stop early; the function
// returns false if it was stopped.
template <typename Visitor>
bool for_each_pattern(std::size_t e, std::size_t L, std::size_t n, Visitor&& visit) {
  TePattern p(n, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t budget) -> bool {
    if (i == n) return visit(static_cast<const TePattern&>(p));
    const std::size_t hi = std::min(budget, L);
    for (std::size_t v = 0; v <= hi; ++v) {
      p[i] = v;
      if (!rec(i + 1, budget - v)) return false;
    }
    p[i] = 0;
    return true;
  };
  return rec(0, e);
}

// Same as for_each_pattern restricted to patterns of weight exactly w.
template <typename Visitor>
bool for_each_pattern_of_weight(std::size_t w, std::size_t L, std::size_t n, Visitor&& visit) {
  return for_each_pattern(w, L, n, [&](const TePattern& p) { return pattern_weight(p) != w || visit(p); });
}

inline std::vector<TePattern> enumerate_patterns(std::size_t e, std::size_t L, std::size_t n) {
  std::vector<TePattern> out;
  for_each_pattern(e, L, n, [&](const TePattern& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Deletion-type distances
// ---------------------------------------------------------------------------

inline std::size_t lcs_length(const Bits& x, const Bits& y) {
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j)
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

inline std::size_t fll_distance(const Bits& x, const Bits& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fll_distance: length mismatch");
  return x.size() - lcs_length(x, y);
}

// nullopt stands for infinity.
using ExtDistance = std::optional<std::size_t>;

inline ExtDistance d_sdc_distance(const BitArray& x, const BitArray& y, std::size_t s) {
  x.check_same_shape(y);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < x.n(); ++i) {
    if (x.row_word(i) == y.row_word(i)) continue;
    if (fll_distance(x.row(i), y.row(i)) > s) return std::nullopt;
    ++differing;
  }
  return differing;
}

inline ExtDistance d1_dc_distance(const BitArray& x, const BitArray& y) {
  x.check_same_shape(y);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < x.n(); ++i) {
    const std::uint64_t d = x.row_word(i) ^ y.row_word(i);
    if (d & ~std::uint64_t{1}) return std::nullopt;
    differing += d & 1U;
  }
  return differing;
}

struct RunStats {
  std::vector<std::size_t> per_row;
  std::size_t total = 0;
};

inline std::size_t run_count(const Bits& row) {
  if (row.empty()) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j < row.size(); ++j) r += row[j] != row[j - 1];
  return r;
}

inline RunStats run_stats(const BitArray& x) {
  RunStats s;
  for (std::size_t i = 0; i < x.n(); ++i) {
    s.per_row.push_back(run_count(x.row(i)));
    s.total += s.per_row.back();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Text format: one row per line over {0,1,?}; '#' starts a comment line.
// A comment "# L=<int>" declares the original row length of a ragged array;
// a line holding only '-' is a row of length zero. Blank lines are ignored.
// ---------------------------------------------------------------------------

struct ParsedText {
  std::vector<std::string> rows;
  std::optional<std::size_t> declared_L;
};

inline ParsedText parse_array_text(std::istream& in) {
  ParsedText out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line == "-") {
      out.rows.emplace_back();
      continue;
    }
    if (line[0] == '#') {
      auto pos = line.find("L=");
      if (pos != std::string::npos) out.declared_L = std::stoul(line.substr(pos + 2));
      continue;
    }
    for (char c : line)
      if (c != '0' && c != '1' && c != '?') throw std::invalid_argument(std::string("array text: unexpected character '") + c + "'");
    out.rows.push_back(line);
  }
  return out;
}

inline BitArray read_bit_array(std::istream& in) {
  const auto t = parse_array_text(in);
  std::vector<Bits> rows;
  for (const auto& s : t.rows) {
    Bits r;
    for (char c : s) {
      if (c == '?') throw std::invalid_argument("array text: erasure symbol in a plain array");
      r.push_back(c == '1');
    }
    rows.push_back(std::move(r));
  }
  return BitArray::from_rows(rows);
}

inline ErasedArray read_erased_array(std::istream& in) {
  const auto t = parse_array_text(in);
  if (t.rows.empty()) return {};
  const std::size_t L = t.rows.front().size();
  BitArray known(t.rows.size(), L);
  TePattern p(t.rows.size(), 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& s = t.rows[i];
    if (s.size() != L) throw std::invalid_argument("array text: erased array rows must have equal length");
    const auto q = s.find('?');
    const std::size_t cut = q == std::string::npos ? L : q;
    if (s.find_first_not_of('?', cut) != std::string::npos)
      throw std::invalid_argument("array text: erasures must form a row suffix");
    for (std::size_t j = 0; j < cut; ++j) known.set(i, j, s[j] == '1');
    p[i] = L - cut;
  }
  return ErasedArray(std::move(known), std::move(p));
}

inline RaggedArray read_ragged_array(std::istream& in) {
  const auto t = parse_array_text(in);
  std::vector<Bits> rows;
  std::size_t longest = 0;
  for (const auto& s : t.rows) {
    Bits r;
    for (char c : s) {
      if (c == '?') throw std::invalid_argument("array text: erasure symbol in a ragged array");
      r.push_back(c == '1');
    }
    longest = std::max(longest, r.size());
    rows.push_back(std::move(r));
  }
  return RaggedArray(std::move(rows), t.declared_L.value_or(longest));
}

inline std::string to_text(const BitArray& x) {
  std::string s;
  for (std::size_t i = 0; i < x.n(); ++i) {
    for (std::size_t j = 0; j < x.L(); ++j) s += x.get(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

inline std::string to_text(const ErasedArray& y) {
  std::string s;
  for (std::size_t i = 0; i < y.n(); ++i) {
    for (std::size_t j = 0; j < y.L(); ++j) s += y.symbol(i, j);
    s += '\n';
  }
  return s;
}

inline std::string to_text(const RaggedArray& y) {
  std::string s = "# L=" + std::to_string(y.L()) + "\n";
  for (const auto& r : y.rows()) {
    if (r.empty()) s += '-';
    for (auto b : r) s += b ? '1' : '0';
    s += '\n';
  }
  return s;
}

inline BitArray parse_bit_array(const std::string& text) {
  std::istringstream in(text);
  return read_bit_array(in);
}
inline ErasedArray parse_erased_array(const std::string& text) {
  std::istringstream in(text);
  return read_erased_array(in);
}
inline RaggedArray parse_ragged_array(const std::string& text) {
  std::istringstream in(text);
  return read_ragged_array(in);
}

inline std::string bits_to_string(const Bits& b) {
  std::string s;
  for (auto v : b) s += v ? '1' : '0';
  return s;
}

inline Bits bits_from_string(const std::string& s) {
  Bits b;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string: unexpected character");
    b.push_back(c == '1');
  }
  return b;
}

}  // namespace tecodes
