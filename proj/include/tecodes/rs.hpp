#pragma once

// Systematic Reed-Solomon codes over GF(2^m), used as erasure codes only.
//
// Evaluation points are alpha^0, ..., alpha^(n-1). Lengths 2^m and 2^m + 1 are
// reached by adding the point 0 and then the point at infinity (the column
// that reads the top coefficient), giving the doubly extended code.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tecodes/errors.hpp"
#include "tecodes/gf.hpp"

namespace tecodes {

using Symbols = std::vector<FieldElement>;
using ErasedSymbols = std::vector<std::optional<FieldElement>>;

class RsCode {
 public:
  RsCode(Field field, std::size_t n, std::size_t k) : field_(std::move(field)), n_(n), k_(k), gen_(field_, k, n) {
    if (k == 0 || k > n) throw std::invalid_argument("RsCode: need 1 <= k <= n");
    if (n > field_.size() + 1) throw std::invalid_argument("RsCode: length exceeds 2^m + 1");
    // Vandermonde-style generator, one column per evaluation point.
    FieldMatrix v(field_, k, n);
    for (std::size_t c = 0; c < n; ++c) {
      if (c < field_.multiplicative_order()) {
        const FieldElement x = field_.alpha_pow(static_cast<std::int64_t>(c));
        FieldElement p = field_.one();
        for (std::size_t r = 0; r < k; ++r) {
          v(r, c) = p;
          p = field_.mul(p, x);
        }
      } else if (c == field_.multiplicative_order()) {
        v(0, c) = field_.one();  // the point 0
      } else {
        v(k - 1, c) = field_.one();  // the point at infinity
      }
    }
    std::vector<std::size_t> first(k);
    for (std::size_t i = 0; i < k; ++i) first[i] = i;
    gen_ = v.select_columns(first).inverse().multiply(v);
  }

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t redundancy() const { return n_ - k_; }
  std::size_t min_distance() const { return n_ - k_ + 1; }
  // Systematic generator [I_k | P].
  const FieldMatrix& generator() const { return gen_; }

  Symbols encode(const Symbols& message) const {
    if (message.size() != k_) throw std::invalid_argument("RsCode::encode: message length must be k");
    Symbols c(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      FieldElement acc{};
      for (std::size_t i = 0; i < k_; ++i) acc = acc + field_.mul(message[i], gen_(i, j));
      c[j] = acc;
    }
    return c;
  }

  bool is_codeword(const Symbols& word) const {
    if (word.size() != n_) return false;
    return encode(Symbols(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k_))) == word;
  }

  // Recovers the full codeword from a word with erased (nullopt) positions.
  Symbols decode_codeword(const ErasedSymbols& received) const {
    if (received.size() != n_) throw std::invalid_argument("RsCode::decode: word length must be n");
    std::vector<std::size_t> known;
    for (std::size_t j = 0; j < n_; ++j)
      if (received[j]) known.push_back(j);
    if (n_ - known.size() > redundancy())
      throw CapacityExceeded("RsCode::decode: " + std::to_string(n_ - known.size()) + " erasures exceed capacity " +
                             std::to_string(redundancy()));
    known.resize(k_);
    // message * G_S = r_S  =>  message = r_S * G_S^{-1}
    const FieldMatrix inv = gen_.select_columns(known).inverse();
    Symbols message(k_);
    for (std::size_t c = 0; c < k_; ++c) {
      FieldElement acc{};
      for (std::size_t r = 0; r < k_; ++r) acc = acc + field_.mul(*received[known[r]], inv(r, c));
      message[c] = acc;
    }
    Symbols word = encode(message);
    for (std::size_t j = 0; j < n_; ++j)
      if (received[j] && *received[j] != word[j]) throw NotACodeword("RsCode::decode: unerased symbols are inconsistent");
    return word;
  }

  Symbols decode_erasures(const ErasedSymbols& received) const {
    Symbols word = decode_codeword(received);
    word.resize(k_);
    return word;
  }

 private:
  Field field_;
  std::size_t n_;
  std::size_t k_;
  FieldMatrix gen_;
};

}  // namespace tecodes
