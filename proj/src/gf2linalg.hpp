#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "counters.hpp"
#include "xof.hpp"

namespace pqclab::gf2 {

/// Bits are packed LSB first into 8-bit words: bit j of a row lives in
/// byte j / 8 at position j % 8. Pad bits past the logical length are zero.
using Word = std::uint8_t;
inline constexpr std::size_t kWordBits = 8;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}
  /// Adopts packed bytes; throws Format if pad bits are set or size is wrong.
  static BitVector from_bytes(std::size_t len, std::span<const std::uint8_t> bytes);

  std::size_t size() const noexcept { return len_; }
  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool v) noexcept {
    const Word mask = static_cast<Word>(1u << (i % kWordBits));
    words_[i / kWordBits] = static_cast<Word>(v ? words_[i / kWordBits] | mask : words_[i / kWordBits] & ~mask);
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= static_cast<Word>(1u << (i % kWordBits)); }
  std::size_t weight() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// Dense row-major GF(2) matrix; every row is padded to a whole byte.
class BitMatrix {
 public:
  BitMatrix() = default;
  /// rows * cols must be positive.
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);
  static BitMatrix from_bytes(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> bytes);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word mask = static_cast<Word>(1u << (c % kWordBits));
    w = static_cast<Word>(v ? w | mask : w & ~mask);
  }

  std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  BitVector row_vector(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);

  /// Row-major bytes, rows * stride long: the public-key wire format.
  std::span<const std::uint8_t> bytes() const noexcept { return data_; }

  BitMatrix transposed() const;
  /// Columns [first, first + count).
  BitMatrix column_block(std::size_t first, std::size_t count) const;
  /// [a | b]
  static BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<Word> data_;
};

/// Bijection on [0, n): applying to a vector gives out[j] = v[map[j]], the
/// same as v * P where P[map[j]][j] = 1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless map is a bijection.
  explicit Permutation(std::vector<std::uint32_t> map);
  static Permutation identity(std::size_t n);
  /// Uniform Fisher-Yates shuffle.
  static Permutation random(std::size_t n, SeededRng& rng);

  std::size_t size() const noexcept { return map_.size(); }
  std::uint32_t operator[](std::size_t j) const noexcept { return map_[j]; }
  std::span<const std::uint32_t> map() const noexcept { return map_; }

  Permutation inverse() const;
  /// Apply `this` first, then `next`.
  Permutation then(const Permutation& next) const;
  BitMatrix to_matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> map_;
};

/// Product over GF(2). Output rows are split across `threads` workers; the
/// result and the merged counters are identical for every thread count.
BitMatrix bm_mul(const BitMatrix& a, const BitMatrix& b, OpCounters* ctr = nullptr, unsigned threads = 1);

/// v * m: XOR of the rows of m selected by v.
BitVector bm_vec_mul(const BitVector& v, const BitMatrix& m, OpCounters* ctr = nullptr);

struct RrefResult {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Columns are scanned left to right and the
/// topmost eligible row becomes the pivot, so the result is deterministic.
RrefResult bm_rref(BitMatrix m, OpCounters* ctr = nullptr);

std::size_t bm_rank(const BitMatrix& m, OpCounters* ctr = nullptr);

/// Inverse via elimination of [M | I]; throws Singular.
BitMatrix bm_invert(const BitMatrix& m, OpCounters* ctr = nullptr);

/// Right inverse R (cols x rows) with M R = I for a full-row-rank M;
/// throws Singular otherwise.
BitMatrix bm_right_inverse(const BitMatrix& m, OpCounters* ctr = nullptr);

/// Basis of {x : M x^T = 0} as the rows of a (cols - rank) x cols matrix,
/// one row per non-pivot column of rref(M).
BitMatrix bm_null_space(const BitMatrix& m, OpCounters* ctr = nullptr);

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SeededRng& rng);

/// Uniform invertible matrix by rejection. `attempts`, when given, receives
/// the number of candidates drawn.
BitMatrix random_invertible(std::size_t dim, SeededRng& rng, OpCounters* ctr = nullptr,
                            std::size_t* attempts = nullptr);

BitVector perm_apply(const BitVector& v, const Permutation& p, bool inverse);

/// M P: column j of the result is column map[j] of M.
BitMatrix permute_columns(const BitMatrix& m, const Permutation& p);

}  // namespace pqclab::gf2
