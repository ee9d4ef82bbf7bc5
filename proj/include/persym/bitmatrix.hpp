#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace persym {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// A dense bit vector; element 0 is the first coordinate.
using Bits = std::vector<bool>;

/// Parses "10110" into {1,0,1,1,0}. Throws DimensionError on other characters.
Bits bits_from_string(std::string_view text);
std::string bits_to_string(const Bits& bits);
/// Little-endian image of the low `length` bits of `value`.
Bits bits_from_word(Word value, std::size_t length);
Word bits_to_word(const Bits& bits);

/// Dense matrix over F2, row-major, each row packed into 64-bit words.
/// Column j of a row lives in bit (j % 64) of word (j / 64); padding bits
/// beyond cols() are always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Rows given as bit strings, e.g. {"101", "011"}. All rows must share a length.
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  /// Rows given as words (cols <= 64); bits beyond cols are masked off.
  static BitMatrix from_words(std::span<const Word> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  std::span<const Word> row(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  std::span<Word> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// F2 rank by Gaussian elimination on a private copy.
std::size_t rank(const BitMatrix& m);

/// Rows of all parts in order. Throws DimensionError if the column counts differ.
BitMatrix vstack(std::span<const BitMatrix> parts);
BitMatrix vstack(std::initializer_list<BitMatrix> parts);

/// First r rows. Throws DimensionError if r > rows.
BitMatrix leading_rows(const BitMatrix& m, std::size_t r);
/// First c columns. Throws DimensionError if c > cols.
BitMatrix leading_cols(const BitMatrix& m, std::size_t c);

/// z^T M y over F2. Throws DimensionError on length mismatch.
bool bilinear(const BitMatrix& m, const Bits& z, const Bits& y);

std::string to_string(const BitMatrix& m);

/// Incremental row space of single-word vectors (at most 64 columns).
///
/// Each stored vector is kept with a distinct lowest set bit, so reducing a
/// new vector costs at most one XOR per basis element. insert() returns the
/// slot it filled, which undo() clears again; the census loops use this to
/// push and pop the rows of a family member without copying the basis.
class XorBasis {
 public:
  static constexpr int kNone = -1;

  int insert(Word v) noexcept {
    while (v != 0) {
      const int b = std::countr_zero(v);
      if (slot_[b] == 0) {
        slot_[b] = v;
        ++rank_;
        return b;
      }
      v ^= slot_[b];
    }
    return kNone;
  }

  void undo(int b) noexcept {
    if (b != kNone) {
      slot_[b] = 0;
      --rank_;
    }
  }

  int rank() const noexcept { return rank_; }

  bool contains(Word v) const noexcept {
    while (v != 0) {
      const int b = std::countr_zero(v);
      if (slot_[b] == 0) return false;
      v ^= slot_[b];
    }
    return true;
  }

 private:
  std::array<Word, kWordBits> slot_{};
  int rank_ = 0;
};

/// Rank of a list of single-word rows.
inline int rank_of_words(std::span<const Word> rows) noexcept {
  XorBasis basis;
  for (Word w : rows) basis.insert(w);
  return basis.rank();
}

inline constexpr Word low_mask(std::size_t bits) noexcept {
  return bits >= kWordBits ? ~Word{0} : ((Word{1} << bits) - 1);
}

}  // namespace persym
