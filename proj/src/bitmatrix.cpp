#include "persym/bitmatrix.hpp"

#include <algorithm>

#include "persym/errors.hpp"

namespace persym {

Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw DimensionError("bit string may only contain '0' and '1': \"" + std::string(text) + "\"");
    }
    out.push_back(c == '1');
  }
  return out;
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits bits_from_word(Word value, std::size_t length) {
  Bits out(length);
  for (std::size_t i = 0; i < length && i < kWordBits; ++i) out[i] = ((value >> i) & 1U) != 0;
  return out;
}

Word bits_to_word(const Bits& bits) {
  if (bits.size() > kWordBits) throw DimensionError("bit vector longer than one word");
  Word w = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) w |= Word{1} << i;
  return w;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  BitMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (auto text : rows) {
    if (text.size() != cols) throw DimensionError("from_strings: ragged rows");
    const Bits b = bits_from_string(text);
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, b[j]);
    ++i;
  }
  return m;
}

BitMatrix BitMatrix::from_words(std::span<const Word> rows, std::size_t cols) {
  if (cols > kWordBits) throw DimensionError("from_words: more than 64 columns");
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (m.stride_ > 0) m.data_[i * m.stride_] = rows[i] & low_mask(cols);
  }
  return m;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("BitMatrix::get out of range");
  return ((data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U) != 0;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) throw DimensionError("BitMatrix::set out of range");
  Word& w = data_[i * stride_ + j / kWordBits];
  const Word bit = Word{1} << (j % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

std::size_t rank(const BitMatrix& m) {
  if (m.empty()) return 0;
  if (m.words_per_row() == 1) {
    XorBasis basis;
    for (std::size_t i = 0; i < m.rows(); ++i) basis.insert(m.row(i)[0]);
    return static_cast<std::size_t>(basis.rank());
  }

  // Multi-word rows: column-by-column elimination on a copy.
  BitMatrix work = m;
  const std::size_t stride = work.words_per_row();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
    const std::size_t wi = col / kWordBits;
    const Word bit = Word{1} << (col % kWordBits);
    std::size_t found = pivot_row;
    while (found < work.rows() && (work.row(found)[wi] & bit) == 0) ++found;
    if (found == work.rows()) continue;
    if (found != pivot_row) {
      auto a = work.row(found);
      auto b = work.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const auto pivot = work.row(pivot_row);
    for (std::size_t r = pivot_row + 1; r < work.rows(); ++r) {
      auto target = work.row(r);
      if (target[wi] & bit) {
        for (std::size_t w = wi; w < stride; ++w) target[w] ^= pivot[w];
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

BitMatrix vstack(std::span<const BitMatrix> parts) {
  if (parts.empty()) return {};
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) {
      throw DimensionError("vstack: column counts differ (" + std::to_string(cols) + " vs " +
                           std::to_string(p.cols()) + ")");
    }
    rows += p.rows();
  }
  BitMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i, ++r) {
      auto src = p.row(i);
      std::copy(src.begin(), src.end(), out.row(r).begin());
    }
  }
  return out;
}

BitMatrix vstack(std::initializer_list<BitMatrix> parts) {
  return vstack(std::span<const BitMatrix>(parts.begin(), parts.size()));
}

BitMatrix leading_rows(const BitMatrix& m, std::size_t r) {
  if (r > m.rows()) {
    throw DimensionError("leading_rows: asked for " + std::to_string(r) + " of " + std::to_string(m.rows()) +
                         " rows");
  }
  BitMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    auto src = m.row(i);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

BitMatrix leading_cols(const BitMatrix& m, std::size_t c) {
  if (c > m.cols()) {
    throw DimensionError("leading_cols: asked for " + std::to_string(c) + " of " + std::to_string(m.cols()) +
                         " columns");
  }
  BitMatrix out(m.rows(), c);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto src = m.row(i);
    auto dst = out.row(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = src[w];
    if (!dst.empty() && c % kWordBits != 0) dst.back() &= low_mask(c % kWordBits);
  }
  return out;
}

bool bilinear(const BitMatrix& m, const Bits& z, const Bits& y) {
  if (z.size() != m.rows() || y.size() != m.cols()) {
    throw DimensionError("bilinear: vector lengths do not match the matrix");
  }
  // M y first, then dot with z.
  std::vector<Word> yw(m.words_per_row(), 0);
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y[j]) yw[j / kWordBits] |= Word{1} << (j % kWordBits);
  bool acc = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!z[i]) continue;
    auto r = m.row(i);
    unsigned parity = 0;
    for (std::size_t w = 0; w < yw.size(); ++w) parity ^= static_cast<unsigned>(std::popcount(r[w] & yw[w]));
    acc ^= (parity & 1U) != 0;
  }
  return acc;
}

std::string to_string(const BitMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s.push_back(m.get(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

}  // namespace persym
