#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "persym/bitmatrix.hpp"

namespace persym {

enum class FamilyKind { Single, PersymPlusRows, Double, Triple };

/// One vertical block of a family member: either a persymmetric block
/// (k + rows - 1 defining bits) or `rows` unconstrained rows (rows * k bits).
struct Segment {
  bool persymmetric = true;
  int rows = 0;
};

/// Symbolic description of a matrix family.
///
/// Single(s,k) is one s x k persymmetric block; PersymPlusRows(n,m,k) is a
/// (1+m) x k persymmetric block over n free rows; Double(s,m,k) stacks blocks
/// of s and s+m rows; Triple(s,m,l,k) stacks s, s+m and s+m+l rows.
///
/// m and l may be negative as long as every block keeps a nonnegative row
/// count. The rank chains below need this (e.g. [s over s-1] for m = 0).
struct FamilyShape {
  FamilyKind kind = FamilyKind::Single;
  int s = 0;
  int m = 0;
  int l = 0;
  int n = 0;
  int k = 0;

  std::vector<Segment> segments() const;
  /// Defining bits per segment; an empty block (0 rows or k = 0) has none.
  std::vector<int> segment_bits() const;
  int param_bits() const;
  int total_rows() const;
  int max_rank() const;

  friend bool operator==(const FamilyShape&, const FamilyShape&) = default;
};

FamilyShape single_shape(int s, int k);
FamilyShape rows_shape(int n, int m, int k);
FamilyShape double_shape(int s, int m, int k);
FamilyShape triple_shape(int s, int m, int l, int k);

/// Throws DimensionError if k < 0 or some block has a negative row count.
void validate(const FamilyShape& shape);

int segment_bits(const Segment& seg, int k);

/// Canonical text, e.g. "double:s=3,m=2,k=4" or "rows:n=1,m=2,k=3".
std::string to_string(const FamilyShape& shape);
/// Inverse of to_string. Keys may come in any order; missing l defaults to 0.
/// Throws DomainError on malformed text.
FamilyShape parse_shape(std::string_view text);

/// Defining bits of one family member, one bit vector per segment.
struct ParamVec {
  std::vector<Bits> segments;
};

/// Member whose segment j is the little-endian image of words[j].
ParamVec param_from_words(const FamilyShape& shape, const std::vector<Word>& words);

/// entry(i,j) = alpha[i+j] (0-based). Throws DimensionError unless
/// |alpha| == k+s-1 (or alpha is empty when s == 0 or k == 0).
BitMatrix persym_matrix(int s, int k, const Bits& alpha);
BitMatrix persym_plus_rows(int n, int m, int k, const Bits& alpha, const Bits& rowbits);
BitMatrix double_matrix(int s, int m, int k, const Bits& alpha, const Bits& beta);
BitMatrix triple_matrix(int s, int m, int l, int k, const Bits& alpha, const Bits& beta,
                        const Bits& gamma);

/// The member of `shape` defined by `params`.
BitMatrix build(const FamilyShape& shape, const ParamVec& params);

/// The member of `sub` obtained from a member of `full` by keeping the
/// leading rows of each block and the leading columns. Requires `sub` to be
/// nested in `full` (see is_nested).
BitMatrix build_nested(const FamilyShape& sub, const FamilyShape& full, const ParamVec& params);

/// True if sub has the same segment layout as full, no more rows in any
/// block, and no more columns.
bool is_nested(const FamilyShape& sub, const FamilyShape& full);

/// Sub-shapes whose joint ranks the rank-tuple statistics use:
///   Single(s,k)         -> (s-1)x(k-1), s x(k-1), (s-1)x k, s x k
///   PersymPlusRows      -> the persymmetric block alone, then the full stack
///   Double(s,m,k)       -> [s-1 over s-1+m], [s over s+m-1], [s over s+m]
///   Triple(s,m,l,k)     -> Triple(s-1,m,l), Triple(s,m-1,l), Triple(s,m,l-1), itself
/// Throws DomainError when a sub-shape would need a negative row or column count.
std::vector<FamilyShape> nested_chain(const FamilyShape& shape);

/// Row generator for census loops: row = (segment_word >> shift) & mask.
struct RowSpec {
  int segment = 0;
  int shift = 0;
  Word mask = 0;
};

/// Word-level recipe for the rows of `sub` from the segment words of `full`.
/// Requires every segment of `full` to fit in one 64-bit word.
std::vector<RowSpec> row_specs(const FamilyShape& sub, const FamilyShape& full);

}  // namespace persym
