#include "persym/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "persym/errors.hpp"

namespace persym {

namespace {

const char* kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Single: return "single";
    case FamilyKind::PersymPlusRows: return "rows";
    case FamilyKind::Double: return "double";
    case FamilyKind::Triple: return "triple";
  }
  return "?";
}

std::string shape_label(const FamilyShape& shape) {
  try {
    return to_string(shape);
  } catch (...) {
    return "<shape>";
  }
}

}  // namespace

std::vector<Segment> FamilyShape::segments() const {
  switch (kind) {
    case FamilyKind::Single: return {{true, s}};
    case FamilyKind::PersymPlusRows: return {{true, 1 + m}, {false, n}};
    case FamilyKind::Double: return {{true, s}, {true, s + m}};
    case FamilyKind::Triple: return {{true, s}, {true, s + m}, {true, s + m + l}};
  }
  return {};
}

int segment_bits(const Segment& seg, int k) {
  if (seg.rows <= 0 || k <= 0) return 0;
  return seg.persymmetric ? k + seg.rows - 1 : seg.rows * k;
}

std::vector<int> FamilyShape::segment_bits() const {
  std::vector<int> out;
  for (const auto& seg : segments()) out.push_back(persym::segment_bits(seg, k));
  return out;
}

int FamilyShape::param_bits() const {
  int total = 0;
  for (int b : segment_bits()) total += b;
  return total;
}

int FamilyShape::total_rows() const {
  int total = 0;
  for (const auto& seg : segments()) total += seg.rows;
  return total;
}

int FamilyShape::max_rank() const { return std::max(0, std::min(total_rows(), k)); }

FamilyShape single_shape(int s, int k) {
  FamilyShape f{FamilyKind::Single, s, 0, 0, 0, k};
  validate(f);
  return f;
}

FamilyShape rows_shape(int n, int m, int k) {
  FamilyShape f{FamilyKind::PersymPlusRows, 0, m, 0, n, k};
  validate(f);
  return f;
}

FamilyShape double_shape(int s, int m, int k) {
  FamilyShape f{FamilyKind::Double, s, m, 0, 0, k};
  validate(f);
  return f;
}

FamilyShape triple_shape(int s, int m, int l, int k) {
  FamilyShape f{FamilyKind::Triple, s, m, l, 0, k};
  validate(f);
  return f;
}

void validate(const FamilyShape& shape) {
  if (shape.k < 0) throw DimensionError("negative column count k=" + std::to_string(shape.k));
  if (shape.kind == FamilyKind::PersymPlusRows && shape.n < 0) {
    throw DimensionError("negative row count n=" + std::to_string(shape.n));
  }
  for (const auto& seg : shape.segments()) {
    if (seg.rows < 0) {
      throw DimensionError(std::string(kind_name(shape.kind)) + " shape has a block with " +
                           std::to_string(seg.rows) + " rows");
    }
  }
}

std::string to_string(const FamilyShape& f) {
  const std::string k = "k=" + std::to_string(f.k);
  switch (f.kind) {
    case FamilyKind::Single: return "single:s=" + std::to_string(f.s) + "," + k;
    case FamilyKind::PersymPlusRows:
      return "rows:n=" + std::to_string(f.n) + ",m=" + std::to_string(f.m) + "," + k;
    case FamilyKind::Double:
      return "double:s=" + std::to_string(f.s) + ",m=" + std::to_string(f.m) + "," + k;
    case FamilyKind::Triple:
      return "triple:s=" + std::to_string(f.s) + ",m=" + std::to_string(f.m) + ",l=" + std::to_string(f.l) +
             "," + k;
  }
  return {};
}

FamilyShape parse_shape(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("shape \"" + std::string(text) + "\" needs the form kind:key=value,...");
  }
  const std::string_view kind = text.substr(0, colon);
  std::map<std::string, int, std::less<>> kv;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("bad shape field \"" + std::string(item) + "\"");
    const std::string key(item.substr(0, eq));
    const std::string_view val = item.substr(eq + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw DomainError("bad integer in shape field \"" + std::string(item) + "\"");
    }
    if (!kv.emplace(key, v).second) throw DomainError("shape field \"" + key + "\" given twice");
  }

  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw DomainError("shape \"" + std::string(text) + "\" is missing " + key);
    int v = it->second;
    kv.erase(it);
    return v;
  };
  auto optional = [&](const char* key, int dflt) {
    auto it = kv.find(key);
    if (it == kv.end()) return dflt;
    int v = it->second;
    kv.erase(it);
    return v;
  };

  FamilyShape f;
  try {
    if (kind == "single") {
      const int s = need("s");
      f = single_shape(s, need("k"));
    } else if (kind == "rows") {
      const int n = need("n");
      const int m = need("m");
      f = rows_shape(n, m, need("k"));
    } else if (kind == "double") {
      const int s = need("s");
      const int m = need("m");
      f = double_shape(s, m, need("k"));
    } else if (kind == "triple") {
      const int s = need("s");
      const int m = need("m");
      const int l = optional("l", 0);
      f = triple_shape(s, m, l, need("k"));
    } else {
      throw DomainError("unknown shape kind \"" + std::string(kind) + "\" (single, rows, double, triple)");
    }
  } catch (const DimensionError& e) {
    throw DomainError(e.what());
  }
  if (!kv.empty()) throw DomainError("unexpected field \"" + kv.begin()->first + "\" in shape");
  return f;
}

ParamVec param_from_words(const FamilyShape& shape, const std::vector<Word>& words) {
  const auto bits = shape.segment_bits();
  if (words.size() != bits.size()) throw DimensionError("param_from_words: wrong number of segments");
  ParamVec p;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] > static_cast<int>(kWordBits)) throw DimensionError("segment wider than one word");
    p.segments.push_back(bits_from_word(words[j], static_cast<std::size_t>(bits[j])));
  }
  return p;
}

BitMatrix persym_matrix(int s, int k, const Bits& alpha) {
  if (s < 0 || k < 0) throw DimensionError("persym_matrix: negative dimension");
  const std::size_t need = segment_bits({true, s}, k);
  if (alpha.size() != need) {
    throw DimensionError("persym_matrix: expected " + std::to_string(need) + " parameter bits, got " +
                         std::to_string(alpha.size()));
  }
  BitMatrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(k));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < k; ++j) m.set(i, j, alpha[i + j]);
  return m;
}

namespace {

BitMatrix raw_rows(int n, int k, const Bits& rowbits) {
  if (n < 0 || k < 0) throw DimensionError("raw rows: negative dimension");
  if (rowbits.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(k)) {
    throw DimensionError("expected " + std::to_string(n * k) + " row bits, got " + std::to_string(rowbits.size()));
  }
  BitMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) m.set(i, j, rowbits[i * k + j]);
  return m;
}

BitMatrix segment_matrix(const Segment& seg, int k, const Bits& bits) {
  return seg.persymmetric ? persym_matrix(seg.rows, k, bits) : raw_rows(seg.rows, k, bits);
}

}  // namespace

BitMatrix persym_plus_rows(int n, int m, int k, const Bits& alpha, const Bits& rowbits) {
  return build(rows_shape(n, m, k), ParamVec{{alpha, rowbits}});
}

BitMatrix double_matrix(int s, int m, int k, const Bits& alpha, const Bits& beta) {
  return build(double_shape(s, m, k), ParamVec{{alpha, beta}});
}

BitMatrix triple_matrix(int s, int m, int l, int k, const Bits& alpha, const Bits& beta, const Bits& gamma) {
  return build(triple_shape(s, m, l, k), ParamVec{{alpha, beta, gamma}});
}

BitMatrix build(const FamilyShape& shape, const ParamVec& params) {
  validate(shape);
  const auto segs = shape.segments();
  if (params.segments.size() != segs.size()) {
    throw DimensionError(to_string(shape) + " takes " + std::to_string(segs.size()) + " parameter segments, got " +
                         std::to_string(params.segments.size()));
  }
  std::vector<BitMatrix> parts;
  for (std::size_t j = 0; j < segs.size(); ++j) parts.push_back(segment_matrix(segs[j], shape.k, params.segments[j]));
  if (parts.size() == 1) return parts.front();
  return vstack(parts);
}

bool is_nested(const FamilyShape& sub, const FamilyShape& full) {
  const auto a = sub.segments();
  const auto b = full.segments();
  if (a.size() != b.size() || sub.k > full.k || sub.k < 0) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].persymmetric != b[j].persymmetric || a[j].rows < 0 || a[j].rows > b[j].rows) return false;
  }
  return true;
}

BitMatrix build_nested(const FamilyShape& sub, const FamilyShape& full, const ParamVec& params) {
  if (!is_nested(sub, full)) {
    throw DimensionError(shape_label(sub) + " is not nested in " + shape_label(full));
  }
  const BitMatrix whole = build(full, params);
  const auto a = sub.segments();
  const auto b = full.segments();
  BitMatrix out(static_cast<std::size_t>(sub.total_rows()), static_cast<std::size_t>(sub.k));
  std::size_t src = 0;
  std::size_t dst = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (int i = 0; i < a[j].rows; ++i, ++dst)
      for (int c = 0; c < sub.k; ++c) out.set(dst, c, whole.get(src + i, c));
    src += b[j].rows;
  }
  return out;
}

std::vector<FamilyShape> nested_chain(const FamilyShape& f) {
  validate(f);
  auto checked = [&](FamilyShape sub) {
    try {
      validate(sub);
    } catch (const DimensionError&) {
      throw DomainError(to_string(f) + " has no rank chain: a sub-shape would have negative size");
    }
    return sub;
  };
  switch (f.kind) {
    case FamilyKind::Single:
      return {checked({FamilyKind::Single, f.s - 1, 0, 0, 0, f.k - 1}),
              checked({FamilyKind::Single, f.s, 0, 0, 0, f.k - 1}),
              checked({FamilyKind::Single, f.s - 1, 0, 0, 0, f.k}), f};
    case FamilyKind::PersymPlusRows:
      return {checked({FamilyKind::PersymPlusRows, 0, f.m, 0, 0, f.k}), f};
    case FamilyKind::Double:
      return {checked({FamilyKind::Double, f.s - 1, f.m, 0, 0, f.k}),
              checked({FamilyKind::Double, f.s, f.m - 1, 0, 0, f.k}), f};
    case FamilyKind::Triple:
      return {checked({FamilyKind::Triple, f.s - 1, f.m, f.l, 0, f.k}),
              checked({FamilyKind::Triple, f.s, f.m - 1, f.l, 0, f.k}),
              checked({FamilyKind::Triple, f.s, f.m, f.l - 1, 0, f.k}), f};
  }
  throw DomainError("unsupported shape");
}

std::vector<RowSpec> row_specs(const FamilyShape& sub, const FamilyShape& full) {
  if (!is_nested(sub, full)) {
    throw DimensionError(shape_label(sub) + " is not nested in " + shape_label(full));
  }
  for (int b : full.segment_bits()) {
    if (b > static_cast<int>(kWordBits)) throw DimensionError(to_string(full) + " has a segment wider than 64 bits");
  }
  const auto segs = sub.segments();
  const Word mask = low_mask(static_cast<std::size_t>(sub.k));
  std::vector<RowSpec> out;
  for (std::size_t j = 0; j < segs.size(); ++j) {
    for (int i = 0; i < segs[j].rows; ++i) {
      const int shift = segs[j].persymmetric ? i : i * full.k;
      out.push_back({static_cast<int>(j), shift, mask});
    }
  }
  return out;
}

}  // namespace persym
