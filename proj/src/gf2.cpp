#include "yangdex/gf2.hpp"

#include <algorithm>

#include "yangdex/errors.hpp"

namespace yangdex {

GF2Matrix::GF2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_(cols > 0 ? (cols + 63) / 64 : 0) {
  if (rows < 0 || cols < 0) fail(ErrorCode::BadInput, "negative matrix dimension");
  w_.assign(static_cast<size_t>(rows_) * wpr_, 0);
}

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<uint8_t>>& rows, int cols) {
  GF2Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      fail(ErrorCode::BadInput, "row length mismatch in from_rows");
    for (int c = 0; c < cols; ++c)
      if (rows[r][c] & 1) m.set(r, c, true);
  }
  return m;
}

bool GF2Matrix::get(int r, int c) const {
  return (rowptr(r)[c >> 6] >> (c & 63)) & 1u;
}

void GF2Matrix::set(int r, int c, bool value) {
  uint64_t mask = uint64_t(1) << (c & 63);
  if (value)
    rowptr(r)[c >> 6] |= mask;
  else
    rowptr(r)[c >> 6] &= ~mask;
}

void GF2Matrix::xor_row(int dst, int src) {
  uint64_t* d = rowptr(dst);
  const uint64_t* s = rowptr(src);
  for (int i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void GF2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  uint64_t* pa = rowptr(a);
  uint64_t* pb = rowptr(b);
  for (int i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

std::vector<uint8_t> GF2Matrix::row(int r) const {
  std::vector<uint8_t> out(cols_, 0);
  for (int c = 0; c < cols_; ++c) out[c] = get(r, c);
  return out;
}

std::vector<uint8_t> GF2Matrix::apply(const std::vector<uint8_t>& x) const {
  if (static_cast<int>(x.size()) != cols_) fail(ErrorCode::BadInput, "apply: size mismatch");
  std::vector<uint64_t> xp(std::max(wpr_, 1), 0);
  for (int c = 0; c < cols_; ++c)
    if (x[c] & 1) xp[c >> 6] |= uint64_t(1) << (c & 63);
  std::vector<uint8_t> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    const uint64_t* p = rowptr(r);
    uint64_t acc = 0;
    for (int i = 0; i < wpr_; ++i) acc ^= p[i] & xp[i];
    out[r] = static_cast<uint8_t>(__builtin_popcountll(acc) & 1);
  }
  return out;
}

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int i = 0; i < wpr_; ++i) {
      uint64_t word = rowptr(r)[i];
      while (word) {
        int bit = __builtin_ctzll(word);
        word &= word - 1;
        t.set(i * 64 + bit, r, true);
      }
    }
  return t;
}

GF2Matrix GF2Matrix::augmented(const GF2Matrix& b) const {
  if (b.rows_ != rows_) fail(ErrorCode::BadInput, "augmented: row count mismatch");
  GF2Matrix m(rows_, cols_ + b.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int i = 0; i < wpr_; ++i) m.rowptr(r)[i] = rowptr(r)[i];
    for (int c = 0; c < b.cols_; ++c)
      if (b.get(r, c)) m.set(r, cols_ + c, true);
  }
  return m;
}

std::vector<int> GF2Matrix::echelonize() {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    swap_rows(r, piv);
    for (int i = 0; i < rows_; ++i)
      if (i != r && get(i, c)) xor_row(i, r);
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

int GF2Matrix::rank() const {
  GF2Matrix copy = *this;
  return static_cast<int>(copy.echelonize().size());
}

std::optional<std::vector<uint8_t>> GF2Matrix::solve(const std::vector<uint8_t>& b) const {
  if (static_cast<int>(b.size()) != rows_) fail(ErrorCode::BadInput, "solve: rhs size mismatch");
  GF2Matrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int i = 0; i < wpr_; ++i) aug.rowptr(r)[i] = rowptr(r)[i];
    if (b[r] & 1) aug.set(r, cols_, true);
  }
  /* Eliminate, ignoring the rhs column as a pivot candidate. */
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (aug.get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    aug.swap_rows(r, piv);
    for (int i = 0; i < rows_; ++i)
      if (i != r && aug.get(i, c)) aug.xor_row(i, r);
    pivot_cols.push_back(c);
    ++r;
  }
  for (int i = r; i < rows_; ++i)
    if (aug.get(i, cols_)) return std::nullopt;
  std::vector<uint8_t> x(cols_, 0);
  for (int i = 0; i < static_cast<int>(pivot_cols.size()); ++i)
    x[pivot_cols[i]] = aug.get(i, cols_);
  return x;
}

std::vector<std::vector<uint8_t>> GF2Matrix::nullspace() const {
  GF2Matrix copy = *this;
  std::vector<int> pivot_cols = copy.echelonize();
  std::vector<uint8_t> is_pivot(cols_, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<uint8_t>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<uint8_t> v(cols_, 0);
    v[c] = 1;
    for (int i = 0; i < static_cast<int>(pivot_cols.size()); ++i)
      if (copy.get(i, c)) v[pivot_cols[i]] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<uint8_t>> GF2Matrix::row_space_basis() const {
  GF2Matrix copy = *this;
  std::vector<int> pivot_cols = copy.echelonize();
  std::vector<std::vector<uint8_t>> basis;
  for (int i = 0; i < static_cast<int>(pivot_cols.size()); ++i) basis.push_back(copy.row(i));
  return basis;
}

int gf2_rank(const GF2Matrix& a) { return a.rank(); }

std::optional<std::vector<uint8_t>> gf2_solve(const GF2Matrix& a, const std::vector<uint8_t>& b) {
  return a.solve(b);
}

void gf2_add_into(std::vector<uint8_t>& c, const std::vector<uint8_t>& d) {
  if (c.size() != d.size()) fail(ErrorCode::BadInput, "gf2_add_into: size mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] ^= d[i] & 1;
}

bool gf2_is_zero(const std::vector<uint8_t>& v) {
  for (uint8_t b : v)
    if (b & 1) return false;
  return true;
}

}  // namespace yangdex
