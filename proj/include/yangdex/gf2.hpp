#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace yangdex {

/* Dense matrix over GF(2).  Rows are bit-packed into 64-bit words so that
 * elimination works word-wide; single-bit access is only used to build
 * matrices and read results. */
class GF2Matrix {
 public:
  GF2Matrix() : rows_(0), cols_(0), wpr_(0) {}
  GF2Matrix(int rows, int cols);

  static GF2Matrix identity(int n);
  static GF2Matrix from_rows(const std::vector<std::vector<uint8_t>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool value);

  /* row[dst] ^= row[src] */
  void xor_row(int dst, int src);
  void swap_rows(int a, int b);

  std::vector<uint8_t> row(int r) const;
  std::vector<uint8_t> apply(const std::vector<uint8_t>& x) const;  // A x
  GF2Matrix transposed() const;

  /* [A | B] side by side; row counts must match. */
  GF2Matrix augmented(const GF2Matrix& b) const;

  int rank() const;

  /* Any solution x of A x = b, or nullopt when the system is inconsistent.
   * Free variables are set to zero, which makes the result deterministic. */
  std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b) const;

  /* Basis of the kernel {x : A x = 0}. */
  std::vector<std::vector<uint8_t>> nullspace() const;

  /* Row-space basis as packed echelon rows, exposed for span bookkeeping. */
  std::vector<std::vector<uint8_t>> row_space_basis() const;

 private:
  int rows_, cols_, wpr_;
  std::vector<uint64_t> w_;

  uint64_t* rowptr(int r) { return w_.data() + static_cast<size_t>(r) * wpr_; }
  const uint64_t* rowptr(int r) const { return w_.data() + static_cast<size_t>(r) * wpr_; }

  /* In-place elimination; returns pivot column per pivot row. */
  std::vector<int> echelonize();
};

int gf2_rank(const GF2Matrix& a);
std::optional<std::vector<uint8_t>> gf2_solve(const GF2Matrix& a, const std::vector<uint8_t>& b);

/* c += d over GF(2), sizes must agree. */
void gf2_add_into(std::vector<uint8_t>& c, const std::vector<uint8_t>& d);
bool gf2_is_zero(const std::vector<uint8_t>& v);

}  // namespace yangdex
