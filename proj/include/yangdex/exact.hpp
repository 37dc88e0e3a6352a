#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace yangdex {

/* All integer and rational arithmetic in the library is exact.  There is no
 * floating point anywhere; feasibility and membership questions are decided
 * by exact solves. */
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
  IntMatrix multiplied(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;
  bool is_zero() const;
};

/* Smith normal form D = U A V with U, V unimodular.  The diagonal has length
 * min(rows, cols); nonzero entries are positive, satisfy d1 | d2 | ... and are
 * followed by zeros.  Transform matrices (and their inverses) are accumulated
 * only when requested.
 *
 * The pivot strategy is deterministic: always the smallest-magnitude nonzero
 * entry of the remaining submatrix, ties broken by row then column.  That
 * keeps intermediate entries small for the incidence-style matrices this
 * library produces; cpp_int absorbs the rest. */
struct SNFResult {
  std::vector<Int> diagonal;
  int rank = 0;
  std::optional<IntMatrix> u, v, u_inv, v_inv;
};

SNFResult smith_normal_form(IntMatrix a, bool with_transforms = false);

/* True when every positive invariant factor d has 2-adic valuation at most 1,
 * i.e. the 2-primary part of the group presented by the factors is elementary
 * abelian.  Zeros (free summands) are ignored. */
bool two_primary_elementary(const std::vector<Int>& factors);

/* Any integer solution of A x = b, or nullopt. */
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_integer(const SNFResult& snf, int rows, int cols,
                                              const std::vector<Int>& b);

int integer_rank(const IntMatrix& a);

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct RatSolve {
  std::vector<Rat> solution;  // free variables set to zero
  int rank = 0;
  bool unique = false;  // rank == number of unknowns
};

/* Exact Gaussian elimination; nullopt when inconsistent. */
std::optional<RatSolve> rational_solve(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace yangdex
