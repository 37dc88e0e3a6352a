#include "yangdex/exact.hpp"

#include <algorithm>

#include "yangdex/errors.hpp"

namespace yangdex {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& rhs) const {
  if (cols != rhs.rows) fail(ErrorCode::BadInput, "multiplied: shape mismatch");
  IntMatrix out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != cols) fail(ErrorCode::BadInput, "apply: size mismatch");
  std::vector<Int> out(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * x[j];
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : a)
    if (v != 0) return false;
  return true;
}

namespace {

/* Elementary operations, mirrored onto the transform accumulators.  U tracks
 * row operations (left), V column operations (right); the inverses absorb the
 * inverse elementary matrix on the opposite side. */
struct SNFWork {
  IntMatrix a;
  bool track;
  IntMatrix u, v, u_inv, v_inv;

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (!track) return;
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < u_inv.rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }

  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (!track) return;
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < v_inv.cols; ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
  }

  void row_negate(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    if (!track) return;
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }

  /* row_i += m * row_j */
  void row_addmul(int i, int j, const Int& m) {
    if (m == 0) return;
    for (int c = 0; c < a.cols; ++c) a.at(i, c) += m * a.at(j, c);
    if (!track) return;
    for (int c = 0; c < u.cols; ++c) u.at(i, c) += m * u.at(j, c);
    for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, j) -= m * u_inv.at(r, i);
  }

  /* col_i += m * col_j */
  void col_addmul(int i, int j, const Int& m) {
    if (m == 0) return;
    for (int r = 0; r < a.rows; ++r) a.at(r, i) += m * a.at(r, j);
    if (!track) return;
    for (int r = 0; r < v.rows; ++r) v.at(r, i) += m * v.at(r, j);
    for (int c = 0; c < v_inv.cols; ++c) v_inv.at(j, c) -= m * v_inv.at(i, c);
  }
};

}  // namespace

SNFResult smith_normal_form(IntMatrix a, bool with_transforms) {
  const int rows = a.rows, cols = a.cols;
  const int n = std::min(rows, cols);
  SNFWork w{std::move(a), with_transforms, {}, {}, {}, {}};
  if (with_transforms) {
    w.u = IntMatrix::identity(rows);
    w.u_inv = IntMatrix::identity(rows);
    w.v = IntMatrix::identity(cols);
    w.v_inv = IntMatrix::identity(cols);
  }

  for (int t = 0; t < n; ++t) {
    /* Deterministic pivot: smallest magnitude, then smallest row, column. */
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Int& val = w.a.at(i, j);
        if (val == 0) continue;
        Int mag = abs(val);
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool restarted = false;
      for (int i = t + 1; i < rows && !restarted; ++i) {
        if (w.a.at(i, t) == 0) continue;
        Int q = w.a.at(i, t) / w.a.at(t, t);
        w.row_addmul(i, t, -q);
        if (w.a.at(i, t) != 0) {
          w.row_swap(t, i);  // strictly smaller pivot
          restarted = true;
        }
      }
      if (restarted) continue;
      for (int j = t + 1; j < cols && !restarted; ++j) {
        if (w.a.at(t, j) == 0) continue;
        Int q = w.a.at(t, j) / w.a.at(t, t);
        w.col_addmul(j, t, -q);
        if (w.a.at(t, j) != 0) {
          w.col_swap(t, j);
          restarted = true;
        }
      }
      if (restarted) continue;
      /* Row and column are clear; enforce pivot | submatrix so the final
       * diagonal automatically satisfies the divisibility chain. */
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.a.at(t, t) < 0) w.row_negate(t);
  }

  SNFResult res;
  res.diagonal.resize(n);
  for (int i = 0; i < n; ++i) {
    res.diagonal[i] = w.a.at(i, i);
    if (res.diagonal[i] != 0) ++res.rank;
  }
  if (with_transforms) {
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    res.u_inv = std::move(w.u_inv);
    res.v_inv = std::move(w.v_inv);
  }
  return res;
}

bool two_primary_elementary(const std::vector<Int>& factors) {
  for (const Int& d : factors) {
    if (d == 0) continue;
    if (d < 0) fail(ErrorCode::BadInput, "invariant factors must be nonnegative");
    if (d % 4 == 0) return false;
  }
  return true;
}

std::optional<std::vector<Int>> solve_integer(const SNFResult& snf, int rows, int cols,
                                              const std::vector<Int>& b) {
  if (!snf.u || !snf.v) fail(ErrorCode::BadInput, "solve_integer needs transforms");
  if (static_cast<int>(b.size()) != rows) fail(ErrorCode::BadInput, "solve_integer: rhs size");
  std::vector<Int> ub = snf.u->apply(b);
  const int n = static_cast<int>(snf.diagonal.size());
  std::vector<Int> y(cols, 0);
  for (int i = 0; i < rows; ++i) {
    if (i < n && snf.diagonal[i] != 0) {
      if (ub[i] % snf.diagonal[i] != 0) return std::nullopt;
      y[i] = ub[i] / snf.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v->apply(y);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  SNFResult snf = smith_normal_form(a, true);
  return solve_integer(snf, a.rows, a.cols, b);
}

int integer_rank(const IntMatrix& a) { return smith_normal_form(a, false).rank; }

std::optional<RatSolve> rational_solve(const RatMatrix& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows) fail(ErrorCode::BadInput, "rational_solve: rhs size");
  RatMatrix m(a.rows, a.cols + 1);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) m.at(r, c) = a.at(r, c);
    m.at(r, a.cols) = b[r];
  }
  std::vector<int> pivot_cols;
  int rr = 0;
  for (int c = 0; c < a.cols && rr < a.rows; ++c) {
    int piv = -1;
    for (int i = rr; i < a.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rr)
      for (int j = 0; j <= a.cols; ++j) std::swap(m.at(rr, j), m.at(piv, j));
    Rat inv = m.at(rr, c);
    for (int j = 0; j <= a.cols; ++j) m.at(rr, j) /= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == rr || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j <= a.cols; ++j) m.at(i, j) -= f * m.at(rr, j);
    }
    pivot_cols.push_back(c);
    ++rr;
  }
  for (int i = rr; i < a.rows; ++i)
    if (m.at(i, a.cols) != 0) return std::nullopt;
  RatSolve out;
  out.rank = rr;
  out.unique = (rr == a.cols);
  out.solution.assign(a.cols, Rat(0));
  for (int i = 0; i < rr; ++i) out.solution[pivot_cols[i]] = m.at(i, a.cols);
  return out;
}

}  // namespace yangdex
