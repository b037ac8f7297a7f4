#include "ellb/exactalg/smith.hpp"

#include <stdexcept>
#include <utility>

namespace ellb {

DenseMat to_dense(const SparseIntMatrix& m) {
  DenseMat d(m.rows(), std::vector<BigInt>(m.cols(), BigInt(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) d[i][j] = v;
  return d;
}

SparseIntMatrix to_sparse(const DenseMat& d, std::size_t rows,
                          std::size_t cols) {
  SparseIntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (d[i][j] != 0) m.set(i, j, d[i][j]);
  return m;
}

namespace {

// Elementary-operation bookkeeping.  Row ops act as A <- E*A, so the saved
// transforms update as left <- left*E^{-1} (a column op) and
// left_inv <- E*left_inv (the same row op).  Columns mirror this.
struct Worker {
  DenseMat& a;
  std::size_t rows, cols;
  DenseSmithOptions opt;
  DenseMat left, left_inv, right, right_inv;

  Worker(DenseMat& a_, const DenseSmithOptions& o)
      : a(a_), rows(a_.size()), cols(rows ? a_[0].size() : 0), opt(o) {
    if (opt.left) left = ident(rows);
    if (opt.left_inv) left_inv = ident(rows);
    if (opt.right) right = ident(cols);
    if (opt.right_inv) right_inv = ident(cols);
  }

  static DenseMat ident(std::size_t n) {
    DenseMat m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (opt.left)
      for (std::size_t k = 0; k < rows; ++k) std::swap(left[k][i], left[k][j]);
    if (opt.left_inv) std::swap(left_inv[i], left_inv[j]);
  }

  // row i += k * row j
  void row_addmul(std::size_t i, std::size_t j, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols; ++c)
      if (a[j][c] != 0) a[i][c] += k * a[j][c];
    if (opt.left)
      for (std::size_t r = 0; r < rows; ++r)
        if (left[r][i] != 0) left[r][j] -= k * left[r][i];
    if (opt.left_inv)
      for (std::size_t c = 0; c < rows; ++c)
        if (left_inv[j][c] != 0) left_inv[i][c] += k * left_inv[j][c];
  }

  void row_negate(std::size_t i) {
    for (auto& v : a[i]) v = -v;
    if (opt.left)
      for (std::size_t k = 0; k < rows; ++k) left[k][i] = -left[k][i];
    if (opt.left_inv)
      for (auto& v : left_inv[i]) v = -v;
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    if (opt.right) std::swap(right[i], right[j]);
    if (opt.right_inv)
      for (std::size_t k = 0; k < cols; ++k)
        std::swap(right_inv[k][i], right_inv[k][j]);
  }

  // col i += k * col j
  void col_addmul(std::size_t i, std::size_t j, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows; ++r)
      if (a[r][j] != 0) a[r][i] += k * a[r][j];
    if (opt.right)
      for (std::size_t c = 0; c < cols; ++c)
        if (right[i][c] != 0) right[j][c] -= k * right[i][c];
    if (opt.right_inv)
      for (std::size_t r = 0; r < cols; ++r)
        if (right_inv[r][j] != 0) right_inv[r][i] += k * right_inv[r][j];
  }

  void col_negate(std::size_t i) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = -a[r][i];
    if (opt.right)
      for (auto& v : right[i]) v = -v;
    if (opt.right_inv)
      for (std::size_t k = 0; k < cols; ++k) right_inv[k][i] = -right_inv[k][i];
  }
};

} // namespace

DenseSmithResult dense_smith(DenseMat a, const DenseSmithOptions& opt) {
  Worker w(a, opt);
  const std::size_t rows = w.rows, cols = w.cols;
  const std::size_t steps = rows < cols ? rows : cols;

  std::size_t t = 0;
  for (; t < steps; ++t) {
    // Minimal-absolute-value pivot in the trailing submatrix keeps the
    // coefficient growth tame without modular arithmetic.
    for (;;) {
      std::size_t pi = rows, pj = cols;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0) {
            BigInt v = big_abs(a[i][j]);
            if (pi == rows || v < best) {
              best = v;
              pi = i;
              pj = j;
            }
          }
      if (pi == rows) {
        t = steps;
        break;
      }
      w.row_swap(t, pi);
      w.col_swap(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          w.row_addmul(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) dirty = true;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          w.col_addmul(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) dirty = true;
        }
      if (dirty) continue;

      // Pivot must divide the rest of the submatrix for the divisibility
      // chain; folding an offending row in and re-reducing shrinks the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            w.row_addmul(t, i, BigInt(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (t == steps) break;
  }

  DenseSmithResult res;
  for (std::size_t i = 0; i < steps; ++i) {
    if (a.empty() || a[i][i] == 0) continue;
    if (a[i][i] < 0) w.row_negate(i);
    res.diagonal.push_back(a[i][i]);
  }
  res.rank = res.diagonal.size();
  res.left = std::move(w.left);
  res.left_inv = std::move(w.left_inv);
  res.right = std::move(w.right);
  res.right_inv = std::move(w.right_inv);
  return res;
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  DenseSmithOptions opt;
  opt.left = opt.right = true;
  DenseSmithResult r = dense_smith(to_dense(m), opt);
  SmithForm out;
  out.diagonal = std::move(r.diagonal);
  out.rank = r.rank;
  out.left = to_sparse(r.left, m.rows(), m.rows());
  out.right = to_sparse(r.right, m.cols(), m.cols());
  return out;
}

} // namespace ellb
