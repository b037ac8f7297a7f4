#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "ellb/exactalg/sparse_matrix.hpp"

namespace ellb {

// Sparse F_p vector: (row, value) pairs, sorted by row index, values in
// [1, p-1].
using PVec = std::vector<std::pair<std::uint32_t, std::int64_t>>;

std::int64_t inv_mod(std::int64_t a, std::int64_t p);

// Incremental column reduction over F_p in the style of boundary-matrix
// reduction: each new column is reduced against installed pivot columns by
// its highest surviving row; a nonzero remainder becomes a new pivot.
// Optionally tracks, per column, the combination of input columns that
// produced it, which turns reduced-to-zero columns into kernel vectors.
class PColumnReducer {
public:
  PColumnReducer(std::size_t rows, std::int64_t p, bool track_kernel = false);

  // Returns true if the column survived as a new pivot.
  bool add_column(PVec col);

  std::size_t rank() const { return pivot_count_; }
  std::int64_t prime() const { return p_; }

  // Kernel combinations harvested so far (only if tracking was requested);
  // entry i is a combination of previously added columns summing to zero.
  const std::vector<PVec>& kernel() const { return kernel_; }

  // Does the given vector lie in the span of the columns added so far?
  bool in_span(PVec col) const;

private:
  std::size_t rows_;
  std::int64_t p_;
  bool track_kernel_;
  std::size_t pivot_count_ = 0;
  std::size_t columns_added_ = 0;
  // pivot_by_row_[r] = index into stored_ of the pivot column whose top is r
  std::vector<std::int64_t> pivot_by_row_;
  std::vector<PVec> stored_;
  std::vector<PVec> stored_comb_;
  std::vector<PVec> kernel_;

  void reduce(PVec& col, PVec* comb) const;
};

PVec to_pvec(const std::vector<BigInt>& dense, std::int64_t p);
PVec sparse_col_to_pvec(const SparseIntMatrix& m, std::size_t col,
                        std::int64_t p);

std::size_t rank_mod_p(const SparseIntMatrix& m, std::int64_t p);

// Kernel of m over F_p, as sparse coefficient vectors on the columns of m.
std::vector<PVec> kernel_mod_p(const SparseIntMatrix& m, std::int64_t p);

} // namespace ellb
