#pragma once

#include <cstddef>
#include <vector>

#include "ellb/exactalg/bigint.hpp"
#include "ellb/exactalg/sparse_matrix.hpp"

namespace ellb {

using DenseMat = std::vector<std::vector<BigInt>>;

DenseMat to_dense(const SparseIntMatrix& m);
SparseIntMatrix to_sparse(const DenseMat& d, std::size_t rows, std::size_t cols);

// Smith normal form over Z with unimodular transforms satisfying
// left * D * right == input.  The diagonal lists the nonzero invariant
// factors d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
  SparseIntMatrix left;
  SparseIntMatrix right;
};

SmithForm smith_normal_form(const SparseIntMatrix& m);

// Workhorse behind smith_normal_form and the homology routines.  Transform
// tracking is opt-in because the inverse pairs double the bookkeeping cost:
//   left * D * right == input,   left_inv * input * right_inv == D.
struct DenseSmithOptions {
  bool left = false;
  bool left_inv = false;
  bool right = false;
  bool right_inv = false;
};

struct DenseSmithResult {
  std::vector<BigInt> diagonal; // nonzero invariant factors, positive, chained
  std::size_t rank = 0;
  DenseMat left, left_inv, right, right_inv;
};

DenseSmithResult dense_smith(DenseMat a, const DenseSmithOptions& opt);

} // namespace ellb
