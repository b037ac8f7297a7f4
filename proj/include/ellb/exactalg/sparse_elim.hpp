#pragma once

#include <cstddef>
#include <vector>

#include "ellb/exactalg/bigint.hpp"
#include "ellb/exactalg/sparse_matrix.hpp"

namespace ellb {

// Exact rank and invariant factors of a sparse integer matrix.
//
// Strategy: repeatedly split off +-1 pivots chosen by Markowitz cost (each
// contributes an invariant factor 1 and strictly shrinks the problem), then
// finish the remaining dense core with arbitrary-precision Smith reduction.
// Differentials in this library are unit-heavy, so the core is small.
// Arithmetic runs in checked 64-bit first and restarts in big integers if a
// single operation would overflow.
struct DivisorSummary {
  std::size_t rank = 0;
  std::vector<BigInt> divisors; // full divisibility chain, leading 1s included
  std::size_t unit_pivots = 0;  // split off during the sparse phase
  std::size_t core_rows = 0;    // size of the dense core that remained
  std::size_t core_cols = 0;
  bool used_bigint = false;     // 64-bit path overflowed and was rerun
};

DivisorSummary exact_divisors(const SparseIntMatrix& m);
std::size_t exact_rank(const SparseIntMatrix& m);

} // namespace ellb
