#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ellb/exactalg/sparse_matrix.hpp"

namespace ellb {

// Invariant factors of a sparse integer matrix after localization at a prime.
//
// Works over Z/p^K with pivots of minimal p-valuation, so every number stays
// in one machine word no matter how the elimination fills in. This is the
// workhorse for mid-size matrices where the exact integer route suffers
// coefficient blowup in its dense core.
//
// diag_count is the number of nonzero diagonal entries of the local Smith
// form. It equals the rank over Q exactly when no invariant factor has
// p-valuation >= precision; callers certify that by matching diag_count
// against an independently obtained rank. valuations lists v_p of each
// nonzero diagonal in ascending order, so the p-part of the cokernel torsion
// is one summand Z/p^v per strictly positive v. The number of zero
// valuations is the rank over F_p.
struct LocalSmithResult {
  long prime = 0;
  int precision = 0;
  std::size_t diag_count = 0;
  std::vector<int> valuations;
  std::size_t rank_mod_p() const;
  std::vector<long> p_part_divisors() const; // p^v for each v > 0, ascending
};

// precision must satisfy p^precision < 2^31 so products never overflow a
// 64-bit word; 0 picks the largest precision up to 12 that fits, which
// leaves ample headroom for any torsion this library actually meets.
//
// stop_at_diag aborts the elimination once that many diagonal entries are
// found. Callers that only need "rank is at least N" use it to skip the
// expensive tail; a truncated result has diag_count == stop_at_diag and its
// valuations cover only the pivots actually taken.
//
// max_live_entries bounds the fill-in: if the sparse workspace ever holds
// more entries than this, the elimination aborts by throwing
// LocalSmithBudgetExceeded instead of eating all memory.
struct LocalSmithBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LocalSmithResult local_smith(const SparseIntMatrix& m, long p,
                             int precision = 0,
                             std::size_t stop_at_diag = SIZE_MAX,
                             std::size_t max_live_entries = SIZE_MAX);

} // namespace ellb
