#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ellb/reps/matrix_rep.hpp"

namespace ellb::reps {

// One isomorphism class of indecomposable summands found in a module.
struct SummandClass {
  MatrixRep rep;                  // representative, in its own coordinates
  std::size_t multiplicity = 0;
  std::size_t end_dim = 0;           // dim of the endomorphism algebra
  std::size_t end_quotient_dim = 0;  // dim modulo its radical; 1 certifies
                                     // absolute indecomposability
  std::vector<long long> fingerprint;
};

// Direct sum decomposition into indecomposables with certificates: one
// projector per summand occurrence (in the original coordinates, verified
// orthogonal, idempotent, equivariant and summing to the identity), and
// per class the endomorphism invariants.  Classes are sorted by rank, then
// fingerprint, so equal modules report in a stable order regardless of how
// the splitting search walked.
struct DecompositionReport {
  std::vector<SummandClass> classes;
  std::vector<Mat> projectors;
  std::vector<std::size_t> projector_class; // class index per projector
  std::size_t total_rank = 0;
  std::vector<std::string> flags;
};

// Splits a prime field representation into indecomposables by repeatedly
// cutting along commuting operators: any endomorphism whose minimal
// polynomial has two distinct irreducible factors yields a stable kernel
// and image pair.  Candidate operators come from a deterministic sweep of
// the commutant basis followed by seeded random combinations; when the
// commutant is small enough the sweep is exhaustive, which turns "no
// splitter found" into a proof of indecomposability.  Throws
// std::invalid_argument when the rank exceeds the bound.
DecompositionReport decompose(const MatrixRep& rep, std::uint64_t seed,
                              std::size_t rank_bound = 128);

// Conjugation-invariant fingerprint: the rank, then for each group element
// the rank profile of powers of (action - identity).  Equal on isomorphic
// representations; cheap to compare.
std::vector<long long> iso_fingerprint(const MatrixRep& rep);

// Decides isomorphism by searching the equivariant map space for an
// invertible element: exhaustively when that space is small, otherwise by
// seeded sampling (a miss then reports non-isomorphic, which the
// fingerprint pre-check makes vanishingly unlikely for honest inputs).
bool isomorphic(const MatrixRep& a, const MatrixRep& b, std::uint64_t seed);

} // namespace ellb::reps
