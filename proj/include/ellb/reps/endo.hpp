#pragma once

#include <cstddef>
#include <vector>

#include "ellb/reps/matrix_rep.hpp"

namespace ellb::reps {

// Dense linear algebra over a prime field, shared by the endomorphism and
// decomposition layers.  Matrices are the Mat type with entries normalized
// to [0, p).

std::size_t fp_rank(Mat a, long p);

// Reduced row echelon form in place; returns the pivot columns in
// ascending order.
std::vector<std::size_t> fp_echelon(Mat& a, long p);

// Basis of the right kernel { v : a v = 0 }, each vector of length cols(a).
std::vector<std::vector<long long>> fp_kernel(const Mat& a, long p);

Mat fp_pow(Mat base, unsigned long e, long p);

// Throws std::invalid_argument on a singular input.
Mat fp_inverse(const Mat& a, long p);

long long fp_trace(const Mat& a, long p);

// The commutant of the representation: all matrices commuting with every
// generator, as an F_p-basis.  Requires prime field coefficients.
std::vector<Mat> commutant_basis(const MatrixRep& rep);

// Solutions X of X rho_a(g) = rho_b(g) X for all generators, i.e. a basis
// of the space of equivariant maps a -> b (shape rank(b) x rank(a)).
std::vector<Mat> hom_basis(const MatrixRep& a, const MatrixRep& b);

// Endomorphism algebra of a representation over a prime field, with its
// Jacobson radical.  The quotient dimension is the invariant the
// decomposition layer certifies: 1 means absolutely indecomposable.
struct EndoAlgebra {
  long p = 0;
  std::size_t rep_rank = 0;
  std::vector<Mat> basis;
  std::vector<Mat> radical;

  std::size_t dim() const { return basis.size(); }
  std::size_t quotient_dim() const { return basis.size() - radical.size(); }
};

// Computes the commutant and then peels off the radical with the trace
// chain: the kernel of Tr(xy) first, then of the p-power traces
// Tr((xy)^{p^k}) for p^k up to the matrix size, each step restricted to
// the previous kernel.  On each step the candidate still contains the
// radical, and after the last it equals it.
EndoAlgebra end_algebra(const MatrixRep& rep);

} // namespace ellb::reps
