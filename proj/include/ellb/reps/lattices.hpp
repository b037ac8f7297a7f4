#pragma once

#include "ellb/reps/group.hpp"
#include "ellb/reps/matrix_rep.hpp"

namespace ellb::reps {

// The three rank <= 3 lattices over S3 with coefficients in the integers
// localized at 3:
//   P         the permutation module on t1, t2, t3;
//   Zzeta     the hexagonal lattice on basis (1, zeta), zeta^2 = -1 - zeta,
//             with the 3-cycle acting as multiplication by zeta and the
//             transposition as conjugation;
//   IdealZeta the sublattice (1 - zeta) Zzeta on basis (1 - zeta,
//             zeta - zeta^2), carrying the restricted action.
struct S3Lattices {
  FiniteGroup s3;
  MatrixRep P;
  MatrixRep Zzeta;
  MatrixRep IdealZeta;
};

S3Lattices s3_lattices();

// Short exact sequence of lattice representations.  Builders verify, over
// the localized integers, that the inclusion is injective, the projection
// surjective, the composite zero, and the middle homology trivial (free
// rank zero and torsion prime to the localized prime).
struct LatticeSequence {
  RepMap incl;
  RepMap proj;
};

// 0 -> Z_(3) -> P -> Zzeta -> 0, with the trivial module included
// diagonally and the projection sending t1 to 1.
LatticeSequence rep_seq_1(const S3Lattices& l);

// 0 -> IdealZeta -> P -> Z_(3) -> 0, with 1 - zeta mapped to t1 - t2 and
// the projection summing coordinates.
LatticeSequence rep_seq_2(const S3Lattices& l);

// The lattice on two generators lambda_1, lambda_2 matched with IdealZeta
// by lambda_1 -> zeta - 1, lambda_2 -> zeta^2 - 1.  The group action on the
// source is defined by transporting the IdealZeta action through this
// matrix, which is unimodular, so the map is an isomorphism of lattices.
RepMap lambda2_identification(const S3Lattices& l);

} // namespace ellb::reps
