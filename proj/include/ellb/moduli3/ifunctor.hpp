#pragma once

#include <array>
#include <stdexcept>

#include "ellb/moduli3/bundle.hpp"
#include "ellb/reps/lattices.hpp"
#include "ellb/reps/matrix_rep.hpp"

namespace ellb::moduli3 {

// Raised when a lattice does not match any direct sum of the four
// dictionary entries (the sign representation is the standing example).
class NotInDictionary : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invariants of an integral S3 lattice that survive base change to the
// integers localized at 3 and conjugation: the rank, the 3-valuations of
// the elementary divisors of rho(g) - 1 for an order three and an order
// two element (capped at 2, which is what reduction mod 9 sees), their
// kernel dimensions mod 3, and two joint mod 3 kernels tying the pair of
// generators together.  All components are additive over direct sums.
struct LatticeFingerprint {
  int rank = 0;
  std::array<int, 3> rot_val{};  // divisor counts with 3-valuation 0, 1, >=2
  std::array<int, 3> flip_val{};
  int rot_ker3 = 0;
  int flip_ker3 = 0;
  int inv3 = 0; // joint fixed vectors of both generators mod 3
  int sgn3 = 0; // rot-fixed vectors the flip negates mod 3

  bool operator==(const LatticeFingerprint& o) const = default;
  LatticeFingerprint& operator+=(const LatticeFingerprint& o);
};

LatticeFingerprint lattice_fingerprint(const reps::MatrixRep& rep);

// Translates an S3 lattice into its bundle: the trivial module to w^0, the
// permutation module to FP, the hexagonal lattice to Ea(-2) and its index
// three ideal to Ea(4), additively over direct sums.  Matching goes through
// the fingerprint above; anything else throws NotInDictionary.  Requires
// coefficients in which 3 is not invertible (integers, or localized at 3).
StandardBundle i_functor(const reps::MatrixRep& rep);

// Images of the two short exact lattice sequences, termwise.
struct BundleSequence {
  StandardBundle sub;
  StandardBundle mid;
  StandardBundle quot;
};

BundleSequence i_functor_sequence(int which);

} // namespace ellb::moduli3
