#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellb/exactalg/bigint.hpp"
#include "ellb/exactalg/smith.hpp"
#include "ellb/exactalg/sparse_matrix.hpp"

namespace ellb {

// Finitely generated abelian group in invariant-factor form.
struct FGAbGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion; // each >= 2, each dividing the next

  FGAbGroup() = default;
  FGAbGroup(std::size_t rank, std::vector<BigInt> tors);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const FGAbGroup& o) const = default;

  // "0", "Z", "Z^2 + Z/3", ...
  std::string to_string() const;

  // Build from a raw divisor list (the output of Smith reduction): drops 1s,
  // keeps the chain.
  static FGAbGroup from_divisors(std::size_t rank,
                                 const std::vector<BigInt>& divisors);
};

// ker(d_out) / im(d_in) of a three-term complex of free abelian groups.
// Rejects dimension mismatches and a nonzero composite.
//
// No coordinates are needed: the kernel of an integer matrix is a direct
// summand containing the image, so the torsion of the quotient equals the
// torsion of coker(d_in), i.e. the invariant factors of d_in, and the free
// rank is dim - rank(d_out) - rank(d_in).
FGAbGroup homology_at(const SparseIntMatrix& d_out,
                      const SparseIntMatrix& d_in);

// Same free rank; torsion coefficients replaced by their p-primary parts,
// with trivial factors dropped.
FGAbGroup localize_at_p(const FGAbGroup& g, long p);

// Dense homology solver that also produces explicit generating cycles and
// can locate the class of an arbitrary cycle.  Cost grows with the square of
// the middle dimension, so this is reserved for small bidegrees; the
// coordinate-free homology_at covers the rest.
class HomologyBasis {
public:
  HomologyBasis(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in);

  const FGAbGroup& group() const { return group_; }

  // Generators in middle-term coordinates: first one cycle per torsion
  // coefficient (matching group().torsion order), then the free generators.
  const std::vector<std::vector<BigInt>>& torsion_generators() const {
    return torsion_gens_;
  }
  const std::vector<std::vector<BigInt>>& free_generators() const {
    return free_gens_;
  }

  bool is_cycle(const std::vector<BigInt>& x) const;

  // Coordinates of a cycle's class: one entry per torsion generator (reduced
  // into [0, d_i)) followed by one per free generator.
  struct ClassCoords {
    std::vector<BigInt> torsion;
    std::vector<BigInt> free_part;
    bool is_zero() const;
  };
  ClassCoords coords_of(const std::vector<BigInt>& cycle) const;

private:
  std::size_t mid_dim_;
  SparseIntMatrix d_out_;
  FGAbGroup group_;
  std::vector<std::vector<BigInt>> torsion_gens_;
  std::vector<std::vector<BigInt>> free_gens_;

  // Change of basis data: cycle -> kernel coordinates -> quotient basis.
  DenseMat right_dout_;    // right transform of d_out's Smith form
  std::size_t rank_dout_ = 0;
  DenseMat left_inv_y_;    // inverse left transform of the relation matrix
  std::vector<BigInt> y_divisors_; // full divisor list of Y (1s kept)
  std::size_t rank_y_ = 0;
  std::vector<std::size_t> torsion_slots_; // indices in [0, rank_y) with d>1
};

} // namespace ellb
