#include "ellb/reps/lattices.hpp"

#include <stdexcept>
#include <utility>

#include "ellb/exactalg/homology.hpp"
#include "ellb/exactalg/sparse_elim.hpp"
#include "ellb/exactalg/sparse_matrix.hpp"

namespace ellb::reps {

namespace {

SparseIntMatrix sparse_from_mat(const Mat& m) {
  SparseIntMatrix s(mat_rows(m), mat_cols(m));
  for (std::size_t i = 0; i < mat_rows(m); ++i)
    for (std::size_t j = 0; j < mat_cols(m); ++j)
      if (m[i][j] != 0) s.set(i, j, BigInt(m[i][j]));
  return s;
}

bool prime_to(const BigInt& v, long p) { return v % p != 0; }

// A cokernel or homology group is invisible after localizing at p exactly
// when it is finite of order prime to p.
bool vanishes_at(const FGAbGroup& g, long p) {
  if (g.free_rank != 0) return false;
  for (const BigInt& t : g.torsion)
    if (!prime_to(t, p)) return false;
  return true;
}

// Checks the three-term sequence sub -> mid -> quot is short exact over the
// integers localized at p, then packages the two maps.
LatticeSequence make_sequence(RepMap incl, RepMap proj, long p) {
  SparseIntMatrix f = sparse_from_mat(incl.matrix());
  SparseIntMatrix g = sparse_from_mat(proj.matrix());

  // Injectivity: full column rank, torsion-free kernel being automatic.
  if (exact_rank(f) != f.cols())
    throw std::invalid_argument("inclusion is not injective");
  // Surjectivity after localizing: cokernel with no free part and no
  // p-torsion.  Quotient by a zero image computes the plain cokernel.
  SparseIntMatrix zero_out(0, g.rows());
  if (!vanishes_at(homology_at(zero_out, g), p))
    throw std::invalid_argument("projection is not surjective after localizing");
  if (!mat_is_zero(mat_mul(proj.matrix(), incl.matrix(), 0)))
    throw std::invalid_argument("composite of the sequence maps is nonzero");
  if (!vanishes_at(homology_at(g, f), p))
    throw std::invalid_argument("sequence is not exact in the middle");
  return LatticeSequence{std::move(incl), std::move(proj)};
}

} // namespace

S3Lattices s3_lattices() {
  FiniteGroup s3 = build_group(GroupName::S3);
  Domain dom = Domain::localized_at(3);

  // Permutation matrices for the generator pair (3-cycle, transposition
  // fixing the first point): column x holds the image of basis vector x.
  Mat rot = mat_zero(3, 3), swap = mat_zero(3, 3);
  rot[1][0] = rot[2][1] = rot[0][2] = 1;
  swap[0][0] = swap[2][1] = swap[1][2] = 1;
  MatrixRep P(s3, dom, {rot, swap});

  // On basis (1, zeta): multiplication by zeta sends 1 to zeta and zeta to
  // zeta^2 = -1 - zeta; conjugation fixes 1 and sends zeta to zeta^2.
  Mat zrot{{0, -1}, {1, -1}};
  Mat zswap{{1, -1}, {0, -1}};
  MatrixRep zzeta(s3, dom, {zrot, zswap});

  // On basis (1 - zeta, zeta - zeta^2): the same two actions transported
  // into the ideal.
  Mat irot{{0, -1}, {1, -1}};
  Mat iswap{{1, 0}, {1, -1}};
  MatrixRep ideal(s3, dom, {irot, iswap});

  return S3Lattices{std::move(s3), std::move(P), std::move(zzeta),
                    std::move(ideal)};
}

LatticeSequence rep_seq_1(const S3Lattices& l) {
  MatrixRep triv = trivial_rep(l.s3, Domain::localized_at(3));
  // Diagonal inclusion; projection determined by t1 -> 1, hence t2 -> zeta
  // and t3 -> zeta^2 = -1 - zeta.
  Mat incl{{1}, {1}, {1}};
  Mat proj{{1, 0, -1}, {0, 1, -1}};
  return make_sequence(RepMap(triv, l.P, incl), RepMap(l.P, l.Zzeta, proj), 3);
}

LatticeSequence rep_seq_2(const S3Lattices& l) {
  MatrixRep triv = trivial_rep(l.s3, Domain::localized_at(3));
  // 1 - zeta -> t1 - t2 forces zeta - zeta^2 -> t2 - t3 by equivariance;
  // the quotient map sums coordinates.
  Mat incl{{1, 0}, {-1, 1}, {0, -1}};
  Mat proj{{1, 1, 1}};
  return make_sequence(RepMap(l.IdealZeta, l.P, incl), RepMap(l.P, triv, proj),
                       3);
}

RepMap lambda2_identification(const S3Lattices& l) {
  // Columns carry lambda_1 -> zeta - 1 and lambda_2 -> zeta^2 - 1 in the
  // ideal basis: zeta - 1 = -(1 - zeta) and zeta^2 - 1 =
  // -(1 - zeta) - (zeta - zeta^2).
  Mat m{{-1, -1}, {0, -1}};
  Mat m_inv{{-1, 1}, {0, -1}};

  // Transport the ideal action through m; the resulting matrices define the
  // group action on the lambda lattice.
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < l.IdealZeta.gen_count(); ++i)
    gens.push_back(
        mat_mul(m_inv, mat_mul(l.IdealZeta.gen_mat(i), m, 0), 0));
  MatrixRep lambda(l.s3, Domain::localized_at(3), std::move(gens));

  long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det % 3 == 0)
    throw std::logic_error("identification matrix must be a unit at 3");
  return RepMap(std::move(lambda), l.IdealZeta, m);
}

} // namespace ellb::reps
