#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ellb/reps/group.hpp"

namespace ellb::reps {

// Coefficient domain of a representation: the integers, the integers with
// one prime inverted away (localized), or a prime field.
struct Domain {
  enum class Kind { Integers, LocalizedAt, FiniteField };

  Kind kind = Kind::Integers;
  long p = 0; // localization prime, or the field size

  static Domain integers() { return {Kind::Integers, 0}; }
  static Domain localized_at(long p);
  static Domain finite_field(long q);

  bool operator==(const Domain& o) const = default;
  // Field size when arithmetic is modular, 0 for characteristic zero.
  long modulus() const { return kind == Kind::FiniteField ? p : 0; }
  std::string to_string() const;
};

// Dense row-major matrix with machine integer entries.  Representations at
// this scale (rank <= 128, entries built from 0 and +-1) never approach
// overflow, and modular domains reduce eagerly.
using Mat = std::vector<std::vector<long long>>;

Mat mat_identity(std::size_t n);
Mat mat_zero(std::size_t rows, std::size_t cols);
Mat mat_mul(const Mat& a, const Mat& b, long mod);
Mat mat_add(const Mat& a, const Mat& b, long mod);
Mat mat_transpose(const Mat& a);
Mat mat_reduce(Mat a, long mod);
bool mat_is_zero(const Mat& a);
std::size_t mat_rows(const Mat& a);
std::size_t mat_cols(const Mat& a);

// Matrix representation of a finite group, stored through its generator
// matrices.  Construction expands every element by its generator word and
// checks the full multiplication table, so the stored matrices genuinely
// satisfy the group relations (and are invertible, since each element gets
// multiplied against its inverse along the way).
class MatrixRep {
public:
  MatrixRep(FiniteGroup group, Domain domain, std::vector<Mat> gen_mats);

  const FiniteGroup& group() const { return group_; }
  const Domain& domain() const { return domain_; }
  std::size_t rank() const { return rank_; }

  const Mat& gen_mat(std::size_t i) const { return gen_mats_.at(i); }
  std::size_t gen_count() const { return gen_mats_.size(); }

  // Matrix of an arbitrary element, multiplied out from its generator word.
  const Mat& element_matrix(std::size_t g) const { return elt_mats_.at(g); }

private:
  FiniteGroup group_;
  Domain domain_;
  std::vector<Mat> gen_mats_;
  std::vector<Mat> elt_mats_;
  std::size_t rank_ = 0;

  void verify();
};

MatrixRep trivial_rep(const FiniteGroup& g, Domain domain);

// Rank 2n+1 module over C2xC2 on basis x_1..x_n, y_0..y_n.  The generators
// act by
//   g1 x_i = y_{i-1} + (-1)^i x_i      g1 y_j =  (-1)^j y_j
//   g2 x_i = y_i     + (-1)^i x_i      g2 y_j = -(-1)^j y_j
// which squares to the identity over the integers and reduces mod 2 to the
// familiar presentation (g + 1) x_i = y_{i-1} or y_i.  n = 0 gives the rank
// one module where g1 fixes y_0 and g2 negates it.
MatrixRep m_n(long n, Domain domain);

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);
MatrixRep tensor(const MatrixRep& a, const MatrixRep& b);

// Contragredient: g acts by the transpose of the inverse element's matrix.
MatrixRep dual(const MatrixRep& a);

// Restriction along a verified embedding emb: H -> G (the H generators act
// through their images).
MatrixRep restrict_rep(const MatrixRep& rep_g, const FiniteGroup& h,
                       const std::vector<std::size_t>& emb);

// Induction along emb: H -> G on the free module over a left transversal,
// of rank [G:H] times the input rank.
MatrixRep induce(const MatrixRep& rep_h, const FiniteGroup& g,
                 const std::vector<std::size_t>& emb);

// Pullback of a C2xC2 representation along the quotient Q8 -> C2xC2.
MatrixRep pullback_q8(const MatrixRep& rep_klein, const FiniteGroup& q8);

// Reinterprets coefficients: integers may localize or reduce mod q;
// localized entries may reduce mod their own prime.  Reductions that would
// need denominators are rejected.
MatrixRep change_domain(const MatrixRep& a, Domain target);

// Equivariant map between representations of the same group over the same
// domain, as a target_rank x source_rank matrix acting on column vectors.
// Construction verifies commutation with every generator.
class RepMap {
public:
  RepMap(MatrixRep source, MatrixRep target, Mat matrix);

  const MatrixRep& source() const { return source_; }
  const MatrixRep& target() const { return target_; }
  const Mat& matrix() const { return matrix_; }

private:
  MatrixRep source_;
  MatrixRep target_;
  Mat matrix_;
};

} // namespace ellb::reps
