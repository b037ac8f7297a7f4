#include "ellb/exactalg/homology.hpp"

#include <sstream>
#include <stdexcept>

#include "ellb/exactalg/sparse_elim.hpp"

namespace ellb {

FGAbGroup::FGAbGroup(std::size_t rank, std::vector<BigInt> tors)
    : free_rank(rank), torsion(std::move(tors)) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      throw std::invalid_argument("torsion coefficients must be >= 2");
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
      throw std::invalid_argument("torsion coefficients must form a divisibility chain");
  }
}

FGAbGroup FGAbGroup::from_divisors(std::size_t rank,
                                   const std::vector<BigInt>& divisors) {
  std::vector<BigInt> tors;
  for (const BigInt& d : divisors)
    if (d > 1) tors.push_back(d);
  return FGAbGroup(rank, std::move(tors));
}

std::string FGAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank == 1) {
    out << "Z";
    first = false;
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const BigInt& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d.str();
    first = false;
  }
  return out.str();
}

FGAbGroup homology_at(const SparseIntMatrix& d_out,
                      const SparseIntMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument(
        "differentials not composable: d_out has " +
        std::to_string(d_out.cols()) + " columns but d_in has " +
        std::to_string(d_in.rows()) + " rows");
  if (!d_out.multiply(d_in).is_zero())
    throw std::invalid_argument("composite of differentials is nonzero");

  std::size_t rank_out = exact_rank(d_out);
  DivisorSummary in = exact_divisors(d_in);
  std::size_t free_rank = d_out.cols() - rank_out - in.rank;
  return FGAbGroup::from_divisors(free_rank, in.divisors);
}

FGAbGroup localize_at_p(const FGAbGroup& g, long p) {
  if (p < 2) throw std::invalid_argument("localization prime must be >= 2");
  std::vector<BigInt> tors;
  for (const BigInt& d : g.torsion) {
    BigInt part = 1, rest = d;
    while (rest % p == 0) {
      part *= p;
      rest /= p;
    }
    if (part > 1) tors.push_back(part);
  }
  return FGAbGroup(g.free_rank, std::move(tors));
}

namespace {

std::vector<BigInt> mat_vec(const DenseMat& m, const std::vector<BigInt>& x) {
  std::vector<BigInt> out(m.size(), BigInt(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (m[i][j] != 0 && x[j] != 0) out[i] += m[i][j] * x[j];
  return out;
}

} // namespace

HomologyBasis::HomologyBasis(const SparseIntMatrix& d_out,
                             const SparseIntMatrix& d_in)
    : mid_dim_(d_out.cols()), d_out_(d_out) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("differentials not composable");
  if (!d_out.multiply(d_in).is_zero())
    throw std::invalid_argument("composite of differentials is nonzero");

  // Smith form of d_out with the column transforms: kernel basis K is the
  // trailing columns of right_inv, and right maps a cycle to its kernel
  // coordinates.
  DenseSmithOptions opt;
  opt.right = opt.right_inv = true;
  DenseSmithResult sf = dense_smith(to_dense(d_out), opt);
  rank_dout_ = sf.rank;
  right_dout_ = std::move(sf.right);
  const DenseMat& rinv = sf.right_inv;
  std::size_t nk = mid_dim_ - rank_dout_;

  DenseMat kernel(mid_dim_, std::vector<BigInt>(nk, BigInt(0)));
  for (std::size_t i = 0; i < mid_dim_; ++i)
    for (std::size_t j = 0; j < nk; ++j)
      kernel[i][j] = rinv[i][rank_dout_ + j];

  // Relation matrix Y: d_in expressed in kernel coordinates.  The leading
  // rank_dout_ rows of right * d_in vanish because the composite is zero.
  DenseMat y(nk, std::vector<BigInt>(d_in.cols(), BigInt(0)));
  for (std::size_t j = 0; j < d_in.cols(); ++j) {
    std::vector<BigInt> col(d_in.rows(), BigInt(0));
    for (std::size_t r = 0; r < d_in.rows(); ++r) col[r] = d_in.get(r, j);
    std::vector<BigInt> yc = mat_vec(right_dout_, col);
    for (std::size_t r = 0; r < rank_dout_; ++r)
      if (yc[r] != 0)
        throw std::logic_error("image does not lie in the kernel");
    for (std::size_t r = 0; r < nk; ++r) y[r][j] = yc[rank_dout_ + r];
  }

  DenseSmithOptions yopt;
  yopt.left = yopt.left_inv = true;
  DenseSmithResult ys = dense_smith(std::move(y), yopt);
  rank_y_ = ys.rank;
  left_inv_y_ = std::move(ys.left_inv);
  y_divisors_ = ys.diagonal;

  // In the basis given by the columns of Y's left transform, the image is
  // spanned by d_i times the i-th basis vector; quotient generators follow.
  const DenseMat& ly = ys.left;
  std::vector<BigInt> torsion;
  for (std::size_t i = 0; i < rank_y_; ++i) {
    if (y_divisors_[i] <= 1) continue;
    torsion_slots_.push_back(i);
    torsion.push_back(y_divisors_[i]);
    std::vector<BigInt> gen_k(nk);
    for (std::size_t r = 0; r < nk; ++r) gen_k[r] = ly[r][i];
    torsion_gens_.push_back(mat_vec(kernel, gen_k));
  }
  for (std::size_t i = rank_y_; i < nk; ++i) {
    std::vector<BigInt> gen_k(nk);
    for (std::size_t r = 0; r < nk; ++r) gen_k[r] = ly[r][i];
    free_gens_.push_back(mat_vec(kernel, gen_k));
  }
  group_ = FGAbGroup(nk - rank_y_, std::move(torsion));
}

bool HomologyBasis::is_cycle(const std::vector<BigInt>& x) const {
  if (x.size() != mid_dim_)
    throw std::invalid_argument("vector length does not match middle term");
  for (std::size_t i = 0; i < d_out_.rows(); ++i) {
    BigInt acc = 0;
    for (const auto& [j, v] : d_out_.row(i)) acc += v * x[j];
    if (acc != 0) return false;
  }
  return true;
}

bool HomologyBasis::ClassCoords::is_zero() const {
  for (const BigInt& t : torsion)
    if (t != 0) return false;
  for (const BigInt& f : free_part)
    if (f != 0) return false;
  return true;
}

HomologyBasis::ClassCoords HomologyBasis::coords_of(
    const std::vector<BigInt>& cycle) const {
  if (!is_cycle(cycle)) throw std::invalid_argument("vector is not a cycle");
  std::vector<BigInt> y = mat_vec(right_dout_, cycle);
  for (std::size_t r = 0; r < rank_dout_; ++r)
    if (y[r] != 0) throw std::logic_error("cycle check and transform disagree");
  std::size_t nk = mid_dim_ - rank_dout_;
  std::vector<BigInt> z(nk);
  for (std::size_t r = 0; r < nk; ++r) z[r] = y[rank_dout_ + r];
  std::vector<BigInt> w = mat_vec(left_inv_y_, z);

  ClassCoords out;
  for (std::size_t slot : torsion_slots_) {
    BigInt v = w[slot] % y_divisors_[slot];
    if (v < 0) v += y_divisors_[slot];
    out.torsion.push_back(v);
  }
  for (std::size_t i = rank_y_; i < nk; ++i) out.free_part.push_back(w[i]);
  return out;
}

} // namespace ellb
