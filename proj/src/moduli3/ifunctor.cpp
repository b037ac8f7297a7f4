#include "ellb/moduli3/ifunctor.hpp"

#include <string>
#include <vector>

#include "ellb/exactalg/sparse_elim.hpp"
#include "ellb/exactalg/sparse_matrix.hpp"
#include "ellb/reps/endo.hpp"

namespace ellb::moduli3 {

using reps::Mat;
using reps::MatrixRep;

LatticeFingerprint& LatticeFingerprint::operator+=(
    const LatticeFingerprint& o) {
  rank += o.rank;
  for (int k = 0; k < 3; ++k) {
    rot_val[k] += o.rot_val[k];
    flip_val[k] += o.flip_val[k];
  }
  rot_ker3 += o.rot_ker3;
  flip_ker3 += o.flip_ker3;
  inv3 += o.inv3;
  sgn3 += o.sgn3;
  return *this;
}

namespace {

std::size_t element_of_order(const reps::FiniteGroup& g, std::size_t ord) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t p = x, n = 1;
    while (p != g.identity()) {
      p = g.mul(p, x);
      ++n;
    }
    if (n == ord) return x;
  }
  throw std::logic_error("element_of_order: no element of order " +
                         std::to_string(ord));
}

// rho(g) + eps, as a plain integer matrix.
Mat shifted(const Mat& m, long long eps) {
  Mat out = m;
  for (std::size_t i = 0; i < out.size(); ++i) out[i][i] += eps;
  return out;
}

// Counts of elementary divisors by 3-valuation (0, 1, >= 2), plus the
// kernel dimension mod 3, of an integer matrix.
void divisor_profile(const Mat& m, std::array<int, 3>& val, int& ker3) {
  const std::size_t n = m.size();
  SparseIntMatrix sm(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (m[r][c] != 0) sm.set(r, c, m[r][c]);
  const DivisorSummary ds = exact_divisors(sm);
  val = {0, 0, 0};
  for (BigInt d : ds.divisors) {
    int v = 0;
    while (v < 2 && d % 3 == 0) {
      d /= 3;
      ++v;
    }
    ++val[static_cast<std::size_t>(v)];
  }
  ker3 = static_cast<int>(n) - val[0];
}

// Kernel dimension mod 3 of the two generators stacked, after adding
// eps_rot and eps_flip to their diagonals.
int stacked_kernel_dim(const Mat& rot, const Mat& flip, long long eps_rot,
                       long long eps_flip) {
  Mat stacked = shifted(rot, eps_rot);
  const Mat lower = shifted(flip, eps_flip);
  stacked.insert(stacked.end(), lower.begin(), lower.end());
  return static_cast<int>(reps::fp_kernel(stacked, 3).size());
}

} // namespace

LatticeFingerprint lattice_fingerprint(const MatrixRep& rep) {
  if (rep.group().name() != reps::GroupName::S3)
    throw std::invalid_argument("lattice_fingerprint: group must be S3, got " +
                                reps::to_string(rep.group().name()));
  const reps::Domain& dom = rep.domain();
  const bool integral = dom.kind == reps::Domain::Kind::Integers ||
                        (dom.kind == reps::Domain::Kind::LocalizedAt &&
                         dom.p == 3);
  if (!integral)
    throw std::invalid_argument(
        "lattice_fingerprint: coefficients must keep 3 uninverted (integers "
        "or localized at 3), got " + dom.to_string());

  const Mat& rot = rep.element_matrix(element_of_order(rep.group(), 3));
  const Mat& flip = rep.element_matrix(element_of_order(rep.group(), 2));

  LatticeFingerprint f;
  f.rank = static_cast<int>(rep.rank());
  divisor_profile(shifted(rot, -1), f.rot_val, f.rot_ker3);
  divisor_profile(shifted(flip, -1), f.flip_val, f.flip_ker3);
  f.inv3 = stacked_kernel_dim(rot, flip, -1, -1);
  f.sgn3 = stacked_kernel_dim(rot, flip, -1, +1);
  return f;
}

namespace {

struct DictionaryEntry {
  LatticeFingerprint print;
  StandardSummand image;
};

std::vector<DictionaryEntry> build_dictionary() {
  const reps::S3Lattices lats = reps::s3_lattices();
  const MatrixRep triv =
      reps::trivial_rep(lats.s3, reps::Domain::localized_at(3));
  return {
      {lattice_fingerprint(triv), {Kind::Line, 0}},
      {lattice_fingerprint(lats.P), {Kind::FPush, 0}},
      {lattice_fingerprint(lats.Zzeta), {Kind::Ealpha, -2}},
      {lattice_fingerprint(lats.IdealZeta), {Kind::Ealpha, 4}},
  };
}

} // namespace

StandardBundle i_functor(const MatrixRep& rep) {
  const LatticeFingerprint target = lattice_fingerprint(rep);
  const std::vector<DictionaryEntry> dict = build_dictionary();
  const int n = target.rank;

  // Multiplicities are pinned down by brute force over the rank equation;
  // the full fingerprint must match exactly, and any ambiguity is treated
  // as a failed lookup rather than silently picking a combination.
  std::vector<std::array<int, 4>> hits;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; 3 * b <= n - a; ++b)
      for (int c = 0; 2 * c <= n - a - 3 * b; ++c) {
        const int rest = n - a - 3 * b - 2 * c;
        if (rest % 2 != 0) continue;
        const int d = rest / 2;
        LatticeFingerprint sum;
        const int mult[4] = {a, b, c, d};
        for (int k = 0; k < 4; ++k)
          for (int t = 0; t < mult[k]; ++t) sum += dict[k].print;
        if (sum == target) hits.push_back({a, b, c, d});
      }

  if (hits.empty())
    throw NotInDictionary("i_functor: no direct sum of dictionary lattices "
                          "matches the fingerprint of a rank " +
                          std::to_string(n) + " input");
  if (hits.size() > 1)
    throw NotInDictionary("i_functor: fingerprint matches more than one "
                          "dictionary combination");

  std::vector<StandardSummand> out;
  for (int k = 0; k < 4; ++k)
    for (int t = 0; t < hits[0][static_cast<std::size_t>(k)]; ++t)
      out.push_back(dict[static_cast<std::size_t>(k)].image);
  return StandardBundle(std::move(out));
}

BundleSequence i_functor_sequence(int which) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("i_functor_sequence: index " +
                                std::to_string(which) + " outside {1, 2}");
  const reps::S3Lattices lats = reps::s3_lattices();
  const reps::LatticeSequence seq =
      which == 1 ? reps::rep_seq_1(lats) : reps::rep_seq_2(lats);
  return {i_functor(seq.incl.source()), i_functor(seq.incl.target()),
          i_functor(seq.proj.target())};
}

} // namespace ellb::moduli3
