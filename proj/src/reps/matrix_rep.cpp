#include "ellb/reps/matrix_rep.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace ellb::reps {

namespace {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

long long reduce_entry(long long v, long mod) {
  if (mod == 0) return v;
  long long r = v % mod;
  return r < 0 ? r + mod : r;
}

} // namespace

Domain Domain::localized_at(long p) {
  if (!is_prime(p)) throw std::invalid_argument("localization needs a prime");
  return {Kind::LocalizedAt, p};
}

Domain Domain::finite_field(long q) {
  // Prime fields only; extension fields never come up at this level.
  if (!is_prime(q)) throw std::invalid_argument("field size must be prime");
  return {Kind::FiniteField, q};
}

std::string Domain::to_string() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::LocalizedAt: return "Z_(" + std::to_string(p) + ")";
    case Kind::FiniteField: return "F" + std::to_string(p);
  }
  throw std::logic_error("unknown domain kind");
}

Mat mat_identity(std::size_t n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_zero(std::size_t rows, std::size_t cols) {
  return Mat(rows, std::vector<long long>(cols, 0));
}

std::size_t mat_rows(const Mat& a) { return a.size(); }

std::size_t mat_cols(const Mat& a) { return a.empty() ? 0 : a[0].size(); }

Mat mat_mul(const Mat& a, const Mat& b, long mod) {
  std::size_t r = mat_rows(a), k = mat_cols(a), c = mat_cols(b);
  if (k != mat_rows(b)) throw std::invalid_argument("matrix shape mismatch");
  Mat out = mat_zero(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      long long v = a[i][t];
      if (v == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += v * b[t][j];
    }
  if (mod != 0)
    for (auto& row : out)
      for (auto& e : row) e = reduce_entry(e, mod);
  return out;
}

Mat mat_add(const Mat& a, const Mat& b, long mod) {
  if (mat_rows(a) != mat_rows(b) || mat_cols(a) != mat_cols(b))
    throw std::invalid_argument("matrix shape mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < mat_rows(b); ++i)
    for (std::size_t j = 0; j < mat_cols(b); ++j)
      out[i][j] = reduce_entry(out[i][j] + b[i][j], mod);
  return out;
}

Mat mat_transpose(const Mat& a) {
  Mat out = mat_zero(mat_cols(a), mat_rows(a));
  for (std::size_t i = 0; i < mat_rows(a); ++i)
    for (std::size_t j = 0; j < mat_cols(a); ++j) out[j][i] = a[i][j];
  return out;
}

Mat mat_reduce(Mat a, long mod) {
  if (mod != 0)
    for (auto& row : a)
      for (auto& e : row) e = reduce_entry(e, mod);
  return a;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    for (long long e : row)
      if (e != 0) return false;
  return true;
}

MatrixRep::MatrixRep(FiniteGroup group, Domain domain,
                     std::vector<Mat> gen_mats)
    : group_(std::move(group)), domain_(domain), gen_mats_(std::move(gen_mats)) {
  if (gen_mats_.size() != group_.generators().size())
    throw std::invalid_argument("one matrix per group generator required");
  long mod = domain_.modulus();
  for (auto& m : gen_mats_) m = mat_reduce(std::move(m), mod);
  rank_ = gen_mats_.empty() ? 0 : mat_rows(gen_mats_[0]);
  for (const auto& m : gen_mats_)
    if (mat_rows(m) != rank_ || mat_cols(m) != rank_)
      throw std::invalid_argument("generator matrices must be square of equal size");
  verify();
}

void MatrixRep::verify() {
  long mod = domain_.modulus();
  std::size_t n = group_.order();
  elt_mats_.assign(n, {});
  for (std::size_t g = 0; g < n; ++g) {
    Mat acc = mat_identity(rank_);
    for (std::size_t gi : group_.gen_word(g))
      acc = mat_mul(acc, gen_mats_[gi], mod);
    elt_mats_[g] = std::move(acc);
  }
  // Full table check.  Because the table pairs every element with its
  // inverse, this also certifies each matrix is invertible over the domain
  // (its inverse is the inverse element's matrix, entries included).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mat_mul(elt_mats_[a], elt_mats_[b], mod) != elt_mats_[group_.mul(a, b)])
        throw std::invalid_argument(
            "matrices do not satisfy the group's multiplication table");
}

MatrixRep trivial_rep(const FiniteGroup& g, Domain domain) {
  std::vector<Mat> gens(g.generators().size(), mat_identity(1));
  return MatrixRep(g, domain, std::move(gens));
}

MatrixRep m_n(long n, Domain domain) {
  if (n < 0) throw std::invalid_argument("module index must be nonnegative");
  if (domain.kind == Domain::Kind::FiniteField && domain.p != 2)
    throw std::invalid_argument("modular coefficients for this module mean F2");
  FiniteGroup klein = build_group(GroupName::C2xC2);
  std::size_t rank = static_cast<std::size_t>(2 * n + 1);
  // Basis order: x_1..x_n then y_0..y_n; sign (-1)^i alternates along x.
  auto x = [&](long i) { return static_cast<std::size_t>(i - 1); };
  auto y = [&](long j) { return static_cast<std::size_t>(n + j); };
  Mat g1 = mat_zero(rank, rank), g2 = mat_zero(rank, rank);
  for (long i = 1; i <= n; ++i) {
    long long sign = (i % 2 == 0) ? 1 : -1;
    g1[x(i)][x(i)] = sign;
    g1[y(i - 1)][x(i)] = 1;
    g2[x(i)][x(i)] = sign;
    g2[y(i)][x(i)] = 1;
  }
  for (long j = 0; j <= n; ++j) {
    long long sign = (j % 2 == 0) ? 1 : -1;
    g1[y(j)][y(j)] = sign;
    g2[y(j)][y(j)] = -sign;
  }
  return MatrixRep(klein, domain, {std::move(g1), std::move(g2)});
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (a.group().name() != b.group().name() || !(a.domain() == b.domain()))
    throw std::invalid_argument("direct sum needs matching group and domain");
  std::size_t ra = a.rank(), rb = b.rank();
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < a.gen_count(); ++i) {
    Mat m = mat_zero(ra + rb, ra + rb);
    for (std::size_t r = 0; r < ra; ++r)
      for (std::size_t c = 0; c < ra; ++c) m[r][c] = a.gen_mat(i)[r][c];
    for (std::size_t r = 0; r < rb; ++r)
      for (std::size_t c = 0; c < rb; ++c) m[ra + r][ra + c] = b.gen_mat(i)[r][c];
    gens.push_back(std::move(m));
  }
  return MatrixRep(a.group(), a.domain(), std::move(gens));
}

MatrixRep tensor(const MatrixRep& a, const MatrixRep& b) {
  if (a.group().name() != b.group().name() || !(a.domain() == b.domain()))
    throw std::invalid_argument("tensor product needs matching group and domain");
  std::size_t ra = a.rank(), rb = b.rank();
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < a.gen_count(); ++i) {
    const Mat& ma = a.gen_mat(i);
    const Mat& mb = b.gen_mat(i);
    Mat m = mat_zero(ra * rb, ra * rb);
    for (std::size_t p = 0; p < ra; ++p)
      for (std::size_t q = 0; q < ra; ++q) {
        if (ma[p][q] == 0) continue;
        for (std::size_t s = 0; s < rb; ++s)
          for (std::size_t t = 0; t < rb; ++t)
            m[p * rb + s][q * rb + t] = ma[p][q] * mb[s][t];
      }
    gens.push_back(mat_reduce(std::move(m), a.domain().modulus()));
  }
  return MatrixRep(a.group(), a.domain(), std::move(gens));
}

MatrixRep dual(const MatrixRep& a) {
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < a.gen_count(); ++i) {
    std::size_t g = a.group().generators()[i];
    gens.push_back(mat_transpose(a.element_matrix(a.group().inv(g))));
  }
  return MatrixRep(a.group(), a.domain(), std::move(gens));
}

MatrixRep restrict_rep(const MatrixRep& rep_g, const FiniteGroup& h,
                       const std::vector<std::size_t>& emb) {
  if (emb.size() != h.order())
    throw std::invalid_argument("embedding must cover the subgroup");
  std::vector<Mat> gens;
  for (std::size_t hg : h.generators())
    gens.push_back(rep_g.element_matrix(emb.at(hg)));
  return MatrixRep(h, rep_g.domain(), std::move(gens));
}

MatrixRep induce(const MatrixRep& rep_h, const FiniteGroup& g,
                 const std::vector<std::size_t>& emb) {
  const FiniteGroup& h = rep_h.group();
  if (emb.size() != h.order())
    throw std::invalid_argument("embedding must cover the subgroup");
  std::size_t n = g.order(), hn = h.order();
  if (n % hn != 0) throw std::invalid_argument("subgroup order must divide");

  // Reverse lookup: which subgroup element lands on a given ambient one.
  std::map<std::size_t, std::size_t> back;
  for (std::size_t x = 0; x < hn; ++x) {
    if (emb[x] >= n) throw std::invalid_argument("embedding image out of range");
    if (!back.emplace(emb[x], x).second)
      throw std::invalid_argument("embedding is not injective");
  }

  // Left transversal in element order; coset_of[g] and the factorization
  // g = t_{coset_of[g]} * h together drive the block construction below.
  std::vector<std::size_t> reps;
  std::vector<std::size_t> coset_of(n, n);
  for (std::size_t e = 0; e < n; ++e) {
    if (coset_of[e] != n) continue;
    std::size_t c = reps.size();
    reps.push_back(e);
    for (std::size_t x = 0; x < hn; ++x) coset_of[g.mul(e, emb[x])] = c;
  }
  std::size_t k = reps.size();
  if (k * hn != n) throw std::logic_error("coset decomposition is uneven");

  std::size_t r = rep_h.rank();
  long mod = rep_h.domain().modulus();
  std::vector<Mat> gens;
  for (std::size_t gen : g.generators()) {
    Mat m = mat_zero(k * r, k * r);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t moved = g.mul(gen, reps[i]);
      std::size_t j = coset_of[moved];
      std::size_t inside = g.mul(g.inv(reps[j]), moved);
      const Mat& block = rep_h.element_matrix(back.at(inside));
      for (std::size_t rr = 0; rr < r; ++rr)
        for (std::size_t cc = 0; cc < r; ++cc)
          m[j * r + rr][i * r + cc] = block[rr][cc];
    }
    gens.push_back(mat_reduce(std::move(m), mod));
  }
  return MatrixRep(g, rep_h.domain(), std::move(gens));
}

MatrixRep pullback_q8(const MatrixRep& rep_klein, const FiniteGroup& q8) {
  if (rep_klein.group().name() != GroupName::C2xC2)
    throw std::invalid_argument("pullback source must be a C2xC2 module");
  std::vector<std::size_t> quot = q8_to_klein(q8, rep_klein.group());
  std::vector<Mat> gens;
  for (std::size_t qg : q8.generators())
    gens.push_back(rep_klein.element_matrix(quot.at(qg)));
  return MatrixRep(q8, rep_klein.domain(), std::move(gens));
}

MatrixRep change_domain(const MatrixRep& a, Domain target) {
  using K = Domain::Kind;
  Domain from = a.domain();
  bool ok = false;
  if (from.kind == K::Integers) ok = true;
  else if (from.kind == K::LocalizedAt)
    // Entries are honest integers; only inverting more primes or reducing
    // at the localized prime keeps them meaningful.
    ok = (target.kind == K::LocalizedAt && target.p == from.p) ||
         (target.kind == K::FiniteField && target.p == from.p);
  else
    ok = target == from;
  if (!ok)
    throw std::invalid_argument("cannot reinterpret " + from.to_string() +
                                " coefficients over " + target.to_string());
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < a.gen_count(); ++i)
    gens.push_back(mat_reduce(a.gen_mat(i), target.modulus()));
  return MatrixRep(a.group(), target, std::move(gens));
}

RepMap::RepMap(MatrixRep source, MatrixRep target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (source_.group().name() != target_.group().name() ||
      !(source_.domain() == target_.domain()))
    throw std::invalid_argument("map needs matching group and domain");
  if (mat_rows(matrix_) != target_.rank() || mat_cols(matrix_) != source_.rank())
    throw std::invalid_argument("map matrix has the wrong shape");
  long mod = source_.domain().modulus();
  matrix_ = mat_reduce(std::move(matrix_), mod);
  for (std::size_t i = 0; i < source_.gen_count(); ++i)
    if (mat_mul(matrix_, source_.gen_mat(i), mod) !=
        mat_mul(target_.gen_mat(i), matrix_, mod))
      throw std::invalid_argument("map does not commute with the group action");
}

} // namespace ellb::reps
