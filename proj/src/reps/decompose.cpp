#include "ellb/reps/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "ellb/exactalg/modp.hpp"
#include "ellb/reps/endo.hpp"

namespace ellb::reps {

namespace {

// Deterministic bounded sampling; std::uniform_int_distribution is
// implementation-defined, so the seeded searches roll their own.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long long next(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

long long norm(long long v, long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<long long>;

void ptrim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long pdeg(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = norm(out[i + j] + a[i] * b[j], p);
  }
  ptrim(out);
  return out;
}

// Division with remainder; the divisor is made monic internally.
std::pair<Poly, Poly> pdivmod(Poly a, Poly b, long p) {
  ptrim(a);
  ptrim(b);
  if (b.empty()) throw std::logic_error("polynomial division by zero");
  long long lead_inv = inv_mod(b.back(), p);
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
  while (pdeg(a) >= pdeg(b)) {
    std::size_t shift = a.size() - b.size();
    long long f = norm(a.back() * lead_inv, p);
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = norm(a[shift + i] - f * b[i], p);
    ptrim(a);
  }
  ptrim(q);
  return {q, a};
}

Poly pmonic(Poly f, long p) {
  ptrim(f);
  if (f.empty()) return f;
  long long inv = inv_mod(f.back(), p);
  for (auto& c : f) c = norm(c * inv, p);
  return f;
}

Poly pgcd(Poly a, Poly b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(std::move(a), p);
}

Poly pderiv(const Poly& f, long p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(norm(f[i] * static_cast<long long>(i), p));
  ptrim(d);
  return d;
}

// Product of the distinct irreducible factors.  A vanishing derivative
// means every exponent is divisible by p, so the polynomial is a p-th
// power and dropping the stride loses nothing (coefficients are already
// their own p-th roots over the prime field).
Poly pradical(Poly f, long p) {
  f = pmonic(std::move(f), p);
  if (pdeg(f) <= 1) return f;
  Poly d = pderiv(f, p);
  if (d.empty()) {
    Poly stride;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p))
      stride.push_back(f[i]);
    return pradical(std::move(stride), p);
  }
  Poly g = pgcd(f, d, p);
  if (pdeg(g) == 0) return f;
  Poly w = pdivmod(f, g, p).first; // distinct factors of non-p multiplicity
  Poly rest = pradical(g, p);
  // lcm(w, rest) collects the factors hiding inside the gcd.
  Poly common = pgcd(w, rest, p);
  return pmul(w, pdivmod(rest, common, p).first, p);
}

// Berlekamp splitting of a squarefree monic polynomial into its monic
// irreducible factors.
void berlekamp_squarefree(const Poly& g, long p, std::vector<Poly>& out) {
  long d = pdeg(g);
  if (d <= 1) {
    if (d == 1) out.push_back(g);
    return;
  }
  // Frobenius matrix: column i holds t^{p i} mod g.
  Poly tp(static_cast<std::size_t>(p) + 1, 0);
  tp[static_cast<std::size_t>(p)] = 1;
  tp = pdivmod(tp, g, p).second;
  Mat q = mat_zero(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  Poly cur{1};
  for (long i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < cur.size(); ++k)
      q[k][static_cast<std::size_t>(i)] = cur[k];
    cur = pdivmod(pmul(cur, tp, p), g, p).second;
  }
  for (long i = 0; i < d; ++i)
    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        norm(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - 1,
             p);
  auto kernel = fp_kernel(q, p);
  if (kernel.size() <= 1) {
    out.push_back(g);
    return;
  }
  // Any non-constant kernel element v splits g across gcd(g, v - c).
  Poly v;
  for (const auto& k : kernel) {
    Poly cand(k.begin(), k.end());
    ptrim(cand);
    if (pdeg(cand) >= 1) {
      v = std::move(cand);
      break;
    }
  }
  if (v.empty()) throw std::logic_error("Berlekamp kernel lacks a splitter");
  for (long c = 0; c < p; ++c) {
    Poly shifted = v;
    if (shifted.empty()) shifted.push_back(0);
    shifted[0] = norm(shifted[0] - c, p);
    Poly h = pgcd(g, shifted, p);
    if (pdeg(h) >= 1 && pdeg(h) < d) berlekamp_squarefree(h, p, out);
  }
}

// Distinct monic irreducible factors of f, sorted by degree then
// coefficients so every caller walks them in the same order.
std::vector<Poly> distinct_factors(const Poly& f, long p) {
  std::vector<Poly> out;
  berlekamp_squarefree(pradical(f, p), p, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long long> mat_apply(const Mat& m, const std::vector<long long>& v,
                                 long p) {
  std::vector<long long> out(mat_rows(m), 0);
  for (std::size_t i = 0; i < mat_rows(m); ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < mat_cols(m); ++j) s += m[i][j] * v[j];
    out[i] = norm(s, p);
  }
  return out;
}

// Evaluates a polynomial at a matrix (Horner).
Mat eval_poly_mat(const Poly& f, const Mat& x, long p) {
  std::size_t n = mat_rows(x);
  Mat acc = mat_zero(n, n);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = mat_mul(acc, x, p);
    for (std::size_t d = 0; d < n; ++d) acc[d][d] = norm(acc[d][d] + f[i], p);
  }
  return acc;
}

// Annihilator of one start vector: reduce the Krylov sequence e, xe, x^2 e
// against the rows collected so far, remembering which power combination
// produced each row; the first dependency is the (monic) local minimal
// polynomial.
Poly cyclic_annihilator(const Mat& x, std::size_t start, long p) {
  std::size_t n = mat_rows(x);
  std::vector<std::vector<long long>> rows;
  std::vector<Poly> combos;
  std::vector<std::size_t> pivot_cols;
  std::vector<long long> v(n, 0);
  v[start] = 1;
  for (std::size_t k = 0;; ++k) {
    std::vector<long long> w = v;
    Poly wc(k + 1, 0);
    wc[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      long long f = w[pivot_cols[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        w[j] = norm(w[j] - f * rows[r][j], p);
      for (std::size_t j = 0; j < combos[r].size(); ++j)
        wc[j] = norm(wc[j] - f * combos[r][j], p);
    }
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] != 0) {
        piv = j;
        break;
      }
    if (piv == n) return wc; // monic: reductions never touch the t^k term
    long long inv = inv_mod(w[piv], p);
    for (std::size_t j = 0; j < n; ++j) w[j] = norm(w[j] * inv, p);
    for (auto& c : wc) c = norm(c * inv, p);
    rows.push_back(std::move(w));
    combos.push_back(std::move(wc));
    pivot_cols.push_back(piv);
    v = mat_apply(x, v, p);
  }
}

// Minimal polynomial via cyclic subspaces: the annihilators of the basis
// start vectors are combined by lcm until the result kills the matrix.
Poly minpoly(const Mat& x, long p) {
  std::size_t n = mat_rows(x);
  if (n == 0) return Poly{1};
  Poly m{1};
  for (std::size_t start = 0; start < n; ++start) {
    Poly local = cyclic_annihilator(x, start, p);
    Poly common = pgcd(m, local, p);
    m = pdivmod(pmul(m, local, p), common, p).first;
    if (mat_is_zero(eval_poly_mat(m, x, p))) return pmonic(std::move(m), p);
  }
  throw std::logic_error("minimal polynomial search did not terminate");
}

// A summand under construction: its representation in local coordinates
// plus the column embedding into, and projection from, the original module
// (proj * inj = identity on the summand).
struct Node {
  Mat inj;
  Mat proj;
  MatrixRep rep;
};

Mat combine(const std::vector<Mat>& basis, const std::vector<long long>& c,
            long p) {
  Mat x = mat_zero(mat_rows(basis[0]), mat_cols(basis[0]));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t r = 0; r < mat_rows(x); ++r)
      for (std::size_t k = 0; k < mat_cols(x); ++k)
        x[r][k] = norm(x[r][k] + c[i] * basis[i][r][k], p);
  }
  return x;
}

// Looks for a commuting operator whose minimal polynomial has two distinct
// irreducible factors.  Walks the commutant basis and its pairwise sums
// first, then seeded random combinations; when the commutant is small the
// walk enumerates every element, in which case coming up empty proves the
// module indecomposable (a proper splitting always exposes an idempotent,
// whose minimal polynomial t(t-1) would have been found).
struct SplitterSearch {
  bool found = false;
  bool exhausted = false;
  Mat op;
  Poly factor;
};

SplitterSearch find_splitter(const std::vector<Mat>& ends, long p, Rng& rng) {
  SplitterSearch res;
  auto consider = [&](const Mat& x) {
    if (mat_is_zero(x)) return false;
    std::vector<Poly> facs = distinct_factors(minpoly(x, p), p);
    if (facs.size() < 2) return false;
    res.found = true;
    res.op = x;
    res.factor = facs.front();
    return true;
  };

  std::size_t m = ends.size();
  double log_total = static_cast<double>(m) * std::log2(static_cast<double>(p));
  if (log_total <= 11.0) {
    // Exhaustive: odometer over all coefficient vectors.
    std::vector<long long> c(m, 0);
    while (true) {
      std::size_t i = 0;
      while (i < m && c[i] == p - 1) c[i++] = 0;
      if (i == m) break;
      ++c[i];
      if (consider(combine(ends, c, p))) return res;
    }
    res.exhausted = true;
    return res;
  }

  for (const Mat& x : ends)
    if (consider(x)) return res;
  std::size_t pair_budget = 64;
  for (std::size_t i = 0; i < m && pair_budget > 0; ++i)
    for (std::size_t j = i + 1; j < m && pair_budget > 0; ++j) {
      --pair_budget;
      if (consider(mat_add(ends[i], ends[j], p))) return res;
    }
  for (int t = 0; t < 60; ++t) {
    std::vector<long long> c(m);
    for (auto& v : c) v = rng.next(0, p - 1);
    if (consider(combine(ends, c, p))) return res;
  }
  return res;
}

// Cuts a node along the stabilized kernel/image pair of f(x)^rank, which
// are subrepresentations because x commutes with the action.
std::pair<Node, Node> fitting_split(const Node& node, const Mat& x,
                                    const Poly& f, long p) {
  std::size_t r = node.rep.rank();
  Mat stab = fp_pow(eval_poly_mat(f, x, p), static_cast<unsigned long>(r), p);
  std::vector<std::vector<long long>> ker = fp_kernel(stab, p);
  Mat rref = stab;
  std::vector<std::size_t> pivots = fp_echelon(rref, p);
  std::size_t ku = ker.size(), kw = pivots.size();
  if (ku == 0 || kw == 0 || ku + kw != r)
    throw std::logic_error("operator did not split the module");

  // Basis change: kernel vectors first, then the original columns that
  // carry the image.
  Mat c = mat_zero(r, r);
  for (std::size_t j = 0; j < ku; ++j)
    for (std::size_t i = 0; i < r; ++i) c[i][j] = ker[j][i];
  for (std::size_t j = 0; j < kw; ++j)
    for (std::size_t i = 0; i < r; ++i) c[i][ku + j] = stab[i][pivots[j]];
  Mat c_inv = fp_inverse(c, p);

  std::vector<Mat> gens_u, gens_w;
  for (std::size_t g = 0; g < node.rep.gen_count(); ++g) {
    Mat a = mat_mul(c_inv, mat_mul(node.rep.gen_mat(g), c, p), p);
    Mat u = mat_zero(ku, ku), w = mat_zero(kw, kw);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        bool iu = i < ku, ju = j < ku;
        if (iu && ju) u[i][j] = a[i][j];
        else if (!iu && !ju) w[i - ku][j - ku] = a[i][j];
        else if (a[i][j] != 0)
          throw std::logic_error("split blocks are not invariant");
      }
    gens_u.push_back(std::move(u));
    gens_w.push_back(std::move(w));
  }

  auto slice_inj = [&](std::size_t lo, std::size_t len) {
    Mat cols = mat_zero(r, len);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < len; ++j) cols[i][j] = c[i][lo + j];
    return mat_mul(node.inj, cols, p);
  };
  auto slice_proj = [&](std::size_t lo, std::size_t len) {
    Mat rows = mat_zero(len, r);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < r; ++j) rows[i][j] = c_inv[lo + i][j];
    return mat_mul(rows, node.proj, p);
  };

  Node nu{slice_inj(0, ku), slice_proj(0, ku),
          MatrixRep(node.rep.group(), node.rep.domain(), std::move(gens_u))};
  Node nw{slice_inj(ku, kw), slice_proj(ku, kw),
          MatrixRep(node.rep.group(), node.rep.domain(), std::move(gens_w))};
  return {std::move(nu), std::move(nw)};
}

long require_prime_field_cf(const MatrixRep& rep) {
  if (rep.domain().kind != Domain::Kind::FiniteField)
    throw std::invalid_argument(
        "decomposition needs prime field coefficients");
  return rep.domain().p;
}

} // namespace

std::vector<long long> iso_fingerprint(const MatrixRep& rep) {
  long p = require_prime_field_cf(rep);
  std::size_t r = rep.rank();
  std::vector<long long> fp{static_cast<long long>(r)};
  for (std::size_t g = 1; g < rep.group().order(); ++g) {
    Mat d = rep.element_matrix(g);
    for (std::size_t i = 0; i < r; ++i) d[i][i] = norm(d[i][i] - 1, p);
    // Rank profile of powers until it stabilizes; conjugation-invariant.
    Mat pow = d;
    long long last = static_cast<long long>(r);
    while (true) {
      long long rk = static_cast<long long>(fp_rank(pow, p));
      fp.push_back(rk);
      if (rk == 0 || rk == last) break;
      last = rk;
      pow = mat_mul(pow, d, p);
    }
    fp.push_back(-1);
  }
  return fp;
}

bool isomorphic(const MatrixRep& a, const MatrixRep& b, std::uint64_t seed) {
  long p = require_prime_field_cf(a);
  if (a.rank() != b.rank()) return false;
  if (a.rank() == 0) return true;
  if (iso_fingerprint(a) != iso_fingerprint(b)) return false;
  std::vector<Mat> homs = hom_basis(a, b);
  if (homs.empty()) return false;
  std::size_t r = a.rank(), m = homs.size();
  auto invertible = [&](const Mat& x) { return fp_rank(x, p) == r; };

  double log_total = static_cast<double>(m) * std::log2(static_cast<double>(p));
  if (log_total <= 11.0) {
    std::vector<long long> c(m, 0);
    while (true) {
      std::size_t i = 0;
      while (i < m && c[i] == p - 1) c[i++] = 0;
      if (i == m) break;
      ++c[i];
      if (invertible(combine(homs, c, p))) return true;
    }
    return false; // exhaustive: genuinely no invertible map
  }

  for (const Mat& x : homs)
    if (invertible(x)) return true;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int t = 0; t < 80; ++t) {
    std::vector<long long> c(m);
    for (auto& v : c) v = rng.next(0, p - 1);
    if (invertible(combine(homs, c, p))) return true;
  }
  return false;
}

DecompositionReport decompose(const MatrixRep& rep, std::uint64_t seed,
                              std::size_t rank_bound) {
  long p = require_prime_field_cf(rep);
  if (rep.rank() > rank_bound)
    throw std::invalid_argument("rank " + std::to_string(rep.rank()) +
                                " exceeds the decomposition bound " +
                                std::to_string(rank_bound));
  Rng rng(seed);
  DecompositionReport report;
  report.total_rank = rep.rank();
  if (rep.rank() == 0) return report;

  std::vector<Node> leaves;
  std::vector<bool> leaf_exhausted;
  std::vector<Node> stack;
  stack.push_back(Node{mat_identity(rep.rank()), mat_identity(rep.rank()), rep});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    std::vector<Mat> ends = commutant_basis(node.rep);
    if (ends.size() <= 1) {
      // Commutant is the scalars: local, so certainly indecomposable.
      leaves.push_back(std::move(node));
      leaf_exhausted.push_back(true);
      continue;
    }
    SplitterSearch search = find_splitter(ends, p, rng);
    if (!search.found) {
      leaves.push_back(std::move(node));
      leaf_exhausted.push_back(search.exhausted);
      continue;
    }
    auto [nu, nw] = fitting_split(node, search.op, search.factor, p);
    stack.push_back(std::move(nw));
    stack.push_back(std::move(nu));
  }

  // Group the leaves into isomorphism classes.
  std::vector<std::vector<long long>> fps;
  std::vector<std::size_t> leaf_class(leaves.size());
  std::vector<std::size_t> class_first;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    fps.push_back(iso_fingerprint(leaves[i].rep));
    std::size_t cls = class_first.size();
    for (std::size_t c = 0; c < class_first.size(); ++c) {
      std::size_t j = class_first[c];
      if (fps[j] == fps[i] && isomorphic(leaves[j].rep, leaves[i].rep, seed)) {
        cls = c;
        break;
      }
    }
    if (cls == class_first.size()) class_first.push_back(i);
    leaf_class[i] = cls;
  }

  struct Built {
    SummandClass cls;
    bool certified_exhaustive = false;
    std::size_t order_key;
  };
  std::vector<Built> built;
  for (std::size_t c = 0; c < class_first.size(); ++c) {
    std::size_t j = class_first[c];
    EndoAlgebra endo = end_algebra(leaves[j].rep);
    Built b{SummandClass{leaves[j].rep, 0, endo.dim(), endo.quotient_dim(),
                         fps[j]},
            false, c};
    for (std::size_t i = 0; i < leaves.size(); ++i)
      if (leaf_class[i] == c) {
        ++b.cls.multiplicity;
        if (leaf_exhausted[i]) b.certified_exhaustive = true;
      }
    built.push_back(std::move(b));
  }
  std::sort(built.begin(), built.end(), [](const Built& a, const Built& b) {
    if (a.cls.rep.rank() != b.cls.rep.rank())
      return a.cls.rep.rank() < b.cls.rep.rank();
    if (a.cls.fingerprint != b.cls.fingerprint)
      return a.cls.fingerprint < b.cls.fingerprint;
    return a.cls.end_dim < b.cls.end_dim;
  });
  std::vector<std::size_t> class_order(class_first.size());
  for (std::size_t i = 0; i < built.size(); ++i)
    class_order[built[i].order_key] = i;

  std::size_t rank_sum = 0;
  for (const Built& b : built) {
    rank_sum += b.cls.rep.rank() * b.cls.multiplicity;
    if (b.cls.end_quotient_dim != 1) {
      std::string note = "rank " + std::to_string(b.cls.rep.rank()) +
                         " summand has endomorphism quotient of dimension " +
                         std::to_string(b.cls.end_quotient_dim);
      note += b.certified_exhaustive
                  ? " (indecomposable, residue field extension)"
                  : " (indecomposability rests on the splitter search)";
      report.flags.push_back(std::move(note));
    }
    report.classes.push_back(b.cls);
  }
  if (rank_sum != rep.rank())
    throw std::logic_error("summand ranks do not add up");

  // Certificate projectors, checked outright: idempotent, orthogonal,
  // equivariant, summing to the identity.
  Mat total = mat_zero(rep.rank(), rep.rank());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    Mat proj = mat_mul(leaves[i].inj, leaves[i].proj, p);
    if (mat_mul(proj, proj, p) != proj)
      throw std::logic_error("certificate projector is not idempotent");
    for (std::size_t g = 0; g < rep.gen_count(); ++g)
      if (mat_mul(proj, rep.gen_mat(g), p) != mat_mul(rep.gen_mat(g), proj, p))
        throw std::logic_error("certificate projector is not equivariant");
    for (const Mat& other : report.projectors)
      if (!mat_is_zero(mat_mul(proj, other, p)) ||
          !mat_is_zero(mat_mul(other, proj, p)))
        throw std::logic_error("certificate projectors are not orthogonal");
    total = mat_add(total, proj, p);
    report.projectors.push_back(std::move(proj));
    report.projector_class.push_back(class_order[leaf_class[i]]);
  }
  if (total != mat_identity(rep.rank()))
    throw std::logic_error("certificate projectors do not sum to the identity");
  return report;
}

} // namespace ellb::reps
