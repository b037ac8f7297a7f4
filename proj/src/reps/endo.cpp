#include "ellb/reps/endo.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "ellb/exactalg/modp.hpp"

namespace ellb::reps {

namespace {

long long norm(long long v, long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// Full reduced echelon form over F_2 on bitpacked rows; the commutant
// systems reach ~2000 x 900 and word-parallel XOR keeps them instant.
std::vector<std::size_t> echelon_binary(Mat& a) {
  std::size_t rows = mat_rows(a), cols = mat_cols(a);
  std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> packed(
      rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] & 1) packed[i][j / 64] |= std::uint64_t(1) << (j % 64);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t w = c / 64;
    std::uint64_t bit = std::uint64_t(1) << (c % 64);
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (packed[i][w] & bit) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(packed[r], packed[sel]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || !(packed[i][w] & bit)) continue;
      for (std::size_t k = w; k < words; ++k) packed[i][k] ^= packed[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = (packed[i][j / 64] >> (j % 64)) & 1;
  return pivots;
}

// Reduced echelon form in place; returns the pivot columns.  P = 0 reads
// the modulus at runtime; a compile-time P lets the compiler strength-
// reduce the inner-loop reductions.
template <long P>
std::vector<std::size_t> echelon_impl(Mat& a, long rp) {
  const long p = P != 0 ? P : rp;
  auto md = [&](long long v) {
    long long r = v % p;
    return r < 0 ? r + p : r;
  };
  std::size_t rows = mat_rows(a), cols = mat_cols(a);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (md(a[i][c]) != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    long long inv = inv_mod(md(a[r][c]), p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = md(a[r][j] * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      long long f = md(a[i][c]);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = md(a[i][j] - f * a[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}



// Stacks the constraint "X A_i = B_i X" for each generator pair into one
// linear system on the entries of X (shape rb x ra) and returns a kernel
// basis reshaped into matrices.
std::vector<Mat> solve_intertwiners(const std::vector<Mat>& a_gens,
                                    const std::vector<Mat>& b_gens,
                                    std::size_t ra, std::size_t rb, long p) {
  std::size_t unknowns = ra * rb;
  Mat sys = mat_zero(a_gens.size() * unknowns, unknowns);
  for (std::size_t g = 0; g < a_gens.size(); ++g) {
    const Mat& a = a_gens[g];
    const Mat& b = b_gens[g];
    // Constraint row (g, i, j): sum_k X[i][k] a[k][j] - b[i][k] X[k][j] = 0.
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < ra; ++j) {
        auto& row = sys[(g * rb + i) * ra + j];
        for (std::size_t k = 0; k < ra; ++k)
          row[i * ra + k] = norm(row[i * ra + k] + a[k][j], p);
        for (std::size_t k = 0; k < rb; ++k)
          row[k * ra + j] = norm(row[k * ra + j] - b[i][k], p);
      }
  }
  std::vector<Mat> out;
  for (const auto& v : fp_kernel(sys, p)) {
    Mat x = mat_zero(rb, ra);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < ra; ++j) x[i][j] = v[i * ra + j];
    out.push_back(std::move(x));
  }
  return out;
}

long require_prime_field(const MatrixRep& rep) {
  if (rep.domain().kind != Domain::Kind::FiniteField)
    throw std::invalid_argument(
        "endomorphism computations need prime field coefficients");
  return rep.domain().p;
}

} // namespace

std::vector<std::size_t> fp_echelon(Mat& a, long p) {
  if (p == 2) return echelon_binary(a);
  if (p == 3) return echelon_impl<3>(a, p);
  return echelon_impl<0>(a, p);
}

std::size_t fp_rank(Mat a, long p) {
  if (a.empty()) return 0;
  return fp_echelon(a, p).size();
}

std::vector<std::vector<long long>> fp_kernel(const Mat& a, long p) {
  std::size_t cols = mat_cols(a);
  Mat work = a;
  std::vector<std::size_t> pivots = fp_echelon(work, p);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<long long>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long long> v(cols, 0);
    v[free] = 1;
    // Back-substitute: pivot row r has its pivot at pivots[r] with value 1.
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = norm(-work[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat fp_pow(Mat base, unsigned long e, long p) {
  std::size_t n = mat_rows(base);
  Mat acc = mat_identity(n);
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base, p);
    base = mat_mul(base, base, p);
    e >>= 1;
  }
  return acc;
}

Mat fp_inverse(const Mat& a, long p) {
  std::size_t n = mat_rows(a);
  if (n != mat_cols(a)) throw std::invalid_argument("inverse of a non-square");
  Mat work = a;
  for (std::size_t i = 0; i < n; ++i) {
    work[i].resize(2 * n, 0);
    work[i][n + i] = 1;
  }
  std::vector<std::size_t> pivots = fp_echelon(work, p);
  if (pivots.size() != n || pivots.back() >= n)
    throw std::invalid_argument("matrix is singular");
  Mat inv = mat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
  return inv;
}

long long fp_trace(const Mat& a, long p) {
  long long t = 0;
  for (std::size_t i = 0; i < mat_rows(a); ++i) t = norm(t + a[i][i], p);
  return t;
}

std::vector<Mat> commutant_basis(const MatrixRep& rep) {
  long p = require_prime_field(rep);
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < rep.gen_count(); ++i) gens.push_back(rep.gen_mat(i));
  return solve_intertwiners(gens, gens, rep.rank(), rep.rank(), p);
}

std::vector<Mat> hom_basis(const MatrixRep& a, const MatrixRep& b) {
  long p = require_prime_field(a);
  if (!(a.domain() == b.domain()) || a.group().name() != b.group().name())
    throw std::invalid_argument("maps need matching group and domain");
  std::vector<Mat> ga, gb;
  for (std::size_t i = 0; i < a.gen_count(); ++i) {
    ga.push_back(a.gen_mat(i));
    gb.push_back(b.gen_mat(i));
  }
  return solve_intertwiners(ga, gb, a.rank(), b.rank(), p);
}

EndoAlgebra end_algebra(const MatrixRep& rep) {
  long p = require_prime_field(rep);
  EndoAlgebra algebra;
  algebra.p = p;
  algebra.rep_rank = rep.rank();
  algebra.basis = commutant_basis(rep);

  std::vector<Mat> cur = algebra.basis;
  unsigned long power = 1; // p^k for the current chain step
  while (!cur.empty()) {
    std::size_t m = cur.size();
    // T[i][j] = Tr((cur_i cur_j)^{p^k}); the first step needs no product
    // power and collapses to the bilinear trace form.
    Mat t = mat_zero(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (power == 1) {
          long long s = 0;
          for (std::size_t r = 0; r < mat_rows(cur[i]); ++r)
            for (std::size_t c = 0; c < mat_cols(cur[i]); ++c)
              s += cur[i][r][c] * cur[j][c][r];
          t[i][j] = norm(s, p);
        } else {
          Mat prod = mat_mul(cur[i], cur[j], p);
          t[i][j] = fp_trace(fp_pow(std::move(prod), power, p), p);
        }
      }
    // Solve x^T T = 0 and map the kernel back to matrices.
    std::vector<std::vector<long long>> kern = fp_kernel(mat_transpose(t), p);
    std::vector<Mat> next;
    for (const auto& v : kern) {
      Mat x = mat_zero(rep.rank(), rep.rank());
      for (std::size_t i = 0; i < m; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t r = 0; r < rep.rank(); ++r)
          for (std::size_t c = 0; c < rep.rank(); ++c)
            x[r][c] = norm(x[r][c] + v[i] * cur[i][r][c], p);
      }
      next.push_back(std::move(x));
    }
    bool last = power > algebra.rep_rank;
    cur = std::move(next);
    if (last) break;
    power *= static_cast<unsigned long>(p);
  }
  algebra.radical = std::move(cur);
  return algebra;
}

} // namespace ellb::reps
