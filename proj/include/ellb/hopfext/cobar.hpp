#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ellb/exactalg/bigint.hpp"
#include "ellb/exactalg/modp.hpp"
#include "ellb/exactalg/local_smith.hpp"
#include "ellb/exactalg/sparse_matrix.hpp"
#include "ellb/exactalg/sparse_elim.hpp"
#include "ellb/hopfext/weierstrass.hpp"

namespace ellb::hopfext {

// Thrown when a requested bidegree basis exceeds the configured size bound.
struct ResourceCapExceeded : std::runtime_error {
  ResourceCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Basis word of the reduced cobar complex in cohomological degree s: an
// a-monomial coefficient on the far left and s nonconstant rst-monomial
// slots.  At most six slots are supported, which covers every computation
// this library performs; deeper requests fail the resource guard first.
struct Word {
  std::uint32_t amon = 0;
  std::array<std::uint16_t, 6> slots{};
  std::uint8_t s = 0;

  long degree() const;
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const;
  std::string to_string() const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Integer linear combination of words, all of one bidegree. Hash storage:
// the differential's inner loops accumulate and cancel millions of terms,
// and ordered-map comparisons on 40-byte keys dominate otherwise. Anything
// user-visible sorts before printing.
using CobarElt = std::unordered_map<Word, BigInt, WordHash>;

void cobar_add(CobarElt& acc, const Word& w, const BigInt& c);
std::string cobar_to_string(const CobarElt& e);

// A differential matrix whose rows are indexed lazily by the target words
// actually hit, in order of first appearance.  Row words beyond `row_words`
// are zero rows of the true matrix and do not affect ranks or divisors.
struct LazyMatrix {
  SparseIntMatrix mat{0, 0};
  std::vector<Word> row_words;
  std::unordered_map<Word, std::uint32_t, WordHash> row_index;
};

// The reduced cobar complex of the Weierstrass algebroid, with bases and
// differentials produced on demand and memoized.  All enumeration orders are
// deterministic: a-monomials and slot monomials follow the descending
// lexicographic generator order of the underlying graded rings.
class CobarEngine {
public:
  CobarEngine(std::shared_ptr<const Algebroid> alg, std::size_t basis_cap);

  const Algebroid& algebroid() const { return *alg_; }
  std::size_t basis_cap() const { return cap_; }

  // Basis size by counting alone (no enumeration, no cap check).
  long long count_basis(long s, long n) const;

  // Materialized basis; throws ResourceCapExceeded if the count exceeds the
  // configured bound.
  const std::vector<Word>& basis(long s, long n) const;
  const std::unordered_map<Word, std::uint32_t, WordHash>& index(long s,
                                                                 long n) const;

  // Differential of a single basis word, as a sparse element one degree up.
  CobarElt d_word(const Word& w) const;
  void d_word_into(const Word& w, const BigInt& scale, CobarElt& acc) const;
  // Differential of a general element (asserts homogeneity).
  CobarElt apply_d(const CobarElt& x) const;

  // d^s(n): C^s(n) -> C^{s+1}(n) with both bases materialized.
  SparseIntMatrix d_matrix(long s, long n) const;
  // Same map with lazily indexed rows; only the source basis must fit the cap.
  LazyMatrix d_matrix_lazy(long s, long n) const;

  // Verifies d(d(w)) = 0 for every basis word of C^{s_mid-1}(n), covering the
  // composite through bidegree (s_mid, n).  Throws on any nonzero composite.
  void check_dd(long s_mid, long n) const;

  // Rank of d^s(n) over F_p (memoized); a lower bound for the integer rank.
  std::size_t rank_mod_p(long s, long n, long p) const;
  // Nonzero invariant factors of d^s(n) over Z (memoized).
  const std::vector<BigInt>& divisors(long s, long n) const;

  // Predicted number of nonzero entries of d^s(n), from the exact column
  // count and the term counts of a deterministic sample of basis words.
  // Cheap, and the basis for all feasibility gating in the chart layer.
  long long nnz_estimate(long s, long n) const;

  // Invariant factors of d^s(n) localized at p (memoized on success).  The
  // diag count is a lower bound for the integer rank that also sees
  // p-torsive factors, so one run serves both the free-rank certificate of
  // the source bidegree and the torsion of the target.  Throws
  // LocalSmithBudgetExceeded when fill-in passes max_live_entries.
  const LocalSmithResult& local_divisors(long s, long n, long p,
                                         std::size_t max_live_entries) const;
  bool has_local_divisors(long s, long n, long p) const;

  // Lower bound for the rank of d^s(n): mod-p elimination that stops as soon
  // as `target` pivots are found (memoized at the best value reached).
  std::size_t rank_lower_bound(long s, long n, long p, std::size_t target,
                               std::size_t max_live_entries) const;

  // Whether x (an element of C^{s+1}(n)) lies in the image of d^s(n) mod p.
  bool in_image_mod_p(long s, long n, long p, const CobarElt& x) const;

  // Multiplication by the discriminant polynomial (degree +12, same s).
  CobarElt delta_times(const CobarElt& x) const;

  // Concatenation product C^{s1}(n1) x C^{s2}(n2) -> C^{s1+s2}(n1+n2); the
  // right factor's a-coefficient is pushed to the far left through the left
  // factor's slots via eta_R.
  CobarElt concat(const CobarElt& x, const CobarElt& y) const;

  // Bidegree of a nonzero homogeneous element (throws on zero or mixed).
  std::pair<long, long> bidegree(const CobarElt& x) const;

private:
  struct PairKey {
    long s, n;
    bool operator<(const PairKey& o) const {
      return s != o.s ? s < o.s : n < o.n;
    }
  };

  const std::vector<Monomial>& amons_of(long degree) const;
  const std::vector<Monomial>& rst_of(long degree) const;
  long long words_count(long s, long m) const;
  void enumerate_words(long s, long m, std::array<std::uint16_t, 6>& slots,
                       long pos, std::uint32_t amon,
                       std::vector<Word>& out) const;

  std::shared_ptr<const Algebroid> alg_;
  std::size_t cap_;

  mutable std::map<long, std::vector<Monomial>> amon_memo_;
  mutable std::map<long, std::vector<Monomial>> rst_memo_;
  mutable std::map<std::pair<long, long>, long long> words_count_memo_;
  mutable std::map<PairKey, std::vector<Word>> basis_memo_;
  mutable std::map<PairKey, std::unordered_map<Word, std::uint32_t, WordHash>>
      index_memo_;
  mutable std::map<std::pair<PairKey, long>, std::size_t> rank_memo_;
  mutable std::map<PairKey, std::vector<BigInt>> divisor_memo_;
  mutable std::map<PairKey, long long> nnz_memo_;
  mutable std::map<std::pair<PairKey, long>, LocalSmithResult> local_memo_;
  mutable std::map<std::pair<PairKey, long>, std::size_t> local_failed_;
  mutable std::map<std::pair<PairKey, long>, std::size_t> rank_lb_memo_;
};

} // namespace ellb::hopfext
