#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ellb::moduli3 {

// The three kinds of summand a standard bundle is built from: line bundles
// w^k, the rank two extension Ea twisted by w^k, and the rank three pushed
// forward structure sheaf FP twisted by w^k.
enum class Kind { Line, Ealpha, FPush };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& text);
int kind_rank(Kind k);

// Twists live in the Picard group, which is cyclic of order 12; raw values
// are kept as provenance and reduced only for comparisons.
int mod12(int t);

struct StandardSummand {
  Kind kind = Kind::Line;
  int twist = 0; // exponent of w, compared mod 12

  int rank() const { return kind_rank(kind); }
  bool same_class(const StandardSummand& o) const {
    return kind == o.kind && mod12(twist) == mod12(o.twist);
  }
  std::string to_string() const;
};

// Orders by (kind, twist mod 12), with the raw twist as a tiebreaker so
// printing stays deterministic.
bool canonical_less(const StandardSummand& a, const StandardSummand& b);

// Finite multiset of summands, kept canonically sorted.  Equality ignores
// the raw twist representatives and compares classes only.
class StandardBundle {
public:
  StandardBundle() = default;
  explicit StandardBundle(std::vector<StandardSummand> summands);

  const std::vector<StandardSummand>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }
  int rank() const;

  StandardBundle add(const StandardSummand& s) const;
  StandardBundle remove(std::size_t index) const;

  // Class key (kind, twist mod 12) per summand, in canonical order.
  std::vector<std::pair<int, int>> key() const;
  std::string to_string() const;

  bool operator==(const StandardBundle& o) const { return key() == o.key(); }
  bool operator!=(const StandardBundle& o) const { return !(*this == o); }

private:
  std::vector<StandardSummand> summands_;
};

bool bundle_less(const StandardBundle& a, const StandardBundle& b);
StandardBundle direct_sum(const StandardBundle& a, const StandardBundle& b);

// Dimension of H^i(b tensor w^j) over F_3.  Line w^k contributes to H^1
// exactly when k + j = 2 mod 12 and to H^2 when k + j = 6; Ea w^k
// contributes at k + j = 4 and 6; FP has no higher cohomology at all.
// Throws std::invalid_argument unless i is 1 or 2.
int cohomology_dim(const StandardBundle& b, int i, int j);

// Ext^i(x, y) between single summands, bilinear over bundles.  With
// d = source twist - target twist mod 12 the nonzero cells are
//   Line -> Line: i=1 at d = -2, i=2 at d = -6
//   Line -> Ea:   i=1 at d = -4, i=2 at d = -6
//   Ea -> Line:   i=1 at d = -2, i=2 at d = -4
//   Ea -> Ea:     i=1 at d = -2, i=2 at d = 0
// and FP on either side kills everything in positive degrees.
int ext_dim_pair(const StandardSummand& x, const StandardSummand& y, int i);

// The Ea -> Ea entry in degree two is not a direct table lookup; it comes
// from the beta periodicity isomorphism, and results that used it say so.
struct ExtResult {
  int dim = 0;
  bool derived_entry = false;
};

ExtResult ext_dim_info(const StandardBundle& x, const StandardBundle& y, int i);
int ext_dim(const StandardBundle& x, const StandardBundle& y, int i);

// Duality: w^k goes to w^-k, Ea w^k to Ea w^(2-k), FP w^k to FP w^-k.
StandardSummand dual(const StandardSummand& s);
StandardBundle dual(const StandardBundle& b);

// Tensor products that stay standard cannot be formed from two FP factors;
// that product falls outside the rule set.
class Unsupported : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Distributes over summands: lines shift twists, Ea (x) Ea = FP + w^-2 and
// Ea (x) FP = FP + FP(-2) with twists adding.  Throws Unsupported when both
// factors contain an FP summand that would have to meet.
StandardBundle tensor(const StandardBundle& x, const StandardBundle& y);

// True iff vanishing of H^1(b tensor w^j) for every j mod 12 forces the
// rank of b to be divisible by three.
bool rank_h1_corollary_check(const StandardBundle& b);

} // namespace ellb::moduli3
