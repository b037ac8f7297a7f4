#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ellb/exactalg/homology.hpp"
#include "ellb/hopfext/cobar.hpp"

namespace ellb::hopfext {

// Route budgets for per-cell homology.  Small cells get exact integer
// invariant factors; mid-size cells get p-local elimination, which certifies
// the localized group without ever leaving machine words; cells whose
// differentials are predicted to be too heavy degrade to a weaker but still
// honest answer and say so in their status and flags.
struct ChartLimits {
  std::size_t exact_divisor_cols = 1200;     // full integer route, in columns
  long long local_nnz_budget = 2000000;      // p-local route, in predicted
                                             // entries of the differential
  long long rank_nnz_budget = 600000;        // tighter gate for eliminations
                                             // that only settle a free rank
                                             // and serve no neighboring cell
  std::size_t elim_live_budget = 30000000;   // hard fill-in stop inside one
                                             // elimination (memory guard)
  std::size_t dense_basis_dim = 800;         // explicit generator extraction
};

// One cohomology cell of the chart.
//
// status semantics:
//   "exact":         integral and localized groups both pinned down
//   "local-exact":   localized group certified; integral not claimed
//   "torsion-exact": both group fields carry certified torsion with the
//                    free rank left at zero as a placeholder; flags carry
//                    the unresolved free-rank bound
//   "bounded":       nothing certified; flags carry the partial evidence
//   "capped":        not attempted; predicted cost exceeded the budgets
// The two _known fields say when a group field is the complete certified
// group; flags explain every degradation in words.
struct ExtCell {
  long s = 0;
  long n = 0;
  bool integral_known = false;
  FGAbGroup integral;
  bool localized_known = false;
  FGAbGroup localized;
  std::string status;
  std::vector<std::string> flags;
  std::vector<std::string> classes;
};

// A named class carried by an explicit cocycle.
struct ExtClassData {
  std::string name;
  long s = 0;
  long n = 0;
  CobarElt cocycle;
};

// Result of following multiplication by the discriminant up from a cell.
struct StabilizedCell {
  FGAbGroup group;         // local value the cell settles on
  bool stabilized = false; // at least one step verified, none failed
  std::size_t verified_steps = 0;
  std::vector<std::string> flags;
};

// Local cohomology chart of the elliptic moduli algebroid over a rectangle
// of bidegrees, with named generating classes where they live.  The engine
// is kept so later product and stabilization queries reuse every cached
// basis, elimination and rank.
struct ExtChartData {
  long s_max = 0;
  long n_max = 0;
  long prime = 3;
  ChartLimits limits;
  std::map<std::pair<long, long>, ExtCell> cells;
  std::map<std::string, ExtClassData> named;
  std::shared_ptr<CobarEngine> engine;

  const ExtCell& cell(long s, long n) const;
  bool has_cell(long s, long n) const;
};

ExtChartData ext_chart(long s_max, long n_max, long prime,
                       std::size_t basis_cap = 20000,
                       ChartLimits limits = ChartLimits{});

// Computes one cell outside (or inside) the chart rectangle and caches it in
// the chart.  Used by stabilization, which must look 12 and 24 degrees up.
const ExtCell& ensure_cell(ExtChartData& chart, long s, long n);

// Concatenation product of two classes; the result's cocycle is verified to
// be a cycle.
ExtClassData yoneda_product(const ExtChartData& chart, const ExtClassData& a,
                            const ExtClassData& b);

// Whether the class is zero after localizing at the chart prime.  Exact on
// small cells (explicit coordinates); on larger cells falls back to a mod-p
// membership certificate, which can only be trusted under conditions the
// implementation checks.  Throws if no route can certify an answer.
bool class_vanishes_localized(ExtChartData& chart, const ExtClassData& cls);

// Follows multiplication by the discriminant from (s, n) to (s, n+12) and
// (s, n+24) as far as the computation routes allow, verifying each step is
// an isomorphism of localized groups.  Never silently degrades: every
// unverified or skipped step is flagged, and `stabilized` is true only if at
// least one step was verified and none failed.
StabilizedCell delta_stabilize(ExtChartData& chart, long s, long n);

} // namespace ellb::hopfext
