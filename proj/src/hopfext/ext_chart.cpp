#include "ellb/hopfext/ext_chart.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ellb/exactalg/local_smith.hpp"
#include "ellb/exactalg/sparse_elim.hpp"

namespace ellb::hopfext {

namespace {

long p_valuation(BigInt x, long p) {
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

BigInt p_power(long p, long v) {
  BigInt out = 1;
  for (long i = 0; i < v; ++i) out *= p;
  return out;
}

std::string dims_note(const CobarEngine& eng, long s, long n) {
  std::ostringstream out;
  out << "dim C^" << (s - 1) << "(" << n << ") = " << eng.count_basis(s - 1, n)
      << ", dim C^" << s << "(" << n << ") = " << eng.count_basis(s, n);
  return out.str();
}

FGAbGroup local_group_from_valuations(long p, const std::vector<int>& vals) {
  std::vector<BigInt> torsion;
  for (int v : vals)
    if (v > 0) torsion.push_back(p_power(p, v));
  return FGAbGroup(0, torsion);
}

// The homology cell (s, n), with route selection by predicted cost.
//
// Torsion of the quotient comes from the incoming differential (the kernel
// it lands in is a direct summand): exact integer invariant factors when the
// matrix is narrow, p-local elimination over Z/p^K otherwise.  The p-local
// diagonal enumerates every invariant factor of p-valuation below K, so its
// length is a lower bound for the rational rank that also sees the p-torsion
// a plain mod-p rank would drop.
//
// The free rank is pinned by a sandwich: dim - rank(d_in) - rank(d_out) =
// free >= 0, with both ranks entering as certified lower bounds.  When the
// candidate hits zero the bounds are tight, which simultaneously certifies
// free = 0 and that no invariant factor of valuation >= K hid from the
// p-local diagonal.  Anything the budgets cannot reach is reported in status
// and flags rather than guessed.
//
// reuse_above widens the outgoing-rank gate when the cell one degree up is
// also going to be computed: the same elimination then doubles as that
// cell's torsion data, so a heavier run pays for itself.
ExtCell compute_cell(const CobarEngine& eng, long s, long n, long p,
                     const ChartLimits& limits, bool reuse_above) {
  ExtCell cell;
  cell.s = s;
  cell.n = n;

  if (s == 0) {
    // Kernel of the first differential inside a free module: always free,
    // and the matrix is narrow (one column per a-monomial).
    std::size_t dim = eng.basis(0, n).size();
    std::size_t r = exact_rank(eng.d_matrix_lazy(0, n).mat);
    cell.integral = FGAbGroup(dim - r, {});
    cell.localized = cell.integral;
    cell.integral_known = true;
    cell.localized_known = true;
    cell.status = "exact";
    return cell;
  }

  const long long dim_mid = eng.count_basis(s, n);
  if (dim_mid == 0) {
    cell.integral_known = true;
    cell.localized_known = true;
    cell.status = "exact";
    return cell;
  }

  const long long exact_cols =
      std::min<long long>(limits.exact_divisor_cols, eng.basis_cap());
  const long long dim_in = eng.count_basis(s - 1, n);

  // Incoming differential.
  bool torsion_is_integral = false;
  std::vector<BigInt> integral_torsion;
  std::vector<int> local_valuations;
  long long d_in_rank = 0; // exact when torsion_is_integral, else a lower
                           // bound that is tight unless a factor of
                           // valuation >= K exists
  if (dim_in <= exact_cols) {
    const std::vector<BigInt>& chain = eng.divisors(s - 1, n);
    d_in_rank = static_cast<long long>(chain.size());
    for (const BigInt& d : chain)
      if (d != 1) integral_torsion.push_back(d);
    torsion_is_integral = true;
  } else if (eng.nnz_estimate(s - 1, n) <= limits.local_nnz_budget) {
    try {
      const LocalSmithResult& ls =
          eng.local_divisors(s - 1, n, p, limits.elim_live_budget);
      d_in_rank = static_cast<long long>(ls.diag_count);
      for (int v : ls.valuations)
        if (v > 0) local_valuations.push_back(v);
    } catch (const LocalSmithBudgetExceeded&) {
      cell.status = "capped";
      cell.flags.push_back(
          "incoming differential exceeded the elimination budget: " +
          dims_note(eng, s, n));
      return cell;
    }
  } else {
    cell.status = "capped";
    std::ostringstream f;
    f << "incoming differential over budget: ~" << eng.nnz_estimate(s - 1, n)
      << " predicted entries (limit " << limits.local_nnz_budget << "), "
      << dims_note(eng, s, n);
    cell.flags.push_back(f.str());
    return cell;
  }

  // Outgoing rank, as a certified lower bound; -1 when no route was
  // affordable.  The full p-local run is preferred over a rank-only pass
  // because its result doubles as the torsion data of the cell one
  // cohomological degree up.
  long long r_out = -1;
  bool out_rank_exact = false;
  const long long out_gate =
      reuse_above ? limits.local_nnz_budget : limits.rank_nnz_budget;
  if (dim_mid <= exact_cols) {
    r_out = static_cast<long long>(eng.divisors(s, n).size());
    out_rank_exact = true;
  } else if (eng.has_local_divisors(s, n, p)) {
    r_out = static_cast<long long>(
        eng.local_divisors(s, n, p, limits.elim_live_budget).diag_count);
  } else if (eng.nnz_estimate(s, n) <= out_gate) {
    try {
      r_out = static_cast<long long>(
          eng.local_divisors(s, n, p, limits.elim_live_budget).diag_count);
    } catch (const LocalSmithBudgetExceeded&) {
      // Retry over a small prime field: entries vanish more often mod 5
      // than mod p^K, and the elimination may stop at the sandwich target.
      try {
        std::size_t target = static_cast<std::size_t>(
            std::max<long long>(0, dim_mid - d_in_rank));
        r_out = static_cast<long long>(eng.rank_lower_bound(
            s, n, 5, target, limits.elim_live_budget));
      } catch (const LocalSmithBudgetExceeded&) {
        cell.flags.push_back(
            "outgoing differential exceeded the elimination budget: " +
            dims_note(eng, s + 1, n));
      }
    }
  } else {
    std::ostringstream f;
    f << "outgoing differential over budget: ~" << eng.nnz_estimate(s, n)
      << " predicted entries (limit " << out_gate << ")";
    cell.flags.push_back(f.str());
  }

  long long candidate = -1;
  if (r_out >= 0) {
    candidate = dim_mid - d_in_rank - r_out;
    if (candidate < 0)
      throw std::logic_error("rank bounds exceeded the middle dimension at (" +
                             std::to_string(s) + "," + std::to_string(n) +
                             ")");
  }

  if (torsion_is_integral) {
    // rank(d_in) is exact here, so the free rank resolves when the outgoing
    // bound is exact (both ranks known) or the sandwich closes at zero.
    if (candidate == 0 || (candidate > 0 && out_rank_exact)) {
      cell.integral = FGAbGroup(static_cast<std::size_t>(candidate),
                                integral_torsion);
      cell.localized = localize_at_p(cell.integral, p);
      cell.integral_known = true;
      cell.localized_known = true;
      cell.status = "exact";
      if (!(cell.localized == cell.integral))
        cell.flags.push_back("pre-localization torsion: integral " +
                             cell.integral.to_string() + ", local part " +
                             cell.localized.to_string());
    } else {
      cell.integral = FGAbGroup(0, integral_torsion);
      cell.localized = localize_at_p(cell.integral, p);
      cell.status = "torsion-exact";
      std::ostringstream f;
      f << "torsion certified, free rank unresolved";
      if (candidate > 0) f << " (at most " << candidate << ")";
      cell.flags.push_back(f.str());
    }
    return cell;
  }

  // p-local torsion route.  The valuation list is complete below K by
  // construction; closure at zero rules out anything at or above K, making
  // the local group exactly known even though the integral one is not.
  if (candidate == 0) {
    cell.localized = local_group_from_valuations(p, local_valuations);
    cell.localized_known = true;
    cell.status = "local-exact";
    cell.flags.push_back(
        "integral group not computed at this size (p-local route)");
  } else {
    cell.status = "bounded";
    std::ostringstream f;
    f << "local torsion below precision: "
      << local_group_from_valuations(p, local_valuations).to_string()
      << "; unresolved rank";
    if (candidate > 0) f << " at most " << candidate;
    f << " (free or higher torsion)";
    cell.flags.push_back(f.str());
  }
  return cell;
}

std::vector<BigInt> cocycle_to_dense(const CobarEngine& eng, long s, long n,
                                     const CobarElt& x) {
  const auto& idx = eng.index(s, n);
  std::vector<BigInt> out(eng.basis(s, n).size(), BigInt(0));
  for (const auto& [w, c] : x) {
    auto it = idx.find(w);
    if (it == idx.end())
      throw std::invalid_argument("cocycle has support outside bidegree (" +
                                  std::to_string(s) + "," + std::to_string(n) +
                                  ")");
    out[it->second] = c;
  }
  return out;
}

CobarElt dense_to_cobar(const CobarEngine& eng, long s, long n,
                        const std::vector<BigInt>& v) {
  const std::vector<Word>& b = eng.basis(s, n);
  CobarElt out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace(b[i], v[i]);
  return out;
}

bool dense_feasible(const CobarEngine& eng, long s, long n,
                    const ChartLimits& limits) {
  long long lim =
      std::min<long long>(limits.dense_basis_dim, eng.basis_cap());
  return eng.count_basis(s, n) <= lim &&
         (s == 0 || eng.count_basis(s - 1, n) <= lim) &&
         eng.count_basis(s + 1, n) <= lim;
}

struct DensePack {
  SparseIntMatrix d_in;
  SparseIntMatrix d_out;
  std::unique_ptr<HomologyBasis> hb;
};

DensePack build_dense(const CobarEngine& eng, long s, long n) {
  DensePack pack;
  std::size_t dim = eng.basis(s, n).size();
  pack.d_in = s >= 1 ? eng.d_matrix(s - 1, n) : SparseIntMatrix(dim, 0);
  pack.d_out = eng.d_matrix(s, n);
  pack.hb = std::make_unique<HomologyBasis>(pack.d_out, pack.d_in);
  return pack;
}

// Is the class p-locally zero, given exact coordinates in the quotient?
bool coords_vanish_locally(const HomologyBasis& hb,
                           const HomologyBasis::ClassCoords& cc, long p) {
  for (const BigInt& c : cc.free_part)
    if (c != 0) return false;
  const std::vector<BigInt>& tors = hb.group().torsion;
  for (std::size_t i = 0; i < tors.size(); ++i) {
    BigInt ppart = p_power(p, p_valuation(tors[i], p));
    if (cc.torsion[i] % ppart != 0) return false;
  }
  return true;
}

// Extracts a generating cocycle of the (cyclic) p-primary part of a small
// cell: the invariant-factor generator scaled by the prime-to-p part of its
// order.
ExtClassData extract_p_part_generator(const CobarEngine& eng, long s, long n,
                                      long p, const std::string& name) {
  DensePack pack = build_dense(eng, s, n);
  const std::vector<BigInt>& tors = pack.hb->group().torsion;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < tors.size(); ++i)
    if (tors[i] % p == 0) hits.push_back(i);
  if (hits.size() != 1)
    throw std::logic_error("p-primary part at (" + std::to_string(s) + "," +
                           std::to_string(n) +
                           ") is not cyclic; no canonical generator");
  std::size_t i = hits[0];
  BigInt scale = tors[i] / p_power(p, p_valuation(tors[i], p));
  std::vector<BigInt> v = pack.hb->torsion_generators()[i];
  for (BigInt& c : v) c *= scale;

  ExtClassData cls;
  cls.name = name;
  cls.s = s;
  cls.n = n;
  cls.cocycle = dense_to_cobar(eng, s, n, v);

  // The scaled generator must be a nonzero cycle whose p-th multiple dies
  // locally (it generates a copy of Z/p^v).
  if (!eng.apply_d(cls.cocycle).empty())
    throw std::logic_error("extracted generator is not a cycle");
  auto cc = pack.hb->coords_of(cocycle_to_dense(eng, s, n, cls.cocycle));
  if (coords_vanish_locally(*pack.hb, cc, p))
    throw std::logic_error("extracted generator is locally zero");
  return cls;
}

} // namespace

const ExtCell& ExtChartData::cell(long s, long n) const {
  auto it = cells.find({s, n});
  if (it == cells.end())
    throw std::out_of_range("no chart cell at (" + std::to_string(s) + "," +
                            std::to_string(n) + ")");
  return it->second;
}

bool ExtChartData::has_cell(long s, long n) const {
  return cells.count({s, n}) > 0;
}

const ExtCell& ensure_cell(ExtChartData& chart, long s, long n) {
  auto it = chart.cells.find({s, n});
  if (it != chart.cells.end()) return it->second;
  bool reuse_above = s + 1 <= chart.s_max && n <= chart.n_max;
  ExtCell cell = compute_cell(*chart.engine, s, n, chart.prime, chart.limits,
                              reuse_above);
  return chart.cells.emplace(std::make_pair(s, n), std::move(cell))
      .first->second;
}

ExtChartData ext_chart(long s_max, long n_max, long prime,
                       std::size_t basis_cap, ChartLimits limits) {
  if (s_max < 0 || n_max < 0)
    throw std::invalid_argument("chart ranges must be nonnegative");
  if (prime < 2)
    throw std::invalid_argument("chart prime must be at least 2");

  ExtChartData chart;
  chart.s_max = s_max;
  chart.n_max = n_max;
  chart.prime = prime;
  chart.limits = limits;
  chart.engine =
      std::make_shared<CobarEngine>(Algebroid::build(), basis_cap);

  // Ascending cohomological degree, so the p-local elimination done for a
  // cell's outgoing rank is picked up again as the torsion data of the cell
  // directly above it.
  for (long s = 0; s <= s_max; ++s)
    for (long n = 0; n <= n_max; ++n) ensure_cell(chart, s, n);

  // Named classes, where their cells fall inside the rectangle.  The odd
  // torsion classes are specific to the 3-local chart.
  if (n_max >= 12) {
    ExtClassData delta_cls;
    delta_cls.name = "Delta";
    delta_cls.s = 0;
    delta_cls.n = 12;
    for (const auto& [k, c] : chart.engine->algebroid().delta().terms) {
      Word w;
      w.amon = k;
      w.s = 0;
      delta_cls.cocycle.emplace(w, c);
    }
    if (!chart.engine->apply_d(delta_cls.cocycle).empty())
      throw std::logic_error("discriminant class is not a cycle");
    chart.cells.at({0, 12}).classes.push_back("Delta");
    chart.named.emplace("Delta", std::move(delta_cls));
  }
  if (prime == 3) {
    if (s_max >= 1 && n_max >= 2) {
      ExtClassData alpha =
          extract_p_part_generator(*chart.engine, 1, 2, 3, "alpha");
      chart.cells.at({1, 2}).classes.push_back("alpha");
      chart.named.emplace("alpha", std::move(alpha));
    }
    if (s_max >= 2 && n_max >= 6) {
      ExtClassData beta =
          extract_p_part_generator(*chart.engine, 2, 6, 3, "beta");
      chart.cells.at({2, 6}).classes.push_back("beta");
      chart.named.emplace("beta", std::move(beta));
    }
  }
  return chart;
}

ExtClassData yoneda_product(const ExtChartData& chart, const ExtClassData& a,
                            const ExtClassData& b) {
  const CobarEngine& eng = *chart.engine;
  if (!eng.apply_d(a.cocycle).empty() || !eng.apply_d(b.cocycle).empty())
    throw std::invalid_argument("product factors must be cycles");
  ExtClassData out;
  out.name = a.name + "*" + b.name;
  out.s = a.s + b.s;
  out.n = a.n + b.n;
  out.cocycle = eng.concat(a.cocycle, b.cocycle);
  if (!out.cocycle.empty()) {
    auto [s, n] = eng.bidegree(out.cocycle);
    if (s != out.s || n != out.n)
      throw std::logic_error("product landed in the wrong bidegree");
  }
  // Cycles concatenate to cycles; anything else means the product's
  // coefficient bookkeeping broke.
  if (!eng.apply_d(out.cocycle).empty())
    throw std::logic_error("product of cycles failed to be a cycle");
  return out;
}

bool class_vanishes_localized(ExtChartData& chart, const ExtClassData& cls) {
  const CobarEngine& eng = *chart.engine;
  long p = chart.prime;
  if (cls.cocycle.empty()) return true;
  if (!eng.apply_d(cls.cocycle).empty())
    throw std::invalid_argument("class cocycle is not a cycle");
  if (cls.s == 0) {
    // Degree-zero cohomology sits inside a free module; a nonzero cycle
    // stays nonzero after localization.
    return false;
  }

  const ExtCell& cell = ensure_cell(chart, cls.s, cls.n);
  if (cell.localized_known && cell.localized.is_trivial()) return true;

  if (dense_feasible(eng, cls.s, cls.n, chart.limits)) {
    DensePack pack = build_dense(eng, cls.s, cls.n);
    auto cc =
        pack.hb->coords_of(cocycle_to_dense(eng, cls.s, cls.n, cls.cocycle));
    return coords_vanish_locally(*pack.hb, cc, p);
  }

  // Mod-p membership: outside the image implies nonzero (the class misses
  // p*H); inside the image implies the class lies in p*H, which is zero
  // exactly when the local group has exponent p.
  bool in_image = eng.in_image_mod_p(cls.s - 1, cls.n, p, cls.cocycle);
  if (!in_image) return false;
  bool exponent_p = cell.localized_known && cell.localized.free_rank == 0;
  for (const BigInt& t : cell.localized.torsion)
    if (t != p) exponent_p = false;
  if (exponent_p) return true;
  throw std::runtime_error(
      "cannot certify vanishing at (" + std::to_string(cls.s) + "," +
      std::to_string(cls.n) + "): cell too large for exact coordinates and "
      "the mod-p certificate is inconclusive");
}

StabilizedCell delta_stabilize(ExtChartData& chart, long s, long n) {
  const CobarEngine& eng = *chart.engine;
  long p = chart.prime;
  StabilizedCell out;

  const ExtCell& c0 = ensure_cell(chart, s, n);
  if (!c0.localized_known) {
    out.flags.push_back("base cell (" + std::to_string(s) + "," +
                        std::to_string(n) +
                        ") has no certified local group: " + c0.status);
    out.flags.push_back("not stabilized in range");
    return out;
  }
  out.group = c0.localized;

  // Step verification handles the two shapes that occur in this chart:
  // trivial groups (zero maps between zero groups) and cyclic groups of
  // order p, where a carried generator is pushed through multiplication by
  // the discriminant and tested for survival.
  bool trivial = c0.localized.is_trivial();
  bool cyclic_p = c0.localized.free_rank == 0 &&
                  c0.localized.torsion.size() == 1 &&
                  c0.localized.torsion[0] == p;
  if (!trivial && !cyclic_p) {
    out.flags.push_back("step verification unsupported for local group " +
                        c0.localized.to_string());
    out.flags.push_back("not stabilized in range");
    return out;
  }

  std::optional<CobarElt> carried;
  if (cyclic_p) {
    if (!dense_feasible(eng, s, n, chart.limits)) {
      out.flags.push_back("generator extraction infeasible at the base cell");
      out.flags.push_back("not stabilized in range");
      return out;
    }
    carried = extract_p_part_generator(eng, s, n, p, "gen").cocycle;
  }

  bool failed = false;
  for (int step = 1; step <= 2 && !failed; ++step) {
    long tn = n + 12 * step;
    // The target cell gates itself: if its differentials are over budget it
    // comes back capped or bounded, and the step is flagged instead of
    // verified.
    const ExtCell& ct = ensure_cell(chart, s, tn);
    if (!ct.localized_known) {
      out.flags.push_back("step " + std::to_string(step) + " target (" +
                          std::to_string(s) + "," + std::to_string(tn) +
                          ") not certified in range: " + ct.status);
      break;
    }
    if (!(ct.localized == c0.localized)) {
      out.flags.push_back("local value changes at (" + std::to_string(s) +
                          "," + std::to_string(tn) + "): " +
                          ct.localized.to_string() + " vs " +
                          c0.localized.to_string());
      failed = true;
      break;
    }
    if (trivial) {
      ++out.verified_steps;
      continue;
    }
    CobarElt image = eng.delta_times(*carried);
    if (!eng.apply_d(image).empty())
      throw std::logic_error("discriminant multiple of a cycle is not a "
                             "cycle");
    if (eng.in_image_mod_p(s - 1, tn, p, image)) {
      // The pushed generator lands in p*H of an exponent-p group: it died.
      out.flags.push_back("multiplication by the discriminant annihilates "
                          "the generator at step " + std::to_string(step));
      failed = true;
      break;
    }
    ++out.verified_steps;
    carried = std::move(image);
  }

  out.stabilized = !failed && out.verified_steps >= 1;
  if (out.verified_steps < 2 && out.stabilized)
    out.flags.push_back("only " + std::to_string(out.verified_steps) +
                        " of 2 steps verified in range");
  if (!out.stabilized) out.flags.push_back("not stabilized in range");
  return out;
}

} // namespace ellb::hopfext
