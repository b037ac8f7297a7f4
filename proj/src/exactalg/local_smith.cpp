#include "ellb/exactalg/local_smith.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace ellb {

namespace {

// Residues live in [0, modulus); modulus = p^precision fits 32 bits, so a
// product of two residues fits comfortably in 64.
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return (a * b) % m;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::logic_error("local_smith: pivot unit not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

inline int valuation_of(std::uint64_t v, long p) {
  int k = 0;
  std::uint64_t q = static_cast<std::uint64_t>(p);
  while (v % q == 0) {
    v /= q;
    ++k;
  }
  return k;
}

} // namespace

std::size_t LocalSmithResult::rank_mod_p() const {
  std::size_t r = 0;
  for (int v : valuations)
    if (v == 0) ++r;
  return r;
}

std::vector<long> LocalSmithResult::p_part_divisors() const {
  std::vector<long> out;
  for (int v : valuations)
    if (v > 0) {
      long d = 1;
      for (int i = 0; i < v; ++i) d *= prime;
      out.push_back(d);
    }
  return out;
}

LocalSmithResult local_smith(const SparseIntMatrix& m, long p, int precision,
                             std::size_t stop_at_diag,
                             std::size_t max_live_entries) {
  if (p < 2) throw std::invalid_argument("local_smith: prime must be >= 2");
  if (precision == 0) {
    std::uint64_t fit = 1;
    while (precision < 12 &&
           fit <= (1ull << 31) / static_cast<std::uint64_t>(p)) {
      fit *= static_cast<std::uint64_t>(p);
      ++precision;
    }
  }
  if (precision < 1 || precision > 31)
    throw std::invalid_argument("local_smith: precision out of range");
  std::uint64_t modulus = 1;
  for (int i = 0; i < precision; ++i) {
    if (modulus > (1ull << 31) / static_cast<std::uint64_t>(p))
      throw std::invalid_argument("local_smith: p^precision too large");
    modulus *= static_cast<std::uint64_t>(p);
  }

  LocalSmithResult out;
  out.prime = p;
  out.precision = precision;

  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::unordered_map<std::uint32_t, std::uint64_t>> row(rows);
  std::vector<std::unordered_set<std::uint32_t>> col_rows(cols);
  // Entries per valuation level; the first nonzero bucket is the current
  // global minimum, and pivots must come from it for the diagonal
  // valuations to be the true invariant-factor valuations.
  std::vector<std::size_t> level_count(static_cast<std::size_t>(precision), 0);
  // Cached minimum valuation per row. Updates keep it as a lower bound
  // (cheap) and mark the row dirty when the true minimum may have risen;
  // the expensive rescan happens only when the row is popped as a pivot
  // candidate, never inside the bulk update loop.
  std::vector<int> rmin(rows, precision);
  std::vector<char> rmin_dirty(rows, 0);

  std::size_t live_entries = 0;
  auto note_insert = [&](std::size_t i, std::uint64_t v) {
    int lv = valuation_of(v, p);
    ++level_count[static_cast<std::size_t>(lv)];
    ++live_entries;
    if (lv < rmin[i]) rmin[i] = lv;
  };
  auto note_erase = [&](std::size_t i, std::uint64_t v) {
    int lv = valuation_of(v, p);
    --level_count[static_cast<std::size_t>(lv)];
    --live_entries;
    if (lv == rmin[i]) rmin_dirty[i] = 1;
  };

  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [j, bv] : m.row(i)) {
      BigInt r = bv % modulus;
      if (r < 0) r += modulus;
      std::uint64_t v = static_cast<std::uint64_t>(r);
      if (v == 0) continue;
      row[i][static_cast<std::uint32_t>(j)] = v;
      col_rows[j].insert(static_cast<std::uint32_t>(i));
      note_insert(i, v);
    }

  auto global_min_level = [&]() -> int {
    for (std::size_t v = 0; v < level_count.size(); ++v)
      if (level_count[v] > 0) return static_cast<int>(v);
    return -1;
  };

  auto rescan_rmin = [&](std::size_t i) {
    int best = precision;
    for (const auto& [c, v] : row[i]) best = std::min(best, valuation_of(v, p));
    rmin[i] = best;
    rmin_dirty[i] = 0;
  };

  std::vector<std::uint64_t> stamp(rows, 0);
  std::vector<char> row_alive(rows, 1);

  // Heap of (cached row min valuation, row nnz, row, stamp). Cached minima
  // are lower bounds, so the top never sits above the true global minimum;
  // stale or drifted entries are skipped or requeued with corrected keys.
  using Entry = std::tuple<int, std::size_t, std::size_t, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (std::size_t i = 0; i < rows; ++i)
    if (!row[i].empty()) heap.emplace(rmin[i], row[i].size(), i, 0);

  while (out.valuations.size() < stop_at_diag) {
    if (live_entries > max_live_entries)
      throw LocalSmithBudgetExceeded(
          "local_smith: fill-in exceeded the live entry budget");
    int want = global_min_level();
    if (want < 0) break; // matrix is zero mod p^precision
    if (heap.empty())
      throw std::logic_error("local_smith: heap drained with entries left");
    auto [lvl, nnz, pr, st] = heap.top();
    heap.pop();
    if (!row_alive[pr] || st != stamp[pr] || row[pr].empty()) continue;
    if (rmin_dirty[pr]) rescan_rmin(pr);
    if (rmin[pr] != lvl || nnz != row[pr].size()) {
      heap.emplace(rmin[pr], row[pr].size(), pr, st);
      continue;
    }
    // Cached keys only ever undershoot, so an accurate top above the global
    // minimum cannot happen.
    if (lvl > want)
      throw std::logic_error("local_smith: pivot ordering invariant broken");

    // Inside the chosen row take a minimum-valuation entry in the thinnest
    // column (classic Markowitz bias to limit fill-in).
    std::uint32_t pc = 0;
    std::size_t best_cost = SIZE_MAX;
    std::uint64_t pv = 0;
    for (const auto& [c, v] : row[pr])
      if (valuation_of(v, p) == lvl && col_rows[c].size() < best_cost) {
        best_cost = col_rows[c].size();
        pc = c;
        pv = v;
      }

    std::uint64_t pw = 1;
    for (int i = 0; i < lvl; ++i) pw *= static_cast<std::uint64_t>(p);
    std::uint64_t inv_unit = mod_inverse(pv / pw, modulus);

    std::vector<std::uint32_t> victims(col_rows[pc].begin(),
                                       col_rows[pc].end());
    for (std::uint32_t i : victims) {
      if (i == pr) continue;
      std::uint64_t b = row[i][pc];
      // The pivot has globally minimal valuation, so p^lvl divides b and the
      // multiplier below clears the entry exactly, not just approximately.
      std::uint64_t f = mod_mul(b / pw, inv_unit, modulus);
      for (const auto& [c, v] : row[pr]) {
        std::uint64_t delta = mod_mul(f, v, modulus);
        auto it = row[i].find(c);
        if (it == row[i].end()) {
          if (delta != 0) {
            row[i][c] = mod_sub(0, delta, modulus);
            col_rows[c].insert(i);
            note_insert(i, row[i][c]);
          }
        } else {
          note_erase(i, it->second);
          it->second = mod_sub(it->second, delta, modulus);
          if (it->second == 0) {
            row[i].erase(it);
            col_rows[c].erase(i);
          } else {
            note_insert(i, it->second);
          }
        }
      }
      ++stamp[i];
      if (!row[i].empty()) heap.emplace(rmin[i], row[i].size(), i, stamp[i]);
    }

    for (const auto& [c, v] : row[pr]) {
      note_erase(pr, v);
      col_rows[c].erase(pr);
    }
    row[pr].clear();
    row_alive[pr] = 0;
    out.valuations.push_back(lvl);
  }

  std::sort(out.valuations.begin(), out.valuations.end());
  out.diag_count = out.valuations.size();
  return out;
}

} // namespace ellb
