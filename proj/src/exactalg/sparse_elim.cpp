#include "ellb/exactalg/sparse_elim.hpp"

#include <cstdint>
#include <queue>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "ellb/exactalg/smith.hpp"

namespace ellb {

namespace {

struct Overflow {};

inline std::int64_t checked_fma_sub(std::int64_t acc, std::int64_t f,
                                    std::int64_t v) {
  // acc - f*v with overflow detection
  __int128 r = static_cast<__int128>(acc) - static_cast<__int128>(f) * v;
  if (r > INT64_MAX || r < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(r);
}

inline BigInt checked_fma_sub(const BigInt& acc, const BigInt& f,
                              const BigInt& v) {
  return acc - f * v;
}

template <typename T>
bool is_unit_entry(const T& v) {
  return v == 1 || v == -1;
}

template <typename T>
DivisorSummary collapse(const SparseIntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::unordered_map<std::uint32_t, T>> row(rows);
  std::vector<std::unordered_set<std::uint32_t>> col_rows(cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [j, v] : m.row(i)) {
      row[i][static_cast<std::uint32_t>(j)] = static_cast<T>(v);
      col_rows[j].insert(static_cast<std::uint32_t>(i));
    }

  std::vector<char> row_alive(rows, 1), col_alive(cols, 1);
  std::vector<std::uint64_t> stamp(rows, 0);

  using Entry = std::tuple<std::size_t, std::uint32_t, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (std::size_t i = 0; i < rows; ++i)
    if (!row[i].empty()) heap.emplace(row[i].size(), i, 0);

  std::size_t unit_pivots = 0;

  while (!heap.empty()) {
    auto [nnz, pr, st] = heap.top();
    heap.pop();
    if (!row_alive[pr] || st != stamp[pr] || row[pr].empty()) continue;
    if (nnz != row[pr].size()) {
      heap.emplace(row[pr].size(), pr, st);
      continue;
    }
    // Sparsest row wins; inside it take the unit entry in the thinnest column.
    std::uint32_t pc = 0;
    std::size_t best_cost = SIZE_MAX;
    T pv{};
    for (const auto& [c, v] : row[pr])
      if (is_unit_entry(v) && col_rows[c].size() < best_cost) {
        best_cost = col_rows[c].size();
        pc = c;
        pv = v;
      }
    if (best_cost == SIZE_MAX) continue; // no unit here; requeued on change

    // Clear column pc with row pr, then drop both; this splits off one
    // invariant factor equal to 1 and leaves the Schur complement behind.
    std::vector<std::uint32_t> victims(col_rows[pc].begin(),
                                       col_rows[pc].end());
    for (std::uint32_t i : victims) {
      if (i == pr) continue;
      T a = row[i][pc];
      T f = a * pv; // pivot is +-1 so this is a / pivot
      for (const auto& [c, v] : row[pr]) {
        auto it = row[i].find(c);
        if (it == row[i].end()) {
          T nv = checked_fma_sub(T{}, f, v);
          if (nv != 0) {
            row[i][c] = nv;
            col_rows[c].insert(i);
          }
        } else {
          it->second = checked_fma_sub(it->second, f, v);
          if (it->second == 0) {
            row[i].erase(it);
            col_rows[c].erase(i);
          }
        }
      }
      ++stamp[i];
      if (!row[i].empty()) heap.emplace(row[i].size(), i, stamp[i]);
    }
    for (const auto& [c, v] : row[pr]) col_rows[c].erase(pr);
    row[pr].clear();
    row_alive[pr] = 0;
    col_alive[pc] = 0;
    ++unit_pivots;
  }

  // Compact what survived into a dense core.
  std::vector<std::uint32_t> col_map(cols, UINT32_MAX);
  std::size_t core_cols = 0;
  for (std::size_t j = 0; j < cols; ++j)
    if (col_alive[j] && !col_rows[j].empty())
      col_map[j] = static_cast<std::uint32_t>(core_cols++);
  std::size_t core_rows = 0;
  for (std::size_t i = 0; i < rows; ++i)
    if (row_alive[i] && !row[i].empty()) ++core_rows;

  DenseMat core(core_rows, std::vector<BigInt>(core_cols, BigInt(0)));
  std::size_t ri = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!row_alive[i] || row[i].empty()) continue;
    for (const auto& [c, v] : row[i]) core[ri][col_map[c]] = BigInt(v);
    ++ri;
  }

  DenseSmithResult ds = dense_smith(std::move(core), DenseSmithOptions{});

  DivisorSummary out;
  out.unit_pivots = unit_pivots;
  out.core_rows = core_rows;
  out.core_cols = core_cols;
  out.rank = unit_pivots + ds.rank;
  out.divisors.assign(unit_pivots, BigInt(1));
  out.divisors.insert(out.divisors.end(), ds.diagonal.begin(),
                      ds.diagonal.end());
  return out;
}

} // namespace

DivisorSummary exact_divisors(const SparseIntMatrix& m) {
  try {
    return collapse<std::int64_t>(m);
  } catch (const Overflow&) {
    DivisorSummary out = collapse<BigInt>(m);
    out.used_bigint = true;
    return out;
  }
}

std::size_t exact_rank(const SparseIntMatrix& m) {
  return exact_divisors(m).rank;
}

} // namespace ellb
