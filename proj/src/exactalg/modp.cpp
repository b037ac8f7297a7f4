#include "ellb/exactalg/modp.hpp"

#include <stdexcept>

namespace ellb {

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return t;
}

namespace {

// out <- out + c * other (mod p), both sorted by row
void axpy(PVec& out, std::int64_t c, const PVec& other, std::int64_t p) {
  PVec merged;
  merged.reserve(out.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < out.size() || j < other.size()) {
    if (j == other.size() ||
        (i < out.size() && out[i].first < other[j].first)) {
      merged.push_back(out[i++]);
    } else if (i == out.size() || other[j].first < out[i].first) {
      std::int64_t v = (c * other[j].second) % p;
      if (v < 0) v += p;
      if (v != 0) merged.emplace_back(other[j].first, v);
      ++j;
    } else {
      std::int64_t v = (out[i].second + c * other[j].second) % p;
      if (v < 0) v += p;
      if (v != 0) merged.emplace_back(out[i].first, v);
      ++i;
      ++j;
    }
  }
  out = std::move(merged);
}

} // namespace

PColumnReducer::PColumnReducer(std::size_t rows, std::int64_t p,
                               bool track_kernel)
    : rows_(rows), p_(p), track_kernel_(track_kernel),
      pivot_by_row_(rows, -1) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
}

void PColumnReducer::reduce(PVec& col, PVec* comb) const {
  while (!col.empty()) {
    std::uint32_t top = col.back().first;
    std::int64_t piv = pivot_by_row_[top];
    if (piv < 0) return;
    // Pivot columns are normalized to top value 1, so subtract directly.
    std::int64_t c = p_ - col.back().second;
    axpy(col, c, stored_[piv], p_);
    if (comb) axpy(*comb, c, stored_comb_[piv], p_);
  }
}

bool PColumnReducer::add_column(PVec col) {
  PVec comb;
  if (track_kernel_)
    comb = {{static_cast<std::uint32_t>(columns_added_), 1}};
  ++columns_added_;

  reduce(col, track_kernel_ ? &comb : nullptr);
  if (col.empty()) {
    if (track_kernel_) kernel_.push_back(std::move(comb));
    return false;
  }
  std::int64_t scale = inv_mod(col.back().second, p_);
  if (scale != 1) {
    for (auto& [r, v] : col) v = (v * scale) % p_;
    if (track_kernel_)
      for (auto& [r, v] : comb) v = (v * scale) % p_;
  }
  pivot_by_row_[col.back().first] = static_cast<std::int64_t>(stored_.size());
  stored_.push_back(std::move(col));
  if (track_kernel_) stored_comb_.push_back(std::move(comb));
  ++pivot_count_;
  return true;
}

bool PColumnReducer::in_span(PVec col) const {
  reduce(col, nullptr);
  return col.empty();
}

PVec to_pvec(const std::vector<BigInt>& dense, std::int64_t p) {
  PVec out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(dense[i] % p);
    if (v < 0) v += p;
    if (v != 0) out.emplace_back(static_cast<std::uint32_t>(i), v);
  }
  return out;
}

PVec sparse_col_to_pvec(const SparseIntMatrix& m, std::size_t col,
                        std::int64_t p) {
  PVec out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& row = m.row(i);
    auto it = row.find(col);
    if (it == row.end()) continue;
    std::int64_t v = static_cast<std::int64_t>(it->second % p);
    if (v < 0) v += p;
    if (v != 0) out.emplace_back(static_cast<std::uint32_t>(i), v);
  }
  return out;
}

namespace {

// Transposing once turns per-column extraction from O(rows) scans into a
// single pass over the entries.
std::vector<PVec> all_columns(const SparseIntMatrix& m, std::int64_t p) {
  std::vector<PVec> cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, val] : m.row(i)) {
      std::int64_t v = static_cast<std::int64_t>(val % p);
      if (v < 0) v += p;
      if (v != 0) cols[j].emplace_back(static_cast<std::uint32_t>(i), v);
    }
  return cols; // row index ascending within each column by construction
}

} // namespace

std::size_t rank_mod_p(const SparseIntMatrix& m, std::int64_t p) {
  PColumnReducer red(m.rows(), p);
  for (auto& col : all_columns(m, p)) red.add_column(std::move(col));
  return red.rank();
}

std::vector<PVec> kernel_mod_p(const SparseIntMatrix& m, std::int64_t p) {
  PColumnReducer red(m.rows(), p, true);
  for (auto& col : all_columns(m, p)) red.add_column(std::move(col));
  return red.kernel();
}

} // namespace ellb
