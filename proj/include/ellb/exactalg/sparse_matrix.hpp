#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ellb/exactalg/bigint.hpp"

namespace ellb {

// Sparse integer matrix.  Zero entries are never stored: set(i, j, 0) erases.
// Row-major storage keeps multiplication and elimination cache-friendly
// enough at desk scale.
class SparseIntMatrix {
public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t entry_count() const;
  bool is_zero() const { return entry_count() == 0; }

  BigInt get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, BigInt value);
  void add(std::size_t r, std::size_t c, const BigInt& value);

  const std::map<std::size_t, BigInt>& row(std::size_t r) const;

  static SparseIntMatrix identity(std::size_t n);
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  SparseIntMatrix transpose() const;

  bool operator==(const SparseIntMatrix& other) const;

  // JSON triple (rows, cols, entry list); entries carry decimal strings so
  // arbitrary-precision values survive the round trip.
  std::string to_json() const;
  static SparseIntMatrix from_json(const std::string& text);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, BigInt>> data_;

  void check_index(std::size_t r, std::size_t c) const;
};

} // namespace ellb
