#include "ellb/exactalg/sparse_matrix.hpp"

#include <stdexcept>

#include <json.hpp>

namespace ellb {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

void SparseIntMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("matrix index out of range");
}

std::size_t SparseIntMatrix::entry_count() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

BigInt SparseIntMatrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto& row = data_[r];
  auto it = row.find(c);
  return it == row.end() ? BigInt(0) : it->second;
}

void SparseIntMatrix::set(std::size_t r, std::size_t c, BigInt value) {
  check_index(r, c);
  if (value == 0)
    data_[r].erase(c);
  else
    data_[r][c] = std::move(value);
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const BigInt& value) {
  if (value == 0) return;
  check_index(r, c);
  auto& row = data_[r];
  auto [it, inserted] = row.emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  }
}

const std::map<std::size_t, BigInt>& SparseIntMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  return data_[r];
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix dimensions not composable");
  SparseIntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : other.data_[k]) out.add(i, j, a * b);
  return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) out.data_[j][i] = v;
  return out;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string SparseIntMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["rows"] = rows_;
  j["cols"] = cols_;
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i])
      entries.push_back({i, c, v.str()});
  j["entries"] = std::move(entries);
  return j.dump();
}

SparseIntMatrix SparseIntMatrix::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SparseIntMatrix m(j.at("rows").get<std::size_t>(),
                    j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    BigInt v(e.at(2).get<std::string>());
    m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), std::move(v));
  }
  return m;
}

} // namespace ellb
