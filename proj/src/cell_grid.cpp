#include "hashpim/cell_grid.hpp"

#include <algorithm>
#include <array>

#include "hashpim/kernels.hpp"

namespace hashpim {

CellGrid::CellGrid(std::uint32_t rows, std::uint32_t cols)
    : rows_(rows),
      cols_(cols),
      row_words_((cols + 63) / 64),
      col_words_((rows + 63) / 64),
      tile_rows_((rows + 63) / 64),
      tile_cols_((cols + 63) / 64) {
  const std::size_t padded = std::size_t{tile_rows_} * 64 * row_words_;
  rv_.assign(padded, 0);
  ri_.assign(padded, 0);
  cv_.assign(std::size_t{tile_cols_} * 64 * col_words_, 0);
  ci_.assign(cv_.size(), 0);
  col_stale_.assign(std::size_t{tile_rows_} * tile_cols_, 0);
  row_stale_.assign(col_stale_.size(), 0);
}

void CellGrid::reset() {
  std::fill(rv_.begin(), rv_.end(), 0);
  std::fill(ri_.begin(), ri_.end(), 0);
  std::fill(cv_.begin(), cv_.end(), 0);
  std::fill(ci_.begin(), ci_.end(), 0);
  std::fill(col_stale_.begin(), col_stale_.end(), 0);
  std::fill(row_stale_.begin(), row_stale_.end(), 0);
  col_stale_list_.clear();
  row_stale_list_.clear();
}

void CellGrid::transpose_tile_to_cols(std::uint32_t tile) const {
  const std::uint32_t tr = tile / tile_cols_;
  const std::uint32_t tc = tile % tile_cols_;
  std::array<std::uint64_t, 64> v{};
  std::array<std::uint64_t, 64> f{};
  for (std::uint32_t i = 0; i < 64; ++i) {
    const std::size_t at = std::size_t{tr * 64 + i} * row_words_ + tc;
    v[i] = rv_[at];
    f[i] = ri_[at];
  }
  kernels::transpose64(v.data());
  kernels::transpose64(f.data());
  for (std::uint32_t j = 0; j < 64; ++j) {
    const std::size_t at = std::size_t{tc * 64 + j} * col_words_ + tr;
    cv_[at] = v[j];
    ci_[at] = f[j];
  }
}

void CellGrid::transpose_tile_to_rows(std::uint32_t tile) const {
  const std::uint32_t tr = tile / tile_cols_;
  const std::uint32_t tc = tile % tile_cols_;
  std::array<std::uint64_t, 64> v{};
  std::array<std::uint64_t, 64> f{};
  for (std::uint32_t j = 0; j < 64; ++j) {
    const std::size_t at = std::size_t{tc * 64 + j} * col_words_ + tr;
    v[j] = cv_[at];
    f[j] = ci_[at];
  }
  kernels::transpose64(v.data());
  kernels::transpose64(f.data());
  for (std::uint32_t i = 0; i < 64; ++i) {
    const std::size_t at = std::size_t{tr * 64 + i} * row_words_ + tc;
    rv_[at] = v[i];
    ri_[at] = f[i];
  }
}

void CellGrid::sync_col_major() const {
  for (auto t : col_stale_list_) {
    transpose_tile_to_cols(t);
    col_stale_[t] = 0;
  }
  col_stale_list_.clear();
}

void CellGrid::sync_row_major() const {
  for (auto t : row_stale_list_) {
    transpose_tile_to_rows(t);
    row_stale_[t] = 0;
  }
  row_stale_list_.clear();
}

void CellGrid::mark_row_written(std::uint32_t row, std::uint32_t first_word, std::uint32_t n,
                                const std::uint64_t* mask) {
  const std::uint32_t tr = row / 64;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    const std::uint32_t t = tile_index(tr, first_word + i);
    if (!col_stale_[t]) {
      col_stale_[t] = 1;
      col_stale_list_.push_back(t);
    }
  }
}

void CellGrid::mark_col_written(std::uint32_t col, std::uint32_t first_word, std::uint32_t n,
                                const std::uint64_t* mask) {
  const std::uint32_t tc = col / 64;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    const std::uint32_t t = tile_index(first_word + i, tc);
    if (!row_stale_[t]) {
      row_stale_[t] = 1;
      row_stale_list_.push_back(t);
    }
  }
}

bool CellGrid::get(std::uint32_t row, std::uint32_t col) const {
  const std::uint32_t t = tile_index(row / 64, col / 64);
  if (row_stale_[t]) return (cv_[std::size_t{col} * col_words_ + row / 64] >> (row % 64)) & 1U;
  return (rv_[std::size_t{row} * row_words_ + col / 64] >> (col % 64)) & 1U;
}

bool CellGrid::initialized(std::uint32_t row, std::uint32_t col) const {
  const std::uint32_t t = tile_index(row / 64, col / 64);
  if (row_stale_[t]) return (ci_[std::size_t{col} * col_words_ + row / 64] >> (row % 64)) & 1U;
  return (ri_[std::size_t{row} * row_words_ + col / 64] >> (col % 64)) & 1U;
}

void CellGrid::set(std::uint32_t row, std::uint32_t col, bool value) {
  const std::uint32_t t = tile_index(row / 64, col / 64);
  if (row_stale_[t]) {
    transpose_tile_to_rows(t);
    row_stale_[t] = 0;
    std::erase(row_stale_list_, t);
  }
  const std::uint64_t bit = std::uint64_t{1} << (col % 64);
  std::uint64_t& v = rv_[std::size_t{row} * row_words_ + col / 64];
  v = value ? (v | bit) : (v & ~bit);
  ri_[std::size_t{row} * row_words_ + col / 64] |= bit;
  if (!col_stale_[t]) {
    col_stale_[t] = 1;
    col_stale_list_.push_back(t);
  }
}

bool operator==(const CellGrid& a, const CellGrid& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  a.sync_row_major();
  b.sync_row_major();
  return a.rv_ == b.rv_ && a.ri_ == b.ri_;
}

}  // namespace hashpim
