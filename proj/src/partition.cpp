#include "hashpim/partition.hpp"

#include <string>

#include "hashpim/errors.hpp"

namespace hashpim {

void CrossbarConfig::validate() const {
  if (rows == 0 || cols == 0 || horizontal_partitions == 0 || vertical_partitions == 0 ||
      unit_rows == 0 || unit_cols == 0 || io_cycles_per_row == 0) {
    throw InputError("crossbar config: all counts must be positive");
  }
  if (!(gate_delay_ns > 0) || !(gate_energy_fj > 0) || !(cell_area_f2 > 0)) {
    throw InputError("crossbar config: gate delay, gate energy and cell area must be positive");
  }
  if (static_cast<std::uint64_t>(vertical_partitions) * unit_rows > rows) {
    throw InputError("crossbar config: " + std::to_string(vertical_partitions) + " x " +
                     std::to_string(unit_rows) + " rows exceed " + std::to_string(rows));
  }
  if (static_cast<std::uint64_t>(horizontal_partitions) * unit_cols > cols) {
    throw InputError("crossbar config: " + std::to_string(horizontal_partitions) + " x " +
                     std::to_string(unit_cols) + " columns exceed " + std::to_string(cols));
  }
}

namespace {

std::vector<std::uint32_t> group_table(std::uint32_t n, const std::vector<std::uint32_t>& bounds) {
  std::vector<std::uint32_t> table(n);
  std::uint32_t g = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    while (g < bounds.size() && bounds[g] <= i) ++g;
    table[i] = g;
  }
  return table;
}

void check_bounds(const std::vector<std::uint32_t>& b, std::uint32_t n, const char* what) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0 || b[i] >= n || (i > 0 && b[i] <= b[i - 1])) {
      throw InputError(std::string("partition map: ") + what +
                       " boundaries must be strictly increasing and inside the grid");
    }
  }
}

}  // namespace

PartitionMap::PartitionMap(std::uint32_t rows, std::uint32_t cols,
                           std::vector<std::uint32_t> row_boundaries,
                           std::vector<std::uint32_t> col_boundaries)
    : rows_(rows),
      cols_(cols),
      row_boundaries_(std::move(row_boundaries)),
      col_boundaries_(std::move(col_boundaries)) {
  check_bounds(row_boundaries_, rows_, "row");
  check_bounds(col_boundaries_, cols_, "column");
  row_group_of_ = group_table(rows_, row_boundaries_);
  col_group_of_ = group_table(cols_, col_boundaries_);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) { h = (h ^ v) * 1099511628211ULL; };
  mix(rows_);
  mix(cols_);
  for (auto b : row_boundaries_) mix(b);
  mix(0xFFFF);
  for (auto b : col_boundaries_) mix(b);
  fingerprint_ = h;
}

PartitionMap PartitionMap::from_config(const CrossbarConfig& cfg) {
  cfg.validate();
  std::vector<std::uint32_t> rb;
  std::vector<std::uint32_t> cb;
  for (std::uint32_t k = 1; k <= cfg.vertical_partitions; ++k) {
    if (k * cfg.unit_rows < cfg.rows) rb.push_back(k * cfg.unit_rows);
  }
  for (std::uint32_t k = 1; k <= cfg.horizontal_partitions; ++k) {
    if (k * cfg.unit_cols < cfg.cols) cb.push_back(k * cfg.unit_cols);
  }
  return {cfg.rows, cfg.cols, std::move(rb), std::move(cb)};
}

std::uint32_t PartitionMap::row_group_begin(std::uint32_t g) const {
  return g == 0 ? 0 : row_boundaries_[g - 1];
}
std::uint32_t PartitionMap::row_group_end(std::uint32_t g) const {
  return g < row_boundaries_.size() ? row_boundaries_[g] : rows_;
}
std::uint32_t PartitionMap::col_group_begin(std::uint32_t g) const {
  return g == 0 ? 0 : col_boundaries_[g - 1];
}
std::uint32_t PartitionMap::col_group_end(std::uint32_t g) const {
  return g < col_boundaries_.size() ? col_boundaries_[g] : cols_;
}

}  // namespace hashpim
