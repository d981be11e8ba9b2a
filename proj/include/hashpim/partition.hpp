#pragma once

#include <cstdint>
#include <vector>

namespace hashpim {

struct CrossbarConfig {
  std::uint32_t rows = 1024;
  std::uint32_t cols = 1024;
  /// Partitions along the columns (splits every wordline); 27 units side by side.
  std::uint32_t horizontal_partitions = 27;
  /// Partitions along the rows (splits every bitline); 14 units stacked.
  std::uint32_t vertical_partitions = 14;
  std::uint32_t unit_rows = 72;
  std::uint32_t unit_cols = 37;
  double gate_delay_ns = 3.0;
  double gate_energy_fj = 6.4;
  double cell_area_f2 = 4.0;
  /// Peripheral read/write cost per region row, charged to the io label.
  std::uint32_t io_cycles_per_row = 1;
  /// Reading a never-written cell as a gate input raises StrictnessError.
  bool strict_init = false;

  /// Throws InputError on non-positive fields or partitions that do not fit.
  void validate() const;
};

/// Which boundary a switch sits on. A Row switch joins two vertically adjacent
/// row groups (it sits on the bitlines); a Col switch joins two horizontally
/// adjacent column groups (it sits on the wordlines).
enum class SwitchAxis : std::uint8_t { Row, Col };

struct SwitchId {
  SwitchAxis axis = SwitchAxis::Row;
  /// Boundary index: joins group `index` with group `index + 1`.
  std::uint32_t index = 0;
  friend constexpr bool operator==(const SwitchId&, const SwitchId&) = default;
};

/// Static partition geometry. Boundary lists hold the first row/column of every
/// group after the first; the leftover strip past the last unit forms its own
/// group (the crossbar's shared constant storage lives there).
class PartitionMap {
 public:
  PartitionMap() = default;
  PartitionMap(std::uint32_t rows, std::uint32_t cols, std::vector<std::uint32_t> row_boundaries,
               std::vector<std::uint32_t> col_boundaries);

  static PartitionMap from_config(const CrossbarConfig& cfg);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  const std::vector<std::uint32_t>& row_boundaries() const { return row_boundaries_; }
  const std::vector<std::uint32_t>& col_boundaries() const { return col_boundaries_; }

  std::uint32_t row_groups() const { return static_cast<std::uint32_t>(row_boundaries_.size()) + 1; }
  std::uint32_t col_groups() const { return static_cast<std::uint32_t>(col_boundaries_.size()) + 1; }
  std::uint32_t block_count() const { return row_groups() * col_groups(); }

  std::uint32_t row_group(std::uint32_t row) const { return row_group_of_[row]; }
  std::uint32_t col_group(std::uint32_t col) const { return col_group_of_[col]; }
  std::uint32_t block(std::uint32_t row_group, std::uint32_t col_group) const {
    return row_group * col_groups() + col_group;
  }

  /// First line and one-past-last line of a group.
  std::uint32_t row_group_begin(std::uint32_t g) const;
  std::uint32_t row_group_end(std::uint32_t g) const;
  std::uint32_t col_group_begin(std::uint32_t g) const;
  std::uint32_t col_group_end(std::uint32_t g) const;

  /// A cheap identity for caching validation results.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<std::uint32_t> row_boundaries_;
  std::vector<std::uint32_t> col_boundaries_;
  std::vector<std::uint32_t> row_group_of_;
  std::vector<std::uint32_t> col_group_of_;
  std::uint64_t fingerprint_ = 0;
};

}  // namespace hashpim
