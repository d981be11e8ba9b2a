#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hashpim/line_set.hpp"
#include "hashpim/partition.hpp"

namespace hashpim::keccak {

/// Address map of one 72 x 37 SHA-3 unit. Lane (x, y) lives in column
/// origin_col + 5x + y, bit z in row origin_row + z. Everything right of the
/// state and below it is scratch.
struct UnitLayout {
  std::uint32_t origin_row = 0;
  std::uint32_t origin_col = 0;

  static constexpr std::uint32_t kRows = 72;
  static constexpr std::uint32_t kCols = 37;
  static constexpr std::uint32_t kLaneBits = 64;

  // column offsets
  static constexpr std::uint32_t lane(unsigned x, unsigned y) { return 5 * x + y; }
  static constexpr std::uint32_t cc(unsigned x) { return 25 + x; }  // C[x], later D
  static constexpr std::uint32_t dd(unsigned x) { return 30 + x; }  // rotated C, chi terms
  static constexpr std::uint32_t kP = 35;  // staging lane for pi and the round constant
  static constexpr std::uint32_t kQ = 36;  // copy temporary
  // row offsets
  static constexpr std::uint32_t kSpare = 64;   // redundant slice for rotation
  static constexpr std::uint32_t kRotBit = 65;  // offset bit for the current step
  static constexpr std::uint32_t kRotBitN = 66; // its complement
  static constexpr std::uint32_t kT1 = 67;
  static constexpr std::uint32_t kT2 = 68;
  static constexpr std::uint32_t kHold = 69;
  static constexpr std::uint32_t kHold2 = 70;

  std::uint32_t row(std::uint32_t offset) const { return origin_row + offset; }
  std::uint32_t col(std::uint32_t offset) const { return origin_col + offset; }
};

/// Units of one crossbar plus the shared constant blocks: the offset bit-planes
/// sit in rows below the last unit row (one row per bit, lane columns aligned
/// with every unit column) and the round constants in columns right of the last
/// unit column (one column per round, bit rows aligned with every unit row).
class CrossbarPlan {
 public:
  /// Throws InputError when the geometry cannot hold the units and constants.
  explicit CrossbarPlan(const CrossbarConfig& config);

  std::uint32_t unit_rows() const { return unit_rows_; }  // units stacked vertically
  std::uint32_t unit_cols() const { return unit_cols_; }  // units side by side
  std::uint32_t unit_count() const { return unit_rows_ * unit_cols_; }

  /// Unit u sits at unit row u / unit_cols(), unit column u % unit_cols().
  UnitLayout unit(std::uint32_t u) const;
  std::uint32_t unit_row_of(std::uint32_t u) const { return u / unit_cols_; }
  std::uint32_t unit_col_of(std::uint32_t u) const { return u % unit_cols_; }
  std::uint32_t row_origin(std::uint32_t unit_row) const { return unit_row * unit_height_; }
  std::uint32_t col_origin(std::uint32_t unit_col) const { return unit_col * unit_width_; }

  std::uint32_t rot_row(unsigned bit) const { return unit_rows_ * unit_height_ + bit; }
  std::uint32_t rc_col(unsigned round) const { return unit_cols_ * unit_width_ + round; }

  static constexpr unsigned kRotBits = 6;
  static constexpr unsigned kRounds = 24;

  const CrossbarConfig& config() const { return config_; }

  /// Structured description of the address map and the constants.
  std::string describe_json() const;

 private:
  CrossbarConfig config_;
  std::uint32_t unit_rows_ = 0;
  std::uint32_t unit_cols_ = 0;
  std::uint32_t unit_height_ = 0;
  std::uint32_t unit_width_ = 0;
};

/// The units taking part in a lockstep program. Gates are replicated over the
/// active units: in-row gates once per unit column (lines = rows of its active
/// units), in-column gates once per unit row (lines = columns of its active units).
class UnitSet {
 public:
  UnitSet(const CrossbarPlan& plan, std::vector<std::uint32_t> units);
  static UnitSet all(const CrossbarPlan& plan);

  const std::vector<std::uint32_t>& units() const { return units_; }
  bool empty() const { return units_.empty(); }
  std::size_t size() const { return units_.size(); }

  struct RowReplica {
    std::uint32_t col0;  // unit column origin
    LineSet rows;
  };
  struct ColumnReplica {
    std::uint32_t row0;  // unit row origin
    LineSet cols;
  };

  /// Rows origin_row + [lo, hi) of every active unit, grouped by unit column.
  std::vector<RowReplica> row_replicas(std::uint32_t lo, std::uint32_t hi) const;
  /// Columns origin_col + offset of every active unit, grouped by unit row.
  std::vector<ColumnReplica> column_replicas(const std::vector<std::uint32_t>& col_offsets) const;

  /// The given column offsets in every unit column holding an active unit.
  LineSet active_columns(const std::vector<std::uint32_t>& col_offsets) const;
  /// Rows origin_row + [lo, hi) in every unit row holding an active unit.
  LineSet active_rows(std::uint32_t lo, std::uint32_t hi) const;

  std::uint32_t top_unit_row() const;
  std::uint32_t left_unit_col() const;

  const CrossbarPlan& plan() const { return *plan_; }

 private:
  const CrossbarPlan* plan_;
  std::vector<std::uint32_t> units_;
};

}  // namespace hashpim::keccak
