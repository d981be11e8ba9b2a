#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hashpim/bundle.hpp"
#include "hashpim/cell_grid.hpp"
#include "hashpim/partition.hpp"
#include "hashpim/stats.hpp"

namespace hashpim {

/// Half-open index range [begin, end).
struct Range {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;
  std::uint32_t size() const { return end > begin ? end - begin : 0; }
};

/// Dense row-major bit matrix used for peripheral reads and writes.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols), bits_(std::size_t{rows} * cols, 0) {}

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  bool get(std::uint32_t r, std::uint32_t c) const { return bits_[std::size_t{r} * cols_ + c] != 0; }
  void set(std::uint32_t r, std::uint32_t c, bool v) { bits_[std::size_t{r} * cols_ + c] = v ? 1 : 0; }
  bool all_zero() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Writes one JSON object per executed cycle (JSON Lines).
class TraceSink {
 public:
  explicit TraceSink(std::ostream& out) : out_(out) {}
  void record(std::uint64_t cycle, const CycleBundle& bundle, const PartitionMap& map);
  std::uint64_t lines_written() const { return lines_; }

 private:
  std::ostream& out_;
  std::uint64_t lines_ = 0;
};

/// One partitioned memristive crossbar executing stateful logic cycle by cycle.
/// Single-threaded; separate instances share nothing.
class Crossbar {
 public:
  explicit Crossbar(const CrossbarConfig& config);

  const CrossbarConfig& config() const { return config_; }
  const PartitionMap& partitions() const { return map_; }
  const CellGrid& grid() const { return grid_; }
  const ExecutionStats& stats() const { return stats_; }
  double energy_fj() const { return stats_.energy_fj(config_.gate_energy_fj); }

  /// Runs one cycle. Throws AddressError for out-of-range operands,
  /// SchedulingError for an illegal bundle and StrictnessError for a read of an
  /// uninitialized cell (when strict_init is on). The grid is untouched on error.
  void execute(const CycleBundle& bundle);

  /// Runs a bundle sequence; bundles already validated against this geometry
  /// skip the legality check.
  void run(const Program& program);

  /// Peripheral access, charged to the io label: io_cycles_per_row per region
  /// row and no gate executions.
  BitMatrix read_region(Range rows, Range cols);
  void write_region(Range rows, Range cols, const BitMatrix& bits);

  void set_trace(TraceSink* sink) { trace_ = sink; }

  void reset_stats() { stats_ = {}; }
  /// Clears every cell, every initialization flag and the counters.
  void reset();

 private:
  void check_addresses(const CycleBundle& bundle) const;
  void check_strict(const CycleBundle& bundle);
  void apply(const CycleBundle& bundle);
  void check_region(Range rows, Range cols) const;

  CrossbarConfig config_;
  PartitionMap map_;
  CellGrid grid_;
  ExecutionStats stats_;
  TraceSink* trace_ = nullptr;
};

}  // namespace hashpim
