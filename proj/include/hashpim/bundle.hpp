#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hashpim/line_set.hpp"
#include "hashpim/partition.hpp"
#include "hashpim/types.hpp"

namespace hashpim {

/// One stateful-logic gate on a single line: the elementary event that costs one
/// gate execution.
struct MicroOp {
  Gate gate = Gate::Init1;
  Orientation orientation = Orientation::InRow;
  std::vector<Cell> inputs;
  Cell output;
};

/// One voltage pattern applied to many parallel lines in a cycle. For an in-row
/// op, `inputs`/`output` are column indices and `lines` the rows it is applied
/// on; for an in-column op they are row indices and `lines` are columns. A
/// GateOp stands for |lines| MicroOps.
struct GateOp {
  Gate gate = Gate::Init1;
  Orientation orientation = Orientation::InRow;
  std::array<std::uint32_t, 3> inputs{};
  std::uint32_t output = 0;
  LineSet lines;

  std::size_t arity() const { return gate_arity(gate); }
  std::size_t executions() const { return lines.count(); }

  /// Same gate, orientation and operand positions (lines may differ).
  bool same_pattern(const GateOp& o) const;

  static GateOp row(Gate g, std::initializer_list<std::uint32_t> in_cols, std::uint32_t out_col,
                    LineSet rows);
  static GateOp column(Gate g, std::initializer_list<std::uint32_t> in_rows,
                       std::uint32_t out_row, LineSet cols);

  /// Throws ShapeError if the micro-op's cells do not share its row/column.
  static GateOp from_micro(const MicroOp& op);
  std::vector<MicroOp> to_micro() const;
};

struct CycleBundle {
  std::vector<GateOp> ops;
  /// Switches closed for this cycle; every other switch is open.
  std::vector<SwitchId> closed_switches;
  Step label = Step::Other;

  std::size_t executions() const;
};

enum class ViolationKind : std::uint8_t {
  OutputIsInput,   // output cell also read by the same op
  OutOfBounds,     // position or line outside the grid
  EmptyLines,      // op applied to no line
  OpenSwitch,      // op crosses a boundary whose switch is open
  PatternMismatch, // two ops in one partition with different gate/orientation/positions
  WriteConflict,   // two ops write the same cell
};

std::string_view violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::size_t op_a;
  std::optional<std::size_t> op_b;
  std::string detail;
};

struct BundleVerdict {
  std::vector<Violation> violations;
  bool legal() const { return violations.empty(); }
  std::string describe() const;
};

/// Legality of one cycle: within a partition (or a region merged by closed
/// switches) every op has one gate type, orientation and operand pattern;
/// distinct partitions are unconstrained; no op crosses an open switch; no
/// cell is written twice or written while read.
BundleVerdict check_bundle(const PartitionMap& map, const CycleBundle& bundle);

/// Switches an op needs closed, i.e. the boundaries its operand span crosses.
std::vector<SwitchId> required_switches(const PartitionMap& map, const GateOp& op);

/// A bundle sequence. The scheduler stamps the partition map it validated
/// against so a crossbar with the same geometry can skip re-checking.
struct Program {
  std::vector<CycleBundle> bundles;
  std::uint64_t validated_for = 0;

  std::size_t cycles() const { return bundles.size(); }
  void append(const Program& other);
};

}  // namespace hashpim
