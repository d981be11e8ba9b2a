#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hashpim/bundle.hpp"
#include "hashpim/line_set.hpp"
#include "hashpim/partition.hpp"
#include "hashpim/types.hpp"

namespace hashpim {

enum class MacroKind : std::uint8_t { Xor2, Mux, Copy, Not, Nor2, Nor3, Or2, And2, Init0, Init1 };

std::string_view macro_name(MacroKind k);
std::size_t macro_arity(MacroKind k);
/// Temporaries the fixed decomposition needs on every line.
std::size_t macro_scratch(MacroKind k);

/// A macro-operation applied to a set of parallel lines. Positions are absolute
/// indices along the line (columns for in-row, rows for in-column).
///
/// Mux inputs are (select, a, b) and produce a when select is 1. Xor2, Mux and
/// Copy may write over one of their own inputs since their last gate only reads
/// temporaries.
struct MacroOp {
  MacroKind kind = MacroKind::Not;
  Orientation orientation = Orientation::InRow;
  std::array<std::uint32_t, 3> inputs{};
  std::uint32_t output = 0;
  LineSet lines;
  Step label = Step::Other;
  /// Scratch-pool offsets are relative to this position (a unit's origin).
  std::uint32_t scratch_origin = 0;

  static MacroOp row(MacroKind k, std::initializer_list<std::uint32_t> in_cols,
                     std::uint32_t out_col, LineSet rows, Step label,
                     std::uint32_t scratch_origin = 0);
  static MacroOp column(MacroKind k, std::initializer_list<std::uint32_t> in_rows,
                        std::uint32_t out_row, LineSet cols, Step label,
                        std::uint32_t scratch_origin = 0);
  /// Infers the orientation from the cells; ShapeError if they share neither a
  /// row nor a column.
  static MacroOp from_cells(MacroKind k, std::initializer_list<Cell> inputs, Cell output,
                            Step label, std::uint32_t scratch_origin = 0);
};

/// Macro-ops separated into barrier groups. Macros inside one group must be
/// independent of each other; groups execute strictly in order.
class OpStream {
 public:
  struct Group {
    std::vector<std::uint32_t> scratch_pool;
    std::vector<MacroOp> ops;
  };

  /// Opens a new group whose macros draw temporaries from `scratch_pool`
  /// (offsets relative to each macro's scratch_origin).
  OpStream& barrier(std::vector<std::uint32_t> scratch_pool = {});
  /// Adds to the current group (opening one if the stream is empty).
  OpStream& add(MacroOp op);
  OpStream& append(const OpStream& other);

  const std::vector<Group>& groups() const { return groups_; }
  std::size_t macro_count() const;
  bool empty() const { return groups_.empty(); }

 private:
  std::vector<Group> groups_;
};

/// The canonical primitive sequence for one macro, given absolute scratch
/// positions (at least macro_scratch(kind) of them).
std::vector<GateOp> expand(const MacroOp& macro, std::span<const std::uint32_t> scratch);

/// Expands every macro with scratch from a per-line bump allocator reset at
/// each barrier. Returns one entry per group, each a list of per-macro step lists.
std::vector<std::vector<std::vector<GateOp>>> expand_stream(const OpStream& stream);

/// Packs the stream into legal bundles with a greedy first-fit pass. Every
/// emitted bundle passes check_bundle; the result is stamped as validated for
/// `map`. Bundle order preserves the stream's semantics.
Program schedule(const OpStream& stream, const PartitionMap& map);

/// One primitive per cycle, in stream order: the reference against which
/// schedule() is compared.
Program serialize(const OpStream& stream, const PartitionMap& map);

std::array<std::size_t, kStepCount> bundles_per_label(const Program& program);

}  // namespace hashpim
