#include <ostream>

#include "json.hpp"

#include "hashpim/crossbar.hpp"

namespace hashpim {

namespace {

// Collapses a line set into inclusive [first, last] runs.
nlohmann::json runs(const LineSet& lines) {
  nlohmann::json out = nlohmann::json::array();
  std::int64_t start = -1;
  std::int64_t prev = -2;
  lines.for_each([&](std::uint32_t l) {
    if (static_cast<std::int64_t>(l) != prev + 1) {
      if (start >= 0) out.push_back({start, prev});
      start = l;
    }
    prev = l;
  });
  if (start >= 0) out.push_back({start, prev});
  return out;
}

}  // namespace

void TraceSink::record(std::uint64_t cycle, const CycleBundle& bundle, const PartitionMap& map) {
  nlohmann::json ops = nlohmann::json::array();
  for (const GateOp& op : bundle.ops) {
    const bool in_row = op.orientation == Orientation::InRow;
    const std::uint32_t along_group = in_row ? map.col_group(op.output) : map.row_group(op.output);
    const std::uint32_t groups = in_row ? map.row_groups() : map.col_groups();
    nlohmann::json inputs = nlohmann::json::array();
    for (std::size_t k = 0; k < op.arity(); ++k) inputs.push_back(op.inputs[k]);
    for (std::uint32_t p = 0; p < groups; ++p) {
      const std::uint32_t b = in_row ? map.row_group_begin(p) : map.col_group_begin(p);
      const std::uint32_t e = in_row ? map.row_group_end(p) : map.col_group_end(p);
      if (!op.lines.any_in(b, e)) continue;
      nlohmann::json partition = in_row ? nlohmann::json{p, along_group}
                                        : nlohmann::json{along_group, p};
      ops.push_back({{"partition", partition},
                     {"gate", gate_name(op.gate)},
                     {"orientation", orientation_name(op.orientation)},
                     {"inputs", inputs},
                     {"output", op.output},
                     {"lines", runs(op.lines.restrict(b, e))}});
    }
  }
  nlohmann::json closed = nlohmann::json::array();
  for (const auto& s : bundle.closed_switches) {
    closed.push_back({{"axis", s.axis == SwitchAxis::Row ? "row" : "col"}, {"index", s.index}});
  }
  nlohmann::json line = {{"cycle", cycle},
                         {"label", step_name(bundle.label)},
                         {"closed_switches", closed},
                         {"ops", ops}};
  out_ << line.dump() << '\n';
  ++lines_;
}

}  // namespace hashpim
