#include "hashpim/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hashpim/errors.hpp"

namespace hashpim {

bool GateOp::same_pattern(const GateOp& o) const {
  if (gate != o.gate || orientation != o.orientation || output != o.output) return false;
  for (std::size_t k = 0; k < arity(); ++k) {
    if (inputs[k] != o.inputs[k]) return false;
  }
  return true;
}

namespace {

GateOp make(Gate g, Orientation o, std::initializer_list<std::uint32_t> in, std::uint32_t out,
            LineSet lines) {
  GateOp op;
  op.gate = g;
  op.orientation = o;
  if (in.size() != gate_arity(g)) {
    throw ShapeError(std::string(gate_name(g)) + " takes " + std::to_string(gate_arity(g)) +
                     " inputs, got " + std::to_string(in.size()));
  }
  std::copy(in.begin(), in.end(), op.inputs.begin());
  op.output = out;
  op.lines = std::move(lines);
  return op;
}

}  // namespace

GateOp GateOp::row(Gate g, std::initializer_list<std::uint32_t> in_cols, std::uint32_t out_col,
                   LineSet rows) {
  return make(g, Orientation::InRow, in_cols, out_col, std::move(rows));
}

GateOp GateOp::column(Gate g, std::initializer_list<std::uint32_t> in_rows, std::uint32_t out_row,
                      LineSet cols) {
  return make(g, Orientation::InColumn, in_rows, out_row, std::move(cols));
}

GateOp GateOp::from_micro(const MicroOp& m) {
  if (m.inputs.size() != gate_arity(m.gate)) {
    throw ShapeError(std::string(gate_name(m.gate)) + ": wrong number of inputs");
  }
  GateOp op;
  op.gate = m.gate;
  op.orientation = m.orientation;
  const bool in_row = m.orientation == Orientation::InRow;
  const std::uint32_t line = in_row ? m.output.row : m.output.col;
  for (std::size_t k = 0; k < m.inputs.size(); ++k) {
    const Cell c = m.inputs[k];
    if ((in_row ? c.row : c.col) != line) {
      throw ShapeError("micro-op operands are not on one " +
                       std::string(orientation_name(m.orientation)));
    }
    op.inputs[k] = in_row ? c.col : c.row;
  }
  op.output = in_row ? m.output.col : m.output.row;
  op.lines = LineSet::single(line);
  return op;
}

std::vector<MicroOp> GateOp::to_micro() const {
  std::vector<MicroOp> out;
  out.reserve(lines.count());
  const bool in_row = orientation == Orientation::InRow;
  lines.for_each([&](std::uint32_t line) {
    MicroOp m;
    m.gate = gate;
    m.orientation = orientation;
    for (std::size_t k = 0; k < arity(); ++k) {
      m.inputs.push_back(in_row ? Cell{line, inputs[k]} : Cell{inputs[k], line});
    }
    m.output = in_row ? Cell{line, output} : Cell{output, line};
    out.push_back(std::move(m));
  });
  return out;
}

std::size_t CycleBundle::executions() const {
  std::size_t n = 0;
  for (const auto& op : ops) n += op.executions();
  return n;
}

void Program::append(const Program& other) {
  if (bundles.empty()) {
    validated_for = other.validated_for;
  } else if (validated_for != other.validated_for) {
    validated_for = 0;
  }
  bundles.insert(bundles.end(), other.bundles.begin(), other.bundles.end());
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::OutputIsInput: return "output-is-input";
    case ViolationKind::OutOfBounds: return "out-of-bounds";
    case ViolationKind::EmptyLines: return "empty-lines";
    case ViolationKind::OpenSwitch: return "open-switch";
    case ViolationKind::PatternMismatch: return "pattern-mismatch";
    case ViolationKind::WriteConflict: return "write-conflict";
  }
  return "?";
}

std::string BundleVerdict::describe() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << violation_name(v.kind) << ": op " << v.op_a;
    if (v.op_b) os << " vs op " << *v.op_b;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

struct Span {
  std::uint32_t first_group;
  std::uint32_t last_group;
};

Span along_span(const PartitionMap& map, const GateOp& op) {
  const bool in_row = op.orientation == Orientation::InRow;
  auto group = [&](std::uint32_t pos) { return in_row ? map.col_group(pos) : map.row_group(pos); };
  std::uint32_t lo = group(op.output);
  std::uint32_t hi = lo;
  for (std::size_t k = 0; k < op.arity(); ++k) {
    const std::uint32_t g = group(op.inputs[k]);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  return {lo, hi};
}

class RegionMap {
 public:
  RegionMap(const PartitionMap& map, const std::vector<SwitchId>& closed) {
    if (closed.empty()) return;
    parent_.resize(map.block_count());
    std::iota(parent_.begin(), parent_.end(), 0U);
    for (const auto& s : closed) {
      if (s.axis == SwitchAxis::Row) {
        if (s.index + 1 >= map.row_groups()) continue;
        for (std::uint32_t cg = 0; cg < map.col_groups(); ++cg)
          unite(map.block(s.index, cg), map.block(s.index + 1, cg));
      } else {
        if (s.index + 1 >= map.col_groups()) continue;
        for (std::uint32_t rg = 0; rg < map.row_groups(); ++rg)
          unite(map.block(rg, s.index), map.block(rg, s.index + 1));
      }
    }
  }

  std::uint32_t region(std::uint32_t block) {
    if (parent_.empty()) return block;
    while (parent_[block] != block) {
      parent_[block] = parent_[parent_[block]];
      block = parent_[block];
    }
    return block;
  }

 private:
  void unite(std::uint32_t a, std::uint32_t b) {
    a = region(a);
    b = region(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::uint32_t> parent_;
};

bool is_closed(const std::vector<SwitchId>& closed, SwitchId s) {
  return std::find(closed.begin(), closed.end(), s) != closed.end();
}

}  // namespace

std::vector<SwitchId> required_switches(const PartitionMap& map, const GateOp& op) {
  const Span span = along_span(map, op);
  const SwitchAxis axis = op.orientation == Orientation::InRow ? SwitchAxis::Col : SwitchAxis::Row;
  std::vector<SwitchId> out;
  for (std::uint32_t b = span.first_group; b < span.last_group; ++b) out.push_back({axis, b});
  return out;
}

BundleVerdict check_bundle(const PartitionMap& map, const CycleBundle& bundle) {
  BundleVerdict verdict;
  auto flag = [&](ViolationKind k, std::size_t a, std::optional<std::size_t> b, std::string d) {
    verdict.violations.push_back({k, a, b, std::move(d)});
  };

  std::vector<bool> placeable(bundle.ops.size(), false);
  std::vector<Span> spans(bundle.ops.size());
  for (std::size_t i = 0; i < bundle.ops.size(); ++i) {
    const GateOp& op = bundle.ops[i];
    const bool in_row = op.orientation == Orientation::InRow;
    const std::uint32_t along = in_row ? map.cols() : map.rows();
    const std::uint32_t across = in_row ? map.rows() : map.cols();
    bool ok = true;
    if (op.lines.empty()) {
      flag(ViolationKind::EmptyLines, i, std::nullopt, "");
      ok = false;
    } else if (op.lines.max_line() >= across) {
      flag(ViolationKind::OutOfBounds, i, std::nullopt,
           "line " + std::to_string(op.lines.max_line()));
      ok = false;
    }
    if (op.output >= along) {
      flag(ViolationKind::OutOfBounds, i, std::nullopt, "output " + std::to_string(op.output));
      ok = false;
    }
    for (std::size_t k = 0; k < op.arity(); ++k) {
      if (op.inputs[k] >= along) {
        flag(ViolationKind::OutOfBounds, i, std::nullopt,
             "input " + std::to_string(op.inputs[k]));
        ok = false;
      } else if (op.inputs[k] == op.output) {
        flag(ViolationKind::OutputIsInput, i, std::nullopt, "position " + std::to_string(op.output));
        ok = false;
      }
    }
    if (!ok) continue;
    spans[i] = along_span(map, op);
    for (const auto& s : required_switches(map, op)) {
      if (!is_closed(bundle.closed_switches, s)) {
        flag(ViolationKind::OpenSwitch, i, std::nullopt,
             std::string(s.axis == SwitchAxis::Row ? "row" : "column") + " boundary " +
                 std::to_string(s.index));
        ok = false;
      }
    }
    placeable[i] = ok;
  }

  RegionMap regions(map, bundle.closed_switches);
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < bundle.ops.size(); ++i) {
    if (!placeable[i]) continue;
    const GateOp& op = bundle.ops[i];
    const bool in_row = op.orientation == Orientation::InRow;
    const std::uint32_t g_lo = in_row ? map.row_group(op.lines.min_line())
                                      : map.col_group(op.lines.min_line());
    const std::uint32_t g_hi = in_row ? map.row_group(op.lines.max_line())
                                      : map.col_group(op.lines.max_line());
    for (std::uint32_t p = g_lo; p <= g_hi; ++p) {
      const std::uint32_t begin = in_row ? map.row_group_begin(p) : map.col_group_begin(p);
      const std::uint32_t end = in_row ? map.row_group_end(p) : map.col_group_end(p);
      if (!op.lines.any_in(begin, end)) continue;
      const std::uint32_t blk = in_row ? map.block(p, spans[i].first_group)
                                       : map.block(spans[i].first_group, p);
      auto& list = members[regions.region(blk)];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> reported;
  for (auto& [region, list] : members) {
    (void)region;
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        const std::size_t i = list[a];
        const std::size_t j = list[b];
        if (!reported.insert({i, j}).second) continue;
        const GateOp& x = bundle.ops[i];
        const GateOp& y = bundle.ops[j];
        if (!x.same_pattern(y)) {
          flag(ViolationKind::PatternMismatch, i, j,
               std::string(gate_name(x.gate)) + " vs " + std::string(gate_name(y.gate)));
        } else if (x.lines.intersects(y.lines)) {
          flag(ViolationKind::WriteConflict, i, j, "overlapping lines");
        }
      }
    }
  }
  return verdict;
}

}  // namespace hashpim
