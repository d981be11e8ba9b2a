#include "hashpim/scheduler.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "hashpim/errors.hpp"

namespace hashpim {

std::string_view macro_name(MacroKind k) {
  switch (k) {
    case MacroKind::Xor2: return "XOR2";
    case MacroKind::Mux: return "MUX";
    case MacroKind::Copy: return "COPY";
    case MacroKind::Not: return "NOT";
    case MacroKind::Nor2: return "NOR2";
    case MacroKind::Nor3: return "NOR3";
    case MacroKind::Or2: return "OR2";
    case MacroKind::And2: return "AND2";
    case MacroKind::Init0: return "INIT0";
    case MacroKind::Init1: return "INIT1";
  }
  return "?";
}

std::size_t macro_arity(MacroKind k) {
  switch (k) {
    case MacroKind::Init0:
    case MacroKind::Init1: return 0;
    case MacroKind::Copy:
    case MacroKind::Not: return 1;
    case MacroKind::Xor2:
    case MacroKind::Nor2:
    case MacroKind::Or2:
    case MacroKind::And2: return 2;
    case MacroKind::Mux:
    case MacroKind::Nor3: return 3;
  }
  return 0;
}

std::size_t macro_scratch(MacroKind k) {
  switch (k) {
    case MacroKind::Xor2:
    case MacroKind::Mux: return 2;
    case MacroKind::Copy: return 1;
    default: return 0;
  }
}

namespace {

MacroOp make_macro(MacroKind k, Orientation o, std::initializer_list<std::uint32_t> in,
                   std::uint32_t out, LineSet lines, Step label, std::uint32_t origin) {
  if (in.size() != macro_arity(k)) {
    throw ShapeError(std::string(macro_name(k)) + " takes " + std::to_string(macro_arity(k)) +
                     " inputs, got " + std::to_string(in.size()));
  }
  MacroOp m;
  m.kind = k;
  m.orientation = o;
  std::copy(in.begin(), in.end(), m.inputs.begin());
  m.output = out;
  m.lines = std::move(lines);
  m.label = label;
  m.scratch_origin = origin;
  return m;
}

Gate primitive_of(MacroKind k) {
  switch (k) {
    case MacroKind::Not: return Gate::Not;
    case MacroKind::Nor2: return Gate::Nor2;
    case MacroKind::Nor3: return Gate::Nor3;
    case MacroKind::Or2: return Gate::Or2;
    case MacroKind::And2: return Gate::And2;
    case MacroKind::Init0: return Gate::Init0;
    case MacroKind::Init1: return Gate::Init1;
    default: break;
  }
  throw ShapeError(std::string(macro_name(k)) + " is not a primitive");
}

}  // namespace

MacroOp MacroOp::row(MacroKind k, std::initializer_list<std::uint32_t> in_cols,
                     std::uint32_t out_col, LineSet rows, Step label,
                     std::uint32_t scratch_origin) {
  return make_macro(k, Orientation::InRow, in_cols, out_col, std::move(rows), label, scratch_origin);
}

MacroOp MacroOp::column(MacroKind k, std::initializer_list<std::uint32_t> in_rows,
                        std::uint32_t out_row, LineSet cols, Step label,
                        std::uint32_t scratch_origin) {
  return make_macro(k, Orientation::InColumn, in_rows, out_row, std::move(cols), label,
                    scratch_origin);
}

MacroOp MacroOp::from_cells(MacroKind k, std::initializer_list<Cell> inputs, Cell output,
                            Step label, std::uint32_t scratch_origin) {
  const bool same_row = std::all_of(inputs.begin(), inputs.end(),
                                    [&](const Cell& c) { return c.row == output.row; });
  const bool same_col = std::all_of(inputs.begin(), inputs.end(),
                                    [&](const Cell& c) { return c.col == output.col; });
  // With a single operand on the same row *and* column the op is degenerate;
  // prefer the row form.
  if (same_row || same_col) {
    if (inputs.size() != macro_arity(k)) {
      throw ShapeError(std::string(macro_name(k)) + " takes " + std::to_string(macro_arity(k)) +
                       " inputs, got " + std::to_string(inputs.size()));
    }
    MacroOp m;
    m.kind = k;
    m.orientation = same_row ? Orientation::InRow : Orientation::InColumn;
    std::size_t i = 0;
    for (const auto& c : inputs) m.inputs[i++] = same_row ? c.col : c.row;
    m.output = same_row ? output.col : output.row;
    m.lines = LineSet::single(same_row ? output.row : output.col);
    m.label = label;
    m.scratch_origin = scratch_origin;
    return m;
  }
  throw ShapeError(std::string(macro_name(k)) + " operands share neither a row nor a column");
}

OpStream& OpStream::barrier(std::vector<std::uint32_t> scratch_pool) {
  groups_.push_back(Group{std::move(scratch_pool), {}});
  return *this;
}

OpStream& OpStream::add(MacroOp op) {
  if (groups_.empty()) groups_.emplace_back();
  groups_.back().ops.push_back(std::move(op));
  return *this;
}

OpStream& OpStream::append(const OpStream& other) {
  groups_.insert(groups_.end(), other.groups_.begin(), other.groups_.end());
  return *this;
}

std::size_t OpStream::macro_count() const {
  std::size_t n = 0;
  for (const auto& g : groups_) n += g.ops.size();
  return n;
}

std::vector<GateOp> expand(const MacroOp& m, std::span<const std::uint32_t> scratch) {
  const std::size_t need = macro_scratch(m.kind);
  if (scratch.size() < need) {
    throw AllocationError(std::string(macro_name(m.kind)) + " needs " + std::to_string(need) +
                          " scratch cells per line");
  }
  auto op = [&](Gate g, std::array<std::uint32_t, 3> in, std::uint32_t out) {
    GateOp o;
    o.gate = g;
    o.orientation = m.orientation;
    o.inputs = in;
    o.output = out;
    o.lines = m.lines;
    return o;
  };
  const auto a = m.inputs[0];
  const auto b = m.inputs[1];
  const auto c = m.inputs[2];
  const auto out = m.output;
  switch (m.kind) {
    case MacroKind::Init0:
    case MacroKind::Init1:
      return {op(primitive_of(m.kind), {}, out)};
    case MacroKind::Not:
    case MacroKind::Nor2:
    case MacroKind::Nor3:
    case MacroKind::Or2:
    case MacroKind::And2:
      return {op(Gate::Init1, {}, out), op(primitive_of(m.kind), {a, b, c}, out)};
    case MacroKind::Copy: {
      const auto t = scratch[0];
      return {op(Gate::Init1, {}, t), op(Gate::Not, {a}, t), op(Gate::Init1, {}, out),
              op(Gate::Not, {t}, out)};
    }
    case MacroKind::Xor2: {
      // t1 = a&b, t2 = ~t1, t1 = a|b, out = t1 & t2
      const auto t1 = scratch[0];
      const auto t2 = scratch[1];
      return {op(Gate::Init1, {}, t1), op(Gate::And2, {a, b}, t1),
              op(Gate::Init1, {}, t2), op(Gate::Not, {t1}, t2),
              op(Gate::Init1, {}, t1), op(Gate::Or2, {a, b}, t1),
              op(Gate::Init1, {}, out), op(Gate::And2, {t1, t2}, out)};
    }
    case MacroKind::Mux: {
      // select = a; t1 = ~sel, t2 = y & t1, t1 = x & sel, out = t1 | t2
      const auto sel = a;
      const auto x = b;
      const auto y = c;
      const auto t1 = scratch[0];
      const auto t2 = scratch[1];
      return {op(Gate::Init1, {}, t1), op(Gate::Not, {sel}, t1),
              op(Gate::Init1, {}, t2), op(Gate::And2, {y, t1}, t2),
              op(Gate::Init1, {}, t1), op(Gate::And2, {x, sel}, t1),
              op(Gate::Init1, {}, out), op(Gate::Or2, {t1, t2}, out)};
    }
  }
  return {};
}

namespace {

/// Per-line bump allocator over one group's scratch pool.
class ScratchAllocator {
 public:
  explicit ScratchAllocator(const std::vector<std::uint32_t>& pool) : pool_(pool) {}

  std::vector<std::uint32_t> take(const MacroOp& m) {
    const std::size_t need = macro_scratch(m.kind);
    if (need == 0) return {};
    auto& next = next_[{static_cast<int>(m.orientation), m.scratch_origin}];
    std::size_t base = 0;
    m.lines.for_each([&](std::uint32_t l) {
      auto it = next.find(l);
      if (it != next.end()) base = std::max(base, it->second);
    });
    if (base + need > pool_.size()) {
      throw AllocationError(std::string(macro_name(m.kind)) + ": scratch pool of " +
                            std::to_string(pool_.size()) + " exhausted");
    }
    m.lines.for_each([&](std::uint32_t l) { next[l] = base + need; });
    std::vector<std::uint32_t> cells;
    for (std::size_t i = 0; i < need; ++i) {
      const std::uint32_t pos = m.scratch_origin + pool_[base + i];
      for (std::size_t k = 0; k < macro_arity(m.kind); ++k) {
        if (m.inputs[k] == pos) throw AllocationError("scratch cell overlaps an operand");
      }
      if (m.output == pos) throw AllocationError("scratch cell overlaps the output");
      cells.push_back(pos);
    }
    return cells;
  }

 private:
  const std::vector<std::uint32_t>& pool_;
  std::map<std::pair<int, std::uint32_t>, std::unordered_map<std::uint32_t, std::size_t>> next_;
};

void validate_macro(const MacroOp& m) {
  if (m.lines.empty()) throw ShapeError(std::string(macro_name(m.kind)) + " applied to no line");
  const bool primitive = macro_scratch(m.kind) == 0;
  if (primitive) {
    for (std::size_t k = 0; k < macro_arity(m.kind); ++k) {
      if (m.inputs[k] == m.output) {
        throw ShapeError(std::string(macro_name(m.kind)) + " output equals an input");
      }
    }
  }
}

CycleBundle single_bundle(const PartitionMap& map, GateOp op, Step label) {
  CycleBundle b;
  b.closed_switches = required_switches(map, op);
  b.ops.push_back(std::move(op));
  b.label = label;
  return b;
}

bool try_add(const PartitionMap& map, CycleBundle& bundle, const GateOp& op) {
  const std::size_t switches_before = bundle.closed_switches.size();
  for (const auto& s : required_switches(map, op)) {
    if (std::find(bundle.closed_switches.begin(), bundle.closed_switches.end(), s) ==
        bundle.closed_switches.end()) {
      bundle.closed_switches.push_back(s);
    }
  }
  bundle.ops.push_back(op);
  if (check_bundle(map, bundle).legal()) return true;
  bundle.ops.pop_back();
  bundle.closed_switches.resize(switches_before);
  return false;
}

}  // namespace

std::vector<std::vector<std::vector<GateOp>>> expand_stream(const OpStream& stream) {
  std::vector<std::vector<std::vector<GateOp>>> out;
  out.reserve(stream.groups().size());
  for (const auto& group : stream.groups()) {
    ScratchAllocator alloc(group.scratch_pool);
    auto& g = out.emplace_back();
    for (const auto& m : group.ops) {
      validate_macro(m);
      const auto scratch = alloc.take(m);
      g.push_back(expand(m, scratch));
    }
  }
  return out;
}

Program schedule(const OpStream& stream, const PartitionMap& map) {
  Program prog;
  const auto expanded = expand_stream(stream);
  for (std::size_t gi = 0; gi < expanded.size(); ++gi) {
    const std::size_t group_start = prog.bundles.size();
    const auto& macros = stream.groups()[gi].ops;
    for (std::size_t mi = 0; mi < expanded[gi].size(); ++mi) {
      std::size_t earliest = group_start;
      for (const GateOp& step : expanded[gi][mi]) {
        std::size_t b = earliest;
        for (; b < prog.bundles.size(); ++b) {
          if (try_add(map, prog.bundles[b], step)) break;
        }
        if (b == prog.bundles.size()) {
          CycleBundle fresh = single_bundle(map, step, macros[mi].label);
          const BundleVerdict v = check_bundle(map, fresh);
          if (!v.legal()) {
            throw SchedulingError(std::string(macro_name(macros[mi].kind)) +
                                  " expands to an op that is illegal on its own: " + v.describe());
          }
          prog.bundles.push_back(std::move(fresh));
        }
        earliest = b + 1;
      }
    }
  }
  prog.validated_for = map.fingerprint();
  return prog;
}

Program serialize(const OpStream& stream, const PartitionMap& map) {
  Program prog;
  const auto expanded = expand_stream(stream);
  for (std::size_t gi = 0; gi < expanded.size(); ++gi) {
    const auto& macros = stream.groups()[gi].ops;
    for (std::size_t mi = 0; mi < expanded[gi].size(); ++mi) {
      for (const GateOp& step : expanded[gi][mi]) {
        prog.bundles.push_back(single_bundle(map, step, macros[mi].label));
      }
    }
  }
  return prog;
}

std::array<std::size_t, kStepCount> bundles_per_label(const Program& program) {
  std::array<std::size_t, kStepCount> n{};
  for (const auto& b : program.bundles) ++n[static_cast<std::size_t>(b.label)];
  return n;
}

}  // namespace hashpim
