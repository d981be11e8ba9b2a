#include "hashpim/crossbar.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "hashpim/errors.hpp"
#include "hashpim/kernels.hpp"

namespace hashpim {

bool BitMatrix::all_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

Crossbar::Crossbar(const CrossbarConfig& config)
    : config_(config), map_(PartitionMap::from_config(config)), grid_(config.rows, config.cols) {}

void Crossbar::reset() {
  grid_.reset();
  stats_ = {};
}

void Crossbar::check_addresses(const CycleBundle& bundle) const {
  for (std::size_t i = 0; i < bundle.ops.size(); ++i) {
    const GateOp& op = bundle.ops[i];
    const bool in_row = op.orientation == Orientation::InRow;
    const std::uint32_t along = in_row ? config_.cols : config_.rows;
    const std::uint32_t across = in_row ? config_.rows : config_.cols;
    bool bad = op.output >= along || (!op.lines.empty() && op.lines.max_line() >= across);
    for (std::size_t k = 0; k < op.arity(); ++k) bad = bad || op.inputs[k] >= along;
    if (bad) throw AddressError("op " + std::to_string(i) + " addresses a cell outside the crossbar");
  }
}

void Crossbar::check_strict(const CycleBundle& bundle) {
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < bundle.ops.size(); ++i) {
    const GateOp& op = bundle.ops[i];
    if (op.arity() == 0) continue;
    const std::uint32_t fw = op.lines.first_word();
    const std::uint32_t n = op.lines.word_count();
    const std::uint64_t* init[3] = {nullptr, nullptr, nullptr};
    if (op.orientation == Orientation::InRow) {
      grid_.sync_col_major();
      for (std::size_t a = 0; a < op.arity(); ++a) init[a] = grid_.col_init(op.inputs[a]) + fw;
    } else {
      grid_.sync_row_major();
      for (std::size_t a = 0; a < op.arity(); ++a) init[a] = grid_.row_init(op.inputs[a]) + fw;
    }
    if (k.any_uninitialized(op.lines.words(), init[0], init[1], init[2], n)) {
      throw StrictnessError("op " + std::to_string(i) + " (" + std::string(gate_name(op.gate)) +
                            ") reads an uninitialized cell");
    }
  }
}

void Crossbar::apply(const CycleBundle& bundle) {
  const auto& k = kernels::active();
  for (const GateOp& op : bundle.ops) {
    const std::uint32_t fw = op.lines.first_word();
    const std::uint32_t n = op.lines.word_count();
    const std::uint64_t* mask = op.lines.words();
    const std::uint64_t* in[3] = {nullptr, nullptr, nullptr};
    if (op.orientation == Orientation::InRow) {
      grid_.sync_col_major();
      for (std::size_t a = 0; a < op.arity(); ++a) in[a] = grid_.col_values(op.inputs[a]) + fw;
      k.apply_gate(op.gate, grid_.col_values(op.output) + fw, in[0], in[1], in[2], mask, n);
      k.or_mask(grid_.col_init(op.output) + fw, mask, n);
      grid_.mark_col_written(op.output, fw, n, mask);
    } else {
      grid_.sync_row_major();
      for (std::size_t a = 0; a < op.arity(); ++a) in[a] = grid_.row_values(op.inputs[a]) + fw;
      k.apply_gate(op.gate, grid_.row_values(op.output) + fw, in[0], in[1], in[2], mask, n);
      k.or_mask(grid_.row_init(op.output) + fw, mask, n);
      grid_.mark_row_written(op.output, fw, n, mask);
    }
  }
  const std::uint64_t execs = bundle.executions();
  stats_.cycles += 1;
  stats_.gate_executions += execs;
  StepStats& s = stats_.label(bundle.label);
  s.cycles += 1;
  s.gate_executions += execs;
}

void Crossbar::execute(const CycleBundle& bundle) {
  check_addresses(bundle);
  const BundleVerdict verdict = check_bundle(map_, bundle);
  if (!verdict.legal()) throw SchedulingError("illegal bundle: " + verdict.describe());
  if (config_.strict_init) check_strict(bundle);
  if (trace_) trace_->record(stats_.cycles, bundle, map_);
  apply(bundle);
}

void Crossbar::run(const Program& program) {
  if (program.validated_for != map_.fingerprint()) {
    for (const auto& b : program.bundles) execute(b);
    return;
  }
  for (const auto& b : program.bundles) {
    if (config_.strict_init) check_strict(b);
    if (trace_) trace_->record(stats_.cycles, b, map_);
    apply(b);
  }
}

void Crossbar::check_region(Range rows, Range cols) const {
  if (rows.begin > rows.end || cols.begin > cols.end || rows.end > config_.rows ||
      cols.end > config_.cols) {
    throw AddressError("region [" + std::to_string(rows.begin) + "," + std::to_string(rows.end) +
                       ") x [" + std::to_string(cols.begin) + "," + std::to_string(cols.end) +
                       ") is outside the crossbar");
  }
}

BitMatrix Crossbar::read_region(Range rows, Range cols) {
  check_region(rows, cols);
  BitMatrix out(rows.size(), cols.size());
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (std::uint32_t c = 0; c < cols.size(); ++c) {
      if (config_.strict_init && !grid_.initialized(rows.begin + r, cols.begin + c)) {
        throw StrictnessError("read of uninitialized cell (" + std::to_string(rows.begin + r) +
                              "," + std::to_string(cols.begin + c) + ")");
      }
      out.set(r, c, grid_.get(rows.begin + r, cols.begin + c));
    }
  }
  const std::uint64_t cyc = std::uint64_t{rows.size()} * config_.io_cycles_per_row;
  stats_.cycles += cyc;
  stats_.label(Step::Io).cycles += cyc;
  return out;
}

void Crossbar::write_region(Range rows, Range cols, const BitMatrix& bits) {
  check_region(rows, cols);
  if (bits.rows() != rows.size() || bits.cols() != cols.size()) {
    throw AddressError("write_region: bit matrix is " + std::to_string(bits.rows()) + "x" +
                       std::to_string(bits.cols()) + ", region is " + std::to_string(rows.size()) +
                       "x" + std::to_string(cols.size()));
  }
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (std::uint32_t c = 0; c < cols.size(); ++c) {
      grid_.set(rows.begin + r, cols.begin + c, bits.get(r, c));
    }
  }
  const std::uint64_t cyc = std::uint64_t{rows.size()} * config_.io_cycles_per_row;
  stats_.cycles += cyc;
  stats_.label(Step::Io).cycles += cyc;
}

}  // namespace hashpim
