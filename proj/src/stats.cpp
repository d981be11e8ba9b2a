#include "hashpim/stats.hpp"

#include <algorithm>

namespace hashpim {

StepStats ExecutionStats::round_steps() const {
  StepStats s;
  for (Step step : kRoundSteps) {
    s.cycles += label(step).cycles;
    s.gate_executions += label(step).gate_executions;
  }
  return s;
}

ExecutionStats& ExecutionStats::operator+=(const ExecutionStats& o) {
  cycles += o.cycles;
  gate_executions += o.gate_executions;
  for (std::size_t i = 0; i < kStepCount; ++i) {
    per_label[i].cycles += o.per_label[i].cycles;
    per_label[i].gate_executions += o.per_label[i].gate_executions;
  }
  return *this;
}

ExecutionStats ExecutionStats::operator-(const ExecutionStats& o) const {
  ExecutionStats r = *this;
  r.cycles -= o.cycles;
  r.gate_executions -= o.gate_executions;
  for (std::size_t i = 0; i < kStepCount; ++i) {
    r.per_label[i].cycles -= o.per_label[i].cycles;
    r.per_label[i].gate_executions -= o.per_label[i].gate_executions;
  }
  return r;
}

ExecutionStats ExecutionStats::merge_parallel(const ExecutionStats& a, const ExecutionStats& b) {
  ExecutionStats r;
  r.cycles = std::max(a.cycles, b.cycles);
  r.gate_executions = a.gate_executions + b.gate_executions;
  for (std::size_t i = 0; i < kStepCount; ++i) {
    r.per_label[i].cycles = std::max(a.per_label[i].cycles, b.per_label[i].cycles);
    r.per_label[i].gate_executions = a.per_label[i].gate_executions + b.per_label[i].gate_executions;
  }
  return r;
}

}  // namespace hashpim
