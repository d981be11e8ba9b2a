#pragma once

#include <array>
#include <cstdint>

#include "hashpim/types.hpp"

namespace hashpim {

struct StepStats {
  std::uint64_t cycles = 0;
  std::uint64_t gate_executions = 0;
  friend bool operator==(const StepStats&, const StepStats&) = default;
};

/// Latency/energy counters of one crossbar. Energy is derived, never
/// accumulated, so it is exactly gate_executions x gate_energy.
struct ExecutionStats {
  std::uint64_t cycles = 0;
  std::uint64_t gate_executions = 0;
  std::array<StepStats, kStepCount> per_label{};

  const StepStats& label(Step s) const { return per_label[static_cast<std::size_t>(s)]; }
  StepStats& label(Step s) { return per_label[static_cast<std::size_t>(s)]; }

  double energy_fj(double gate_energy_fj) const {
    return static_cast<double>(gate_executions) * gate_energy_fj;
  }

  /// Sum over the five Keccak-f round steps.
  StepStats round_steps() const;

  ExecutionStats& operator+=(const ExecutionStats& o);
  ExecutionStats operator-(const ExecutionStats& o) const;

  /// Crossbars running side by side: cycles take the maximum, work adds up.
  static ExecutionStats merge_parallel(const ExecutionStats& a, const ExecutionStats& b);

  friend bool operator==(const ExecutionStats&, const ExecutionStats&) = default;
};

}  // namespace hashpim
