#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hashpim/partition.hpp"

namespace hashpim::metrics {

/// Inputs of the throughput and power model. Energies in joules, frequency in Hz.
struct MetricsInput {
  double f_hz = 1.0 / 3e-9;
  double r_bits = 1088;
  double latency_round = 3494;  // cycles
  double energy_unit = 0.765e-9;  // joules per round per unit
  double units_per_crossbar = 378;
  double crossbars = 1;
  double cell_area_f2 = 4;
  double crossbar_cells = 1024.0 * 1024.0;

  /// The published operating point: 3,494 cycles and 0.765 nJ per round,
  /// 3 ns gates, 378 units in a 1024 x 1024 crossbar.
  static MetricsInput published_constants(std::uint32_t crossbars = 1);

  /// A measured operating point on the given geometry (f from the gate delay).
  static MetricsInput measured(const CrossbarConfig& config, double latency_round,
                               double energy_unit_j, std::uint32_t units_per_crossbar,
                               std::uint32_t crossbars);

  /// Throws InputError on a non-positive field (each is a denominator somewhere).
  void validate() const;
};

struct MetricsReport {
  double tput_unit = 0;      // bps
  double tput_system = 0;    // bps
  double power_system = 0;   // W
  double tput_per_watt = 0;  // bps/W
  double tput_per_area = 0;  // bps/F^2
};

MetricsReport compute(const MetricsInput& in);

/// Other designs from the published comparison, shown next to ours; never recomputed.
struct ReferenceDesign {
  std::string_view name;
  double f_mhz;
  double tput_gbps;
  std::optional<double> tput_per_watt_gbps;
  double tput_per_area;  // bps/F^2
};

inline constexpr std::array<ReferenceDesign, 3> kReferenceDesigns{{
    {"65nm ASIC", 1000, 48, std::nullopt, 7619},
    {"SHINE-1", 2000, 33.4, 263, 21916},
    {"SHINE-2", 2000, 54, 311, 22227},
}};

}  // namespace hashpim::metrics
