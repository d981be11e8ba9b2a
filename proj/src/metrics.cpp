#include "hashpim/metrics.hpp"

#include <cmath>
#include <string>

#include "hashpim/errors.hpp"

namespace hashpim::metrics {

MetricsInput MetricsInput::published_constants(std::uint32_t crossbars) {
  MetricsInput in;
  in.crossbars = crossbars;
  return in;
}

MetricsInput MetricsInput::measured(const CrossbarConfig& config, double latency_round,
                                    double energy_unit_j, std::uint32_t units_per_crossbar,
                                    std::uint32_t crossbars) {
  MetricsInput in;
  in.f_hz = 1.0 / (config.gate_delay_ns * 1e-9);
  in.latency_round = latency_round;
  in.energy_unit = energy_unit_j;
  in.units_per_crossbar = units_per_crossbar;
  in.crossbars = crossbars;
  in.cell_area_f2 = config.cell_area_f2;
  in.crossbar_cells = static_cast<double>(config.rows) * config.cols;
  return in;
}

void MetricsInput::validate() const {
  const std::pair<const char*, double> fields[] = {
      {"f", f_hz},
      {"r", r_bits},
      {"latency_round", latency_round},
      {"energy_unit", energy_unit},
      {"units_per_crossbar", units_per_crossbar},
      {"crossbars", crossbars},
      {"cell_area", cell_area_f2},
      {"crossbar_cells", crossbar_cells},
  };
  for (const auto& [name, v] : fields) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw InputError(std::string("metrics input: ") + name + " must be positive and finite");
    }
  }
}

MetricsReport compute(const MetricsInput& in) {
  in.validate();
  MetricsReport out;
  out.tput_unit = in.r_bits / in.latency_round * in.f_hz;
  out.tput_system = out.tput_unit * in.units_per_crossbar * in.crossbars;
  out.power_system = out.tput_system * in.energy_unit / in.r_bits;
  out.tput_per_watt = out.tput_system / out.power_system;
  out.tput_per_area = out.tput_system / (in.crossbars * in.crossbar_cells * in.cell_area_f2);
  return out;
}

}  // namespace hashpim::metrics
