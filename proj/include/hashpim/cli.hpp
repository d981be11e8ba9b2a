#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hashpim/partition.hpp"

namespace hashpim::cli {

/// Exit statuses; every failure class has its own.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kUnreadableFile = 3,
  kCapacity = 4,
  kMalformedHex = 5,
  kInvariant = 6,
  kBadConfig = 7,
};

inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  std::vector<std::string> texts;
  std::vector<std::string> hexes;
  std::vector<std::string> files;
  std::uint32_t random_count = 0;
  std::size_t random_len = 0;
  std::uint64_t seed = 1;
  bool suite = false;

  CrossbarConfig crossbar;
  std::uint32_t crossbars = 1;

  std::string trace_path;
  std::string report_path;  // "-" writes the report to stdout
  bool metrics = false;
  bool published_constants = false;
  bool dump_layout = false;

  bool has_messages() const {
    return !texts.empty() || !hexes.empty() || !files.empty() || random_count > 0 || suite;
  }
};

/// Runs one configuration. Digests go to `out` one per line, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Lowercase or uppercase hex, optional 0x prefix, no separators.
std::optional<std::vector<std::uint8_t>> parse_hex(std::string_view text);

}  // namespace hashpim::cli
