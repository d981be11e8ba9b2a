#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "hashpim/crossbar.hpp"
#include "hashpim/keccak/layout.hpp"
#include "hashpim/keccak/microcode.hpp"
#include "hashpim/keccak/params.hpp"

namespace hashpim::keccak {

using Message = std::vector<std::uint8_t>;

/// One crossbar running SHA3-256 on up to unit_count() messages at once.
class Engine {
 public:
  explicit Engine(const CrossbarConfig& config, const KeccakParams& params = {});

  const CrossbarPlan& plan() const { return plan_; }
  Crossbar& crossbar() { return xb_; }
  const Crossbar& crossbar() const { return xb_; }
  const KeccakParams& params() const { return params_; }

  /// Hashes messages[i] in unit i, all units in lockstep. Units whose message
  /// has fewer blocks drop out of the active set once done. Throws
  /// CapacityError if there are more messages than units.
  std::vector<Digest> hash(std::span<const Message> messages);

  /// Rounds executed so far, and the same weighted by the number of units active.
  std::uint64_t rounds() const { return rounds_; }
  std::uint64_t unit_rounds() const { return unit_rounds_; }

  // Lower-level access, used by the step tests.
  void write_state(std::uint32_t unit, const LaneArray& lanes);
  LaneArray read_state(std::uint32_t unit);
  /// Replaces the rotation offsets seen by one unit column (indexed x + 5y).
  void write_rotation_offsets(std::uint32_t unit_col, const std::array<std::uint8_t, 25>& offsets);
  /// Restores the standard offsets and round constants.
  void load_constants();
  void run(const OpStream& stream);
  /// Keccak-f on the given units, with cached programs.
  void permute(const UnitSet& units);
  /// Scheduled programs cached so far (one set per distinct active-unit set).
  std::size_t cached_program_sets() const { return cache_.size(); }

 private:
  struct Programs {
    Program round_body;  // theta, rho, pi, chi
    std::array<Program, CrossbarPlan::kRounds> iota;
    std::vector<Program> absorb;  // one per staging batch
  };
  const Programs& programs(const UnitSet& units);
  void absorb(const UnitSet& units, const std::vector<LaneArray>& blocks, bool first);

  KeccakParams params_;
  CrossbarPlan plan_;
  Crossbar xb_;
  std::map<std::vector<std::uint32_t>, std::unique_ptr<Programs>> cache_;
  std::uint64_t rounds_ = 0;
  std::uint64_t unit_rounds_ = 0;
};

struct HashRun {
  std::vector<Digest> digests;
  /// Per crossbar, then merged (crossbars side by side: cycles take the maximum).
  std::vector<ExecutionStats> crossbar_stats;
  ExecutionStats stats;
  std::uint64_t rounds = 0;       // longest chain of rounds on any crossbar
  std::uint64_t unit_rounds = 0;  // rounds x active units, summed
  std::uint32_t crossbars_used = 0;
  std::uint32_t units_per_crossbar = 0;
};

/// Spreads messages over `crossbars` crossbars, unit_count() per crossbar, and
/// simulates them on worker threads. Throws CapacityError when they do not fit.
/// traces[x], when present and non-null, records crossbar x.
HashRun hash_messages(std::span<const Message> messages, const CrossbarConfig& config,
                      std::uint32_t crossbars = 1, const KeccakParams& params = {},
                      std::span<TraceSink* const> traces = {});

}  // namespace hashpim::keccak
