#pragma once

// Microcode generators for the in-memory Keccak-f permutation. Each returns an
// op stream for the units of a UnitSet, executed in lockstep: every active unit
// runs the same sequence and replicas in different partitions share cycles.

#include <cstdint>
#include <vector>

#include "hashpim/keccak/layout.hpp"
#include "hashpim/scheduler.hpp"

namespace hashpim::keccak {

/// Column parity, its one-bit rotation (in-column shift through the C copy) and
/// the fold back into all 25 lanes.
OpStream theta(const UnitSet& units);

/// Rotates the given lanes (column offsets inside each unit) by the offsets
/// held in the shared rotation block: six mux steps, step j shifting by 2^j
/// where bit j of the lane's offset is set. Offset bits are hop-copied from the
/// shared block into each unit's rotation-bit row before every step.
OpStream variable_rotate(const UnitSet& units, const std::vector<std::uint32_t>& lane_cols,
                         Step label = Step::Rho);

/// variable_rotate over all 25 lanes.
OpStream rho(const UnitSet& units);

/// Lane permutation, walked backwards along its 24-lane cycle through the
/// staging column.
OpStream pi(const UnitSet& units);

/// Per plane: complement into C, NOR terms into D, XOR back into the lanes.
OpStream chi(const UnitSet& units);

/// Hop-copies the round constant into each unit's staging column and XORs it
/// into lane (0, 0). Throws InputError for a round outside [0, 24).
OpStream iota(const UnitSet& units, unsigned round);

OpStream keccak_round(const UnitSet& units, unsigned round);
OpStream keccak_f(const UnitSet& units);

/// XORs staged block lanes into the state: lane lanes[k] (sponge index x + 5y)
/// is read from scratch column 25 + k, so at most 10 lanes per call.
OpStream absorb_staged(const UnitSet& units, const std::vector<unsigned>& lanes);

/// Scratch column that absorb_staged reads for batch position k.
constexpr std::uint32_t staging_col(unsigned k) { return UnitLayout::cc(0) + k; }
inline constexpr unsigned kStagingLanes = 10;

}  // namespace hashpim::keccak
