#pragma once

// Plain software Keccak-f[1600] and SHA3-256. Shares no code or tables with the
// in-memory implementation: the round constants come from the LFSR and the
// rotation offsets from the (x, y) walk, both computed at startup.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace hashpim::reference {

/// Lanes indexed [x][y].
using SoftState = std::array<std::array<std::uint64_t, 5>, 5>;
using Digest256 = std::array<std::uint8_t, 32>;

SoftState theta(const SoftState& a);
SoftState rho(const SoftState& a);
SoftState pi(const SoftState& a);
SoftState chi(const SoftState& a);
SoftState iota(const SoftState& a, unsigned round);
SoftState round(const SoftState& a, unsigned round);
SoftState keccak_f(SoftState a);

/// Rotates every lane back by its offset: undoes rho.
SoftState inverse_rho(const SoftState& a);

std::uint64_t round_constant(unsigned round);
unsigned rotation_offset(unsigned x, unsigned y);
std::uint64_t rotl(std::uint64_t v, unsigned n);

Digest256 sha3_256(std::span<const std::uint8_t> message);
Digest256 sha3_256(std::string_view text);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace hashpim::reference
