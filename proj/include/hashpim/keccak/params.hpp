#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace hashpim::keccak {

/// Sponge parameters. Only the SHA3-256 instance (w = 64, 24 rounds) is
/// implemented; validate() rejects anything the layout cannot hold.
struct KeccakParams {
  std::uint32_t b = 1600;
  std::uint32_t r = 1088;
  std::uint32_t c = 512;
  std::uint32_t w = 64;
  std::uint32_t n_r = 24;
  std::uint32_t d = 256;

  void validate() const;
  std::uint32_t rate_bytes() const { return r / 8; }
  std::uint32_t rate_lanes() const { return r / w; }
};

/// Lanes in sponge order: index x + 5y.
using LaneArray = std::array<std::uint64_t, 25>;
using Digest = std::array<std::uint8_t, 32>;

inline constexpr std::size_t lane_index(unsigned x, unsigned y) { return x + 5 * y; }

/// Per-lane rotation offsets, [x][y].
struct RotationTable {
  static constexpr std::array<std::array<std::uint8_t, 5>, 5> offsets{{
      {0, 36, 3, 41, 18},
      {1, 44, 10, 45, 2},
      {62, 6, 43, 15, 61},
      {28, 55, 25, 21, 56},
      {27, 20, 39, 8, 14},
  }};
  static constexpr unsigned at(unsigned x, unsigned y) { return offsets[x][y]; }
};

struct RoundConstants {
  static constexpr std::array<std::uint64_t, 24> values{
      0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808AULL, 0x8000000080008000ULL,
      0x000000000000808BULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
      0x000000000000008AULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000AULL,
      0x000000008000808BULL, 0x800000000000008BULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
      0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800AULL, 0x800000008000000AULL,
      0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
  };
};

/// pad10*1 with the SHA-3 domain bits (0x06 ... 0x80); always at least one block.
std::vector<std::vector<std::uint8_t>> pad_message(std::span<const std::uint8_t> message,
                                                   const KeccakParams& params = {});

/// Block bytes as little-endian lanes (rate lanes only; the rest zero).
LaneArray block_lanes(std::span<const std::uint8_t> block, const KeccakParams& params = {});

/// First d bits of the state in lane/byte order.
Digest squeeze(const LaneArray& state, const KeccakParams& params = {});

}  // namespace hashpim::keccak
