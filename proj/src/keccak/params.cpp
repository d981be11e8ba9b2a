#include "hashpim/keccak/params.hpp"

#include <string>

#include "hashpim/errors.hpp"

namespace hashpim::keccak {

void KeccakParams::validate() const {
  if (b != r + c) throw InputError("keccak params: b must equal r + c");
  if (b != 25 * w) throw InputError("keccak params: b must equal 25 w");
  if (w != 64 || n_r != 24 || d != 256) {
    throw InputError("keccak params: only the 64-bit lane, 24-round, 256-bit digest instance is supported");
  }
  if (r == 0 || r % w != 0) throw InputError("keccak params: r must be a positive multiple of w");
  if (d > r) throw InputError("keccak params: digest longer than the rate");
}

std::vector<std::vector<std::uint8_t>> pad_message(std::span<const std::uint8_t> message,
                                                   const KeccakParams& params) {
  params.validate();
  const std::size_t rate = params.rate_bytes();
  const std::size_t blocks = message.size() / rate + 1;
  std::vector<std::vector<std::uint8_t>> out(blocks, std::vector<std::uint8_t>(rate, 0));
  for (std::size_t i = 0; i < message.size(); ++i) out[i / rate][i % rate] = message[i];
  out.back()[message.size() % rate] ^= 0x06;
  out.back()[rate - 1] ^= 0x80;
  return out;
}

LaneArray block_lanes(std::span<const std::uint8_t> block, const KeccakParams& params) {
  if (block.size() != params.rate_bytes()) {
    throw InputError("block of " + std::to_string(block.size()) + " bytes, rate is " +
                     std::to_string(params.rate_bytes()));
  }
  LaneArray lanes{};
  for (std::size_t i = 0; i < block.size(); ++i) {
    lanes[i / 8] |= std::uint64_t{block[i]} << (8 * (i % 8));
  }
  return lanes;
}

Digest squeeze(const LaneArray& state, const KeccakParams& params) {
  (void)params;
  Digest d{};
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<std::uint8_t>(state[i / 8] >> (8 * (i % 8)));
  return d;
}

}  // namespace hashpim::keccak
