#include "hashpim/reference/oracle.hpp"

#include <vector>

namespace hashpim::reference {

namespace {

// Bit t of the degree-8 LFSR x^8 + x^6 + x^5 + x^4 + 1.
bool rc_bit(unsigned t) {
  if (t % 255 == 0) return true;
  std::uint8_t r = 1;
  for (unsigned i = 1; i <= t % 255; ++i) {
    const bool out = r & 0x80;
    r = static_cast<std::uint8_t>(r << 1);
    if (out) r ^= 0x71;
  }
  return r & 1;
}

struct Tables {
  std::array<std::uint64_t, 24> rc{};
  std::array<std::array<unsigned, 5>, 5> offset{};
  Tables() {
    for (unsigned ir = 0; ir < 24; ++ir) {
      std::uint64_t v = 0;
      for (unsigned j = 0; j <= 6; ++j)
        if (rc_bit(j + 7 * ir)) v |= std::uint64_t{1} << ((1u << j) - 1);
      rc[ir] = v;
    }
    unsigned x = 1, y = 0;
    for (unsigned t = 0; t < 24; ++t) {
      offset[x][y] = ((t + 1) * (t + 2) / 2) % 64;
      const unsigned nx = y;
      const unsigned ny = (2 * x + 3 * y) % 5;
      x = nx;
      y = ny;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::uint64_t rotl(std::uint64_t v, unsigned n) {
  n &= 63;
  return n == 0 ? v : (v << n) | (v >> (64 - n));
}

std::uint64_t round_constant(unsigned round) { return tables().rc.at(round); }
unsigned rotation_offset(unsigned x, unsigned y) { return tables().offset.at(x).at(y); }

SoftState theta(const SoftState& a) {
  std::array<std::uint64_t, 5> c{};
  for (unsigned x = 0; x < 5; ++x) c[x] = a[x][0] ^ a[x][1] ^ a[x][2] ^ a[x][3] ^ a[x][4];
  SoftState out = a;
  for (unsigned x = 0; x < 5; ++x) {
    const std::uint64_t d = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
    for (unsigned y = 0; y < 5; ++y) out[x][y] ^= d;
  }
  return out;
}

SoftState rho(const SoftState& a) {
  SoftState out{};
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) out[x][y] = rotl(a[x][y], rotation_offset(x, y));
  return out;
}

SoftState inverse_rho(const SoftState& a) {
  SoftState out{};
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) out[x][y] = rotl(a[x][y], 64 - rotation_offset(x, y));
  return out;
}

SoftState pi(const SoftState& a) {
  SoftState out{};
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y) out[y][(2 * x + 3 * y) % 5] = a[x][y];
  return out;
}

SoftState chi(const SoftState& a) {
  SoftState out{};
  for (unsigned x = 0; x < 5; ++x)
    for (unsigned y = 0; y < 5; ++y)
      out[x][y] = a[x][y] ^ (~a[(x + 1) % 5][y] & a[(x + 2) % 5][y]);
  return out;
}

SoftState iota(const SoftState& a, unsigned round) {
  SoftState out = a;
  out[0][0] ^= round_constant(round);
  return out;
}

SoftState round(const SoftState& a, unsigned r) { return iota(chi(pi(rho(theta(a)))), r); }

SoftState keccak_f(SoftState a) {
  for (unsigned r = 0; r < 24; ++r) a = round(a, r);
  return a;
}

Digest256 sha3_256(std::span<const std::uint8_t> message) {
  constexpr std::size_t rate = 136;
  std::vector<std::uint8_t> padded(message.begin(), message.end());
  padded.push_back(0x06);
  while (padded.size() % rate != 0) padded.push_back(0);
  padded.back() |= 0x80;

  SoftState s{};
  for (std::size_t off = 0; off < padded.size(); off += rate) {
    for (std::size_t i = 0; i < rate / 8; ++i) {
      std::uint64_t lane = 0;
      for (unsigned k = 0; k < 8; ++k) lane |= std::uint64_t{padded[off + 8 * i + k]} << (8 * k);
      s[i % 5][i / 5] ^= lane;
    }
    s = keccak_f(s);
  }
  Digest256 d{};
  for (std::size_t i = 0; i < 32; ++i) d[i] = static_cast<std::uint8_t>(s[(i / 8) % 5][(i / 8) / 5] >> (8 * (i % 8)));
  return d;
}

Digest256 sha3_256(std::string_view text) {
  return sha3_256(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

}  // namespace hashpim::reference
