#include <array>
#include <random>

#include "doctest.h"
#include "hashpim/kernels.hpp"

using namespace hashpim;

namespace {

std::array<std::uint64_t, 64> naive_transpose(const std::array<std::uint64_t, 64>& in) {
  std::array<std::uint64_t, 64> out{};
  for (int r = 0; r < 64; ++r)
    for (int c = 0; c < 64; ++c)
      if ((in[r] >> c) & 1) out[c] |= std::uint64_t{1} << r;
  return out;
}

struct IsaGuard {
  kernels::Isa saved = kernels::active().isa;
  ~IsaGuard() { kernels::select(saved); }
};

}  // namespace

TEST_CASE("transpose64 matches the bitwise definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<std::uint64_t, 64> tile{};
    for (auto& w : tile) w = rng();
    const auto want = naive_transpose(tile);
    kernels::transpose64(tile.data());
    CHECK(tile == want);
  }
  std::array<std::uint64_t, 64> one{};
  one[3] = std::uint64_t{1} << 40;
  kernels::transpose64(one.data());
  CHECK(one[40] == (std::uint64_t{1} << 3));
}

TEST_CASE("scalar and AVX2 kernels agree") {
  const auto* avx = kernels::avx2_kernels();
  if (!avx) {
    MESSAGE("AVX2 unavailable; only the scalar path is exercised");
    return;
  }
  const auto& sc = kernels::scalar_kernels();
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 3u, 4u, 7u, 16u, 17u}) {
    std::vector<std::uint64_t> a(n), b(n), c(n), m(n), o(n);
    for (int g = 0; g < static_cast<int>(kGateCount); ++g) {
      for (auto* v : {&a, &b, &c, &m, &o})
        for (auto& w : *v) w = rng();
      auto o1 = o;
      auto o2 = o;
      sc.apply_gate(static_cast<Gate>(g), o1.data(), a.data(), b.data(), c.data(), m.data(), n);
      avx->apply_gate(static_cast<Gate>(g), o2.data(), a.data(), b.data(), c.data(), m.data(), n);
      CHECK(o1 == o2);
    }
    auto d1 = o;
    auto d2 = o;
    sc.or_mask(d1.data(), m.data(), n);
    avx->or_mask(d2.data(), m.data(), n);
    CHECK(d1 == d2);

    std::vector<std::uint64_t> full(n, ~std::uint64_t{0});
    CHECK_FALSE(sc.any_uninitialized(m.data(), full.data(), full.data(), nullptr, n));
    CHECK_FALSE(avx->any_uninitialized(m.data(), full.data(), full.data(), nullptr, n));
    auto hole = full;
    hole[n - 1] = ~(m[n - 1] & (0 - m[n - 1]));  // clear the lowest masked bit
    const bool expect = m[n - 1] != 0;
    CHECK(sc.any_uninitialized(m.data(), full.data(), hole.data(), nullptr, n) == expect);
    CHECK(avx->any_uninitialized(m.data(), full.data(), hole.data(), nullptr, n) == expect);
  }
}

TEST_CASE("kernel selection can be forced") {
  IsaGuard guard;
  CHECK(kernels::select(kernels::Isa::Scalar));
  CHECK(kernels::active().isa == kernels::Isa::Scalar);
  if (kernels::avx2_kernels()) {
    CHECK(kernels::select(kernels::Isa::Avx2));
    CHECK(kernels::active().isa == kernels::Isa::Avx2);
  } else {
    CHECK_FALSE(kernels::select(kernels::Isa::Avx2));
  }
}
