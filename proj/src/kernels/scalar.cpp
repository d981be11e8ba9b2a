#include "kernels_internal.hpp"

namespace hashpim::kernels {

namespace {

template <Gate G>
inline std::uint64_t eval_word(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if constexpr (G == Gate::Init0) return 0;
  if constexpr (G == Gate::Init1) return ~std::uint64_t{0};
  if constexpr (G == Gate::Not) return ~a;
  if constexpr (G == Gate::Nor2) return ~(a | b);
  if constexpr (G == Gate::Nor3) return ~(a | b | c);
  if constexpr (G == Gate::Or2) return a | b;
  if constexpr (G == Gate::And2) return a & b;
}

template <Gate G>
void apply_typed(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                 const std::uint64_t* c, const std::uint64_t* mask, std::size_t n) {
  constexpr std::size_t arity = gate_arity(G);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t va = arity >= 1 ? a[i] : 0;
    const std::uint64_t vb = arity >= 2 ? b[i] : 0;
    const std::uint64_t vc = arity >= 3 ? c[i] : 0;
    const std::uint64_t m = mask[i];
    out[i] = (out[i] & ~m) | (eval_word<G>(va, vb, vc) & m);
  }
}

void apply_gate(Gate gate, std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                const std::uint64_t* c, const std::uint64_t* mask, std::size_t n) {
  switch (gate) {
    case Gate::Init0: return apply_typed<Gate::Init0>(out, a, b, c, mask, n);
    case Gate::Init1: return apply_typed<Gate::Init1>(out, a, b, c, mask, n);
    case Gate::Not: return apply_typed<Gate::Not>(out, a, b, c, mask, n);
    case Gate::Nor2: return apply_typed<Gate::Nor2>(out, a, b, c, mask, n);
    case Gate::Nor3: return apply_typed<Gate::Nor3>(out, a, b, c, mask, n);
    case Gate::Or2: return apply_typed<Gate::Or2>(out, a, b, c, mask, n);
    case Gate::And2: return apply_typed<Gate::And2>(out, a, b, c, mask, n);
  }
}

bool any_uninitialized(const std::uint64_t* mask, const std::uint64_t* ia, const std::uint64_t* ib,
                       const std::uint64_t* ic, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t ok = ~std::uint64_t{0};
    if (ia) ok &= ia[i];
    if (ib) ok &= ib[i];
    if (ic) ok &= ic[i];
    if (mask[i] & ~ok) return true;
  }
  return false;
}

void or_mask(std::uint64_t* dst, const std::uint64_t* mask, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= mask[i];
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, &apply_gate, &any_uninitialized, &or_mask};
  return table;
}

void transpose64(std::uint64_t* a) {
  // Recursive block swap: at width j, swap the off-diagonal j x j blocks.
  std::uint64_t m = 0x00000000FFFFFFFFULL;
  for (unsigned j = 32; j != 0; j >>= 1, m ^= (m << j)) {
    for (unsigned k = 0; k < 64; k = ((k | j) + 1) & ~j) {
      const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
      a[k] ^= t << j;
      a[k | j] ^= t;
    }
  }
}

}  // namespace hashpim::kernels
