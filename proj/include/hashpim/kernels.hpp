#pragma once

// Word-parallel kernels behind the crossbar simulator. One bit of a word is one
// cell; a gate op touching many lines becomes a masked bitwise update over a
// span of words. A portable scalar version is always present and an AVX2
// version is picked at runtime when the CPU supports it.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "hashpim/types.hpp"

namespace hashpim::kernels {

enum class Isa : std::uint8_t { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// out[i] = (out[i] & ~mask[i]) | (gate(a[i], b[i], c[i]) & mask[i]) for i < n.
/// Operands the gate does not use may be null.
using ApplyGateFn = void (*)(Gate gate, std::uint64_t* out, const std::uint64_t* a,
                             const std::uint64_t* b, const std::uint64_t* c,
                             const std::uint64_t* mask, std::size_t n);

/// Returns true if some masked bit is clear in any of the non-null init spans.
using AnyUninitFn = bool (*)(const std::uint64_t* mask, const std::uint64_t* init_a,
                             const std::uint64_t* init_b, const std::uint64_t* init_c,
                             std::size_t n);

/// dst[i] |= mask[i].
using OrMaskFn = void (*)(std::uint64_t* dst, const std::uint64_t* mask, std::size_t n);

struct KernelTable {
  Isa isa;
  ApplyGateFn apply_gate;
  AnyUninitFn any_uninitialized;
  OrMaskFn or_mask;
};

const KernelTable& scalar_kernels();

/// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The table used by the simulator. Defaults to the best supported ISA;
/// HASHPIM_ISA=scalar in the environment forces the scalar path.
const KernelTable& active();

/// Overrides the active table (tests use this to compare paths). Returns false
/// if the requested ISA is unavailable.
bool select(Isa isa);

/// Transposes a 64x64 bit tile in place: bit c of word r moves to bit r of word c.
void transpose64(std::uint64_t* tile);

}  // namespace hashpim::kernels
