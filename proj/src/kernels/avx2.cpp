#include <immintrin.h>

#include "kernels_internal.hpp"

namespace hashpim::kernels {

namespace {

template <Gate G>
inline __m256i eval_vec(__m256i a, __m256i b, __m256i c) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  if constexpr (G == Gate::Init0) return _mm256_setzero_si256();
  if constexpr (G == Gate::Init1) return ones;
  if constexpr (G == Gate::Not) return _mm256_xor_si256(a, ones);
  if constexpr (G == Gate::Nor2) return _mm256_xor_si256(_mm256_or_si256(a, b), ones);
  if constexpr (G == Gate::Nor3)
    return _mm256_xor_si256(_mm256_or_si256(_mm256_or_si256(a, b), c), ones);
  if constexpr (G == Gate::Or2) return _mm256_or_si256(a, b);
  if constexpr (G == Gate::And2) return _mm256_and_si256(a, b);
}

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

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

template <Gate G>
void apply_typed(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                 const std::uint64_t* c, const std::uint64_t* mask, std::size_t n) {
  constexpr std::size_t arity = gate_arity(G);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = arity >= 1 ? load(a + i) : zero;
    const __m256i vb = arity >= 2 ? load(b + i) : zero;
    const __m256i vc = arity >= 3 ? load(c + i) : zero;
    const __m256i m = load(mask + i);
    const __m256i o = load(out + i);
    const __m256i r = _mm256_or_si256(_mm256_andnot_si256(m, o),
                                      _mm256_and_si256(eval_vec<G>(va, vb, vc), m));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) {
    const std::uint64_t va = arity >= 1 ? a[i] : 0;
    const std::uint64_t vb = arity >= 2 ? b[i] : 0;
    const std::uint64_t vc = arity >= 3 ? c[i] : 0;
    out[i] = (out[i] & ~mask[i]) | (eval_word<G>(va, vb, vc) & mask[i]);
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
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i ok = ones;
    if (ia) ok = _mm256_and_si256(ok, load(ia + i));
    if (ib) ok = _mm256_and_si256(ok, load(ib + i));
    if (ic) ok = _mm256_and_si256(ok, load(ic + i));
    if (!_mm256_testz_si256(load(mask + i), _mm256_xor_si256(ok, ones))) return true;
  }
  for (; i < n; ++i) {
    std::uint64_t ok = ~std::uint64_t{0};
    if (ia) ok &= ia[i];
    if (ib) ok &= ib[i];
    if (ic) ok &= ic[i];
    if (mask[i] & ~ok) return true;
  }
  return false;
}

void or_mask(std::uint64_t* dst, const std::uint64_t* mask, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(load(dst + i), load(mask + i)));
  }
  for (; i < n; ++i) dst[i] |= mask[i];
}

}  // namespace

namespace detail {

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::Avx2, &apply_gate, &any_uninitialized, &or_mask};
  return table;
}

}  // namespace detail

}  // namespace hashpim::kernels
