// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/kernels.hpp"

#include <immintrin.h>

namespace fqgal::kernels::avx2 {

namespace {

// x mod p for 0 <= x < 2^16 and p <= 251. The quotient estimate
// (x * ceil(2^16/p)) >> 16 is exact or one too large, so a single
// conditional add of p repairs the remainder.
inline __m256i reduce16(__m256i x, __m256i magic, __m256i vp) {
    __m256i qhat = _mm256_srli_epi32(_mm256_mullo_epi32(x, magic), 16);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(qhat, vp));
    __m256i neg = _mm256_srai_epi32(r, 31);
    return _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
}

inline std::uint32_t magic_for(std::uint32_t p) { return ((1u << 16) + p - 1) / p; }

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::uint32_t p, std::size_t n) {
    if (s == 0) return;
    std::size_t i = 0;
    if (p == 2) {
        for (; i + 8 <= n; i += 8) {
            __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, v));
        }
        for (; i < n; ++i) dst[i] ^= src[i];
        return;
    }
    const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i magic = _mm256_set1_epi32(static_cast<int>(magic_for(p)));
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(v, vs));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce16(x, magic, vp));
    }
    for (; i < n; ++i) dst[i] = (dst[i] + s * src[i]) % p;
}

void scale_mod(std::uint32_t* dst, std::uint32_t s, std::uint32_t p, std::size_t n) {
    std::size_t i = 0;
    const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i magic = _mm256_set1_epi32(static_cast<int>(magic_for(p)));
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce16(_mm256_mullo_epi32(d, vs), magic, vp));
    }
    for (; i < n; ++i) dst[i] = s * dst[i] % p;
}

}  // namespace fqgal::kernels::avx2
