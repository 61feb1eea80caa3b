// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Row kernels for dense linear algebra over prime fields. Entries are stored
// as uint32 residues in [0, p). A scalar reference and an AVX2 variant exist
// for every kernel; the variant is picked once at startup from CPU features
// and can be overridden for equivalence testing.

namespace fqgal::kernels {

enum class Isa { scalar, avx2 };

/// Largest modulus the vector kernels accept: p^2 must fit in 16 bits.
inline constexpr std::uint32_t kMaxVectorPrime = 251;

using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::uint32_t p,
                        std::size_t n);
using ScaleFn = void (*)(std::uint32_t* dst, std::uint32_t s, std::uint32_t p, std::size_t n);

namespace scalar {
// dst[i] = (dst[i] + s * src[i]) mod p
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::uint32_t p, std::size_t n);
// dst[i] = s * dst[i] mod p
void scale_mod(std::uint32_t* dst, std::uint32_t s, std::uint32_t p, std::size_t n);
}  // namespace scalar

#if FQGAL_HAVE_AVX2
namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::uint32_t p, std::size_t n);
void scale_mod(std::uint32_t* dst, std::uint32_t s, std::uint32_t p, std::size_t n);
}  // namespace avx2
#endif

bool cpu_has_avx2();

/// Currently selected instruction set.
Isa active_isa();

/// Forces an instruction set; returns false (and keeps the current one) if
/// the request is not supported by this build or CPU.
bool set_isa(Isa isa);

const char* isa_name(Isa isa);

/// Dispatching entry points. Fall back to scalar for p > kMaxVectorPrime.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p);

}  // namespace fqgal::kernels
