// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include "fqgal/kernels.hpp"

namespace fqgal::kernels::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::uint32_t p, std::size_t n) {
    if (s == 0) return;
    if (p == 2) {
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{s} * src[i]) % p);
}

void scale_mod(std::uint32_t* dst, std::uint32_t s, std::uint32_t p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(std::uint64_t{s} * dst[i] % p);
}

}  // namespace fqgal::kernels::scalar
