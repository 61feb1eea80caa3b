// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "fqgal/kernels.hpp"

namespace fqgal::kernels {

bool cpu_has_avx2() {
#if FQGAL_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

Isa detect() {
    if (const char* env = std::getenv("FQGAL_ISA"); env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) {
    if (isa == Isa::avx2 && !cpu_has_avx2()) return false;
    current().store(isa, std::memory_order_relaxed);
    return true;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s, std::uint32_t p) {
#if FQGAL_HAVE_AVX2
    if (p <= kMaxVectorPrime && active_isa() == Isa::avx2) {
        avx2::axpy_mod(dst.data(), src.data(), s, p, dst.size());
        return;
    }
#endif
    scalar::axpy_mod(dst.data(), src.data(), s, p, dst.size());
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p) {
#if FQGAL_HAVE_AVX2
    if (p <= kMaxVectorPrime && active_isa() == Isa::avx2) {
        avx2::scale_mod(dst.data(), s, p, dst.size());
        return;
    }
#endif
    scalar::scale_mod(dst.data(), s, p, dst.size());
}

}  // namespace fqgal::kernels
