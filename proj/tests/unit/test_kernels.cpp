// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"
#include "fqgal/kernels.hpp"

using namespace fqgal::kernels;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
    return v;
}

}  // namespace

TEST_CASE("scalar kernels against a direct formula") {
    std::mt19937_64 rng(1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 65521u}) {
        for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 100u}) {
            auto d = random_row(rng, n, p), s = random_row(rng, n, p);
            const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
            auto expect = d;
            for (std::size_t i = 0; i < n; ++i) expect[i] = static_cast<std::uint32_t>((d[i] + std::uint64_t{c} * s[i]) % p);
            scalar::axpy_mod(d.data(), s.data(), c, p, n);
            CHECK(d == expect);
            for (auto& x : expect) x = static_cast<std::uint32_t>(std::uint64_t{x} * c % p);
            scalar::scale_mod(d.data(), c, p, n);
            CHECK(d == expect);
        }
    }
}

#if FQGAL_HAVE_AVX2
TEST_CASE("avx2 kernels equal the scalar reference") {
    if (!cpu_has_avx2()) return;
    std::mt19937_64 rng(2);
    for (std::uint32_t p = 2; p <= kMaxVectorPrime; ++p) {
        bool prime = true;
        for (std::uint32_t d = 2; d * d <= p; ++d) prime &= p % d != 0;
        if (!prime) continue;
        for (std::size_t n : {1u, 5u, 8u, 16u, 17u, 64u, 203u}) {
            auto d = random_row(rng, n, p), s = random_row(rng, n, p);
            for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
                auto ref = d, vec = d;
                scalar::axpy_mod(ref.data(), s.data(), c, p, n);
                avx2::axpy_mod(vec.data(), s.data(), c, p, n);
                CHECK(ref == vec);
                scalar::scale_mod(ref.data(), c, p, n);
                avx2::scale_mod(vec.data(), c, p, n);
                CHECK(ref == vec);
            }
        }
    }
}
#endif

TEST_CASE("dispatch honours the selected isa") {
    const Isa saved = active_isa();
    set_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    std::vector<std::uint32_t> d{1, 2, 0}, s{2, 2, 2};
    axpy_mod(d, s, 1, 3);
    CHECK(d == std::vector<std::uint32_t>{0, 1, 2});
    set_isa(saved);
    CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
}
