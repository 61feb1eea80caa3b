// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fqgal::intmath {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// base^exp, or nullopt on 64-bit overflow.
std::optional<u64> checked_pow(u64 base, unsigned exp);

std::optional<u64> checked_mul(u64 a, u64 b);

u64 gcd(u64 a, u64 b);

/// lcm, or nullopt on overflow.
std::optional<u64> checked_lcm(u64 a, u64 b);

struct Bezout {
    i128 g;
    i128 x;
    i128 y;
};

/// x*a + y*b = g with g = gcd(a, b).
Bezout ext_gcd(i128 a, i128 b);

bool is_prime(u64 n);

/// Prime factorization, ascending primes.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// If n = p^k for a prime p, returns (p, k).
std::optional<std::pair<u64, unsigned>> prime_power(u64 n);

/// Least k >= 0 with base^k >= n.
unsigned ceil_log(u64 base, u64 n);

}  // namespace fqgal::intmath
