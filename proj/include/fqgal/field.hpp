// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fqgal {

/// A field element in its canonical integer encoding: coordinates c_0..c_{k-1}
/// with respect to the power basis 1, a, ..., a^{k-1} read as the base-p integer
/// sum c_i p^i. Elements carry no reference to their field; every container
/// that holds elements (Poly, Matrix, ...) also holds the owning FieldPtr.
using Elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_{p^k} presented as F_p[x]/(modulus).
///
/// Immutable after construction. Arithmetic uses log/antilog tables for
/// fields of order at most 2^16, carry-less shifts for p = 2, and
/// coordinate arithmetic otherwise. The order must fit in 63 bits.
class Field {
public:
    /// Builds F_{p^k}. Without an explicit modulus the canonical one is used:
    /// the monic irreducible of degree k whose coefficient tuple (a_0..a_{k-1}),
    /// read as a base-p integer, is smallest. For k = 1 the modulus is stored
    /// as the placeholder [0, 1].
    static FieldPtr make(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus = {});

    /// F_q from a prime power q, canonical modulus.
    static FieldPtr make_order(std::uint64_t q);

    std::uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t order() const { return order_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool is_prime_field() const { return k_ == 1; }

    bool same_as(const Field& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    bool contains(Elem a) const { return a < order_; }
    static constexpr Elem zero() { return 0; }
    static constexpr Elem one() { return 1; }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;

    /// The class of x in F_p[x]/(modulus); equals 1 for prime fields.
    Elem generator() const { return k_ == 1 ? 1 : p_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// a^(base_q^e) where base_q is a power of p.
    Elem frobenius_power(Elem a, std::uint64_t base_q, std::uint64_t e) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Elem a) const;

    std::vector<std::uint32_t> coords(Elem a) const;
    Elem from_coords(std::span<const std::uint32_t> c) const;

    /// "p^k" plus "mod=..." for k > 1.
    std::string describe() const;

private:
    Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

    enum class Mode { prime, table, binary, general };

    Elem mul_slow(Elem a, Elem b) const;
    Elem add_digits(Elem a, Elem b, bool subtract) const;
    void build_tables();

    std::uint32_t p_;
    unsigned k_;
    std::uint64_t order_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> pow_p_;
    Mode mode_ = Mode::general;
    std::uint64_t binary_reduce_ = 0;  // modulus bits below x^k, p = 2
    std::vector<std::uint32_t> exp_table_;
    std::vector<std::uint32_t> log_table_;
};

/// Parses "p^k", "q" (a prime power) and an optional modulus list.
FieldPtr parse_field(const std::string& q_text, const std::string& modulus_text = "");

/// Checks irreducibility over F_p of a monic coefficient list (ascending).
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Field homomorphism F_{p^a} -> F_{p^b} with a | b determined by the image of
/// the source generator. The image is the smallest-encoding root of the source
/// modulus in the target, so the embedding is deterministic.
class Embedding {
public:
    Embedding(FieldPtr source, FieldPtr target, Elem generator_image);

    const FieldPtr& source() const { return source_; }
    const FieldPtr& target() const { return target_; }
    Elem generator_image() const { return generator_image_; }

    Elem operator()(Elem a) const;

    /// Inverse image for elements of the embedded subfield.
    std::optional<Elem> preimage(Elem b) const;

private:
    FieldPtr source_;
    FieldPtr target_;
    Elem generator_image_;
    std::vector<Elem> basis_images_;
};

/// Deterministic embedding; identity map when source and target coincide.
Embedding embed(const FieldPtr& source, const FieldPtr& target);

}  // namespace fqgal
