// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqgal/field.hpp"

namespace fqgal {

/// Dense univariate polynomial over a finite field, ascending coefficients.
/// The coefficient vector is kept trimmed: the zero polynomial is empty and
/// every other polynomial has a nonzero leading coefficient.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
    static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }
    /// Coefficients given as signed integers reduced into the prime subfield.
    static Poly from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Elem eval(Elem a) const;
    Poly derivative() const;
    Poly monic() const;
    Poly scale(Elem s) const;
    Poly shift(std::size_t n) const;  // multiply by x^n
    Poly pow(std::uint64_t e) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Comma text form of integer encodings, "1,1,0,1,1"; "0" for zero.
    std::string to_string() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);

/// Canonical ordering: by degree, then by the coefficient tuple read as a
/// base-|F| integer (most significant coefficient first).
bool canonical_less(const Poly& a, const Poly& b);

/// Parses the comma text form; negative entries are reduced into F_p.
Poly parse_poly(const FieldPtr& field, const std::string& text);

struct Factorization {
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, multiplicity
    Elem unit = 1;

    Poly product(const FieldPtr& field) const;
};

/// Complete factorization by square-free, distinct-degree and equal-degree
/// splitting. The equal-degree stage draws from a generator seeded by `seed`;
/// factors are returned in canonical order so the result does not depend on it.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

/// Distinct roots in the coefficient field, ascending encoding.
std::vector<Elem> roots(const Poly& f, std::uint64_t seed = 0);

/// Monic reciprocal x^d g(0)^{-1} g(1/x).
Poly star(const Poly& g);

enum class ConstantSign { plus_one, minus_one, other };

struct SelfReciprocity {
    bool self_reciprocal = false;
    ConstantSign constant = ConstantSign::other;
};

SelfReciprocity self_reciprocity(const Poly& g);
inline bool is_self_reciprocal(const Poly& g) { return self_reciprocity(g).self_reciprocal; }

/// h(x) = x^m f(x + 1/x) for monic f of degree m.
Poly cap_lift(const Poly& f);

/// The monic f of degree m with g = x^m f(x + 1/x), for monic self-reciprocal
/// g of degree 2m with g(0) = 1.
Poly cap_drop(const Poly& g);

struct MultiplicityProfile {
    std::vector<std::pair<Poly, unsigned>> factors;
    unsigned mult_x_minus_1 = 0;
    unsigned mult_x_plus_1 = 0;
    unsigned mult_x = 0;
    bool squarefree = false;
    bool derivative_zero = false;
};

MultiplicityProfile multiplicity_profile(const Poly& f);

enum class CountMode { formula, enumerate };

/// Number of monic f of degree n over F_q with f(0) = 0 and no repeated
/// irreducible factor. Enumeration needs q^(n-1) <= budget.
std::uint64_t count_squarefree_vanishing(unsigned n, std::uint64_t q, CountMode mode,
                                         std::uint64_t budget = std::uint64_t{1} << 22);

/// h self-reciprocal, (x-1)^2 exactly divides h, and h/(x-1)^2 is square-free.
bool omega_predicate(const Poly& h);

/// Monic polynomials of the given degree in enumeration order of the lower
/// coefficients (a_0 least significant).
Poly monic_from_index(const FieldPtr& field, unsigned degree, std::uint64_t index);

}  // namespace fqgal
