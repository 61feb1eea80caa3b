// Copyright 2026 The fqgal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqgal/field.hpp"
#include "fqgal/poly.hpp"

namespace fqgal {

/// Polynomial in x whose coefficients are polynomials in t over F_q.
/// Coefficient i (a Poly in t) multiplies x^i; trailing zero x-coefficients
/// are trimmed.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}
    BiPoly(FieldPtr field, std::vector<Poly> x_coeffs);

    /// f(x) with no t-dependence.
    static BiPoly from_x(const Poly& f);
    /// t * g(x).
    static BiPoly t_times(const Poly& g);
    /// c(t) * x^i.
    static BiPoly term(const Poly& c, std::size_t i);

    const FieldPtr& field() const { return field_; }
    int degree_x() const { return static_cast<int>(c_.size()) - 1; }
    int degree_t() const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<Poly>& x_coeffs() const { return c_; }
    Poly x_coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Poly(field_); }
    /// Monic in x: leading x-coefficient is the constant 1.
    bool is_monic_x() const { return !c_.empty() && c_.back().is_one(); }

    /// Transposed view: p_j(x) with P = sum_j p_j(x) t^j.
    std::vector<Poly> t_coeffs() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b);

    /// Multiply by x^n.
    BiPoly shift_x(std::size_t n) const;

    /// x-coefficients in comma form joined by ';', e.g. "1,0,1;0;1".
    std::string to_string() const;

private:
    void trim();
    FieldPtr field_;
    std::vector<Poly> c_;
};

BiPoly parse_bipoly(const FieldPtr& field, const std::string& text);

/// Substitutes t = mu (an element of the embedding's target) coefficient-wise.
Poly specialize(const BiPoly& p, Elem mu, const Embedding& emb);
/// Substitutes t = mu for mu in the coefficient field itself.
Poly specialize(const BiPoly& p, Elem mu);

/// True iff the leading x-coefficient vanishes at t = mu.
bool leading_vanishes(const BiPoly& p, Elem mu, const Embedding& emb);

/// Degree in t of P, which bounds the number of irreducible factors over
/// F_q(t) when P is monic in x and its t-coefficients p_j(x) have no common
/// factor. Throws HypothesisFailed("relatively-prime") otherwise and
/// MalformedInput when P is not monic in x.
unsigned factor_count_bound(const BiPoly& p);

enum class CertStatus { certified, not_applicable, malformed };

const char* cert_status_name(CertStatus s);

/// Evidence that f(x) + t g(x) is irreducible over F_q(t): gcd(f, g) = 1 and
/// the sum is nonconstant in x. The criterion is one-directional, so a
/// failing gcd yields not_applicable rather than a negative claim.
struct IrreducibilityCertificate {
    CertStatus status = CertStatus::malformed;
    Poly f;
    Poly g;
    Poly gcd;
    std::string reason;
};

IrreducibilityCertificate irreducible_f_plus_tg(const Poly& f, const Poly& g);

inline bool exact_product_equal(const BiPoly& a, const BiPoly& b) { return a == b; }

}  // namespace fqgal
